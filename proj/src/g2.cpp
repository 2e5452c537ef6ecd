#include "brauer/g2.hpp"

#include <algorithm>
#include <memory>

namespace brauer {

G2Algebra::G2Algebra() {
    rs_ = std::make_unique<RootSystem>(RootSystem::build(SystemType::G2Folded, 2));
    W_ = std::make_unique<WeylGroup>(*rs_);
    pres_ = Presentation::for_type("G2");
    if (W_->size() != 12) throw std::logic_error("G2Algebra: W(G2) must have order 12");

    z_[0] = W_->word_to_element({1, 0, 1, 0, 1});
    z_[1] = W_->word_to_element({0, 1, 0, 1, 0});

    for (int i = 0; i < 2; ++i) {
        int beta = rs_->simple_index(i);
        N_[i] = W_->set_stabilizer({beta});
        if (N_[i].size() != 4) throw std::logic_error("G2Algebra: stabilizer must have order 4");
        if (!std::binary_search(N_[i].begin(), N_[i].end(), z_[i]))
            throw std::logic_error("G2Algebra: z_i must stabilize beta_i");
        D_[i] = W_->left_coset_reps(N_[i]);
        if (D_[i].size() != 3) throw std::logic_error("G2Algebra: three cosets expected");
    }
    K_[0] = {W_->identity()};
    K_[1] = {W_->identity(), z_[1]};

    conj_of_root_.assign(rs_->positive_roots().size(), {-1, -1});
    for (int i = 0; i < 2; ++i) {
        int beta = rs_->simple_index(i);
        for (int u = 0; u < 3; ++u) {
            auto [idx, sign] = W_->act_on_root(D_[i][u], beta);
            if (sign != 1) throw std::logic_error("G2Algebra: coset rep sends beta_i negative");
            if (conj_of_root_[idx].first >= 0)
                throw std::logic_error("G2Algebra: duplicate conjugate root");
            conj_of_root_[idx] = {i, u};
        }
    }

    build_rows();

    // basis: 12 group classes, then the i=0 and i=1 sandwich classes
    for (int a = 0; a < 12; ++a) {
        NF f;
        f.group = true;
        f.a = a;
        basis_.push_back(f);
    }
    for (int u = 0; u < 3; ++u)
        for (int w = 0; w < 3; ++w) basis_.push_back({false, 0, u, 0, 0, w});
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 2; ++v)
            for (int w = 0; w < 3; ++w) basis_.push_back({false, 0, u, 1, v, w});
    if ((int)basis_.size() != kRank) throw std::logic_error("G2Algebra: basis size");

    build_table();
}

void G2Algebra::build_rows() {
    rows_.assign(rs_->positive_roots().size(), {Row{0, -1, -1, -1}, Row{0, -1, -1, -1}});
    DerivedRelationSet rows = g2_product_rows(pres_);
    for (const auto& rel : rows.items) {
        // lhs = c e_i c^-1 e_j, rhs = a1 e_m a2
        std::vector<uint8_t> c_word, mid_word;
        int i = -1, j = -1;
        size_t pos = 0;
        while (pos < rel.lhs.size() && rel.lhs[pos].kind == SymKind::R)
            c_word.push_back((uint8_t)rel.lhs[pos++].node);
        i = rel.lhs[pos++].node;
        while (pos + 1 < rel.lhs.size()) mid_word.push_back((uint8_t)rel.lhs[pos++].node);
        if (rel.lhs[pos].kind != SymKind::E) throw std::logic_error("row: malformed lhs");
        j = rel.lhs[pos].node;

        int c = W_->word_to_element(c_word);
        if (W_->word_to_element(mid_word) != W_->inverse(c))
            throw std::logic_error("row: middle word is not the inverse conjugator");
        if (std::find(D_[i].begin(), D_[i].end(), c) == D_[i].end())
            throw std::logic_error("row: conjugator is not a coset representative");
        auto [beta, sign] = W_->act_on_root(c, rs_->simple_index(i));
        if (sign != 1) throw std::logic_error("row: conjugate root not positive");

        std::vector<uint8_t> a1_word, a2_word;
        int m = -1;
        pos = 0;
        while (pos < rel.rhs.size() && rel.rhs[pos].kind == SymKind::R)
            a1_word.push_back((uint8_t)rel.rhs[pos++].node);
        m = rel.rhs[pos++].node;
        while (pos < rel.rhs.size()) a2_word.push_back((uint8_t)rel.rhs[pos++].node);

        rows_[beta][j] = {rel.delta_shift, W_->word_to_element(a1_word), m,
                          W_->word_to_element(a2_word)};
    }
    for (size_t b = 0; b < rows_.size(); ++b)
        for (int j = 0; j < 2; ++j)
            if (rows_[b][j].a1 < 0) throw std::logic_error("row table incomplete");
}

DerivedRelationSet G2Algebra::row_relations() const { return g2_product_rows(pres_); }

int G2Algebra::kfactor(int i, int n) const {
    // n e_i = e_i kfactor(i, n) for n in N_i: r_i is absorbed outright; the
    // long stabilizer word z_0 is absorbed by e_0 while z_1 passes through
    // e_1 unchanged, which is exactly why K_0 = {1} and K_1 = {1, z_1}.
    int ri = W_->generator(i);
    if (n == W_->identity() || n == ri) return W_->identity();
    if (n == z_[i] || n == W_->multiply(ri, z_[i])) return K_[i].back();
    throw std::logic_error("G2Algebra: element outside the stabilizer");
}

std::pair<int, int> G2Algebra::left_absorb(int g, int i) const {
    for (int u = 0; u < 3; ++u) {
        int n = W_->multiply(W_->inverse(D_[i][u]), g);
        if (std::binary_search(N_[i].begin(), N_[i].end(), n)) return {u, kfactor(i, n)};
    }
    throw std::logic_error("G2Algebra: left coset decomposition failed");
}

std::pair<int, int> G2Algebra::right_absorb(int i, int g) const {
    int gi = W_->inverse(g);
    for (int w = 0; w < 3; ++w) {
        int n = W_->multiply(W_->inverse(D_[i][w]), gi);
        if (!std::binary_search(N_[i].begin(), N_[i].end(), n)) continue;
        int k = kfactor(i, W_->inverse(n));
        int v = (int)(std::find(K_[i].begin(), K_[i].end(), k) - K_[i].begin());
        if (v >= (int)K_[i].size()) throw std::logic_error("G2Algebra: k-factor outside K_i");
        return {v, w};
    }
    throw std::logic_error("G2Algebra: right coset decomposition failed");
}

int G2Algebra::nf_index(const NF& f) const {
    if (f.group) return f.a;
    if (f.node == 0) return 12 + f.u * 3 + f.w;
    return 21 + (f.u * 2 + f.v) * 3 + f.w;
}

G2Algebra::Weighted G2Algebra::mul_nf(const NF& x, const NF& y) const {
    if (x.group && y.group) {
        NF f;
        f.group = true;
        f.a = W_->multiply(x.a, y.a);
        return {0, nf_index(f)};
    }
    if (x.group) {
        int g = W_->multiply(x.a, D_[y.node][y.u]);
        auto [u2, kadd] = left_absorb(g, y.node);
        int right = W_->multiply(kadd, W_->multiply(K_[y.node][y.v], W_->inverse(D_[y.node][y.w])));
        auto [v2, w2] = right_absorb(y.node, right);
        return {0, nf_index({false, 0, u2, y.node, v2, w2})};
    }
    if (y.group) {
        int right =
            W_->multiply(K_[x.node][x.v], W_->multiply(W_->inverse(D_[x.node][x.w]), y.a));
        auto [v2, w2] = right_absorb(x.node, right);
        return {0, nf_index({false, 0, x.u, x.node, v2, w2})};
    }
    // u1 e_i v1 w1 * u2 e_j v2 w2 = d^t * (u1 r a1) e_m (a2 v2 w2), where
    // r = v1 w1 u2 and e_{r^-1 beta_i} e_j = d^t a1 e_m a2.
    int i = x.node, j = y.node;
    int r = W_->multiply(K_[i][x.v],
                         W_->multiply(W_->inverse(D_[i][x.w]), D_[j][y.u]));
    auto [gamma, sign] = W_->act_on_root(W_->inverse(r), rs_->simple_index(i));
    (void)sign;  // e_beta = e_{-beta}
    const Row& row = rows_[gamma][j];
    int left = W_->multiply(D_[i][x.u], W_->multiply(r, row.a1));
    auto [u2, kadd] = left_absorb(left, row.m);
    int right = W_->multiply(
        kadd, W_->multiply(row.a2, W_->multiply(K_[j][y.v], W_->inverse(D_[j][y.w]))));
    auto [v2, w2] = right_absorb(row.m, right);
    return {row.t, nf_index({false, 0, u2, row.m, v2, w2})};
}

void G2Algebra::build_table() {
    table_.resize(kRank);
    for (int x = 0; x < kRank; ++x)
        for (int y = 0; y < kRank; ++y) table_[x][y] = mul_nf(basis_[x], basis_[y]);
}

G2Algebra::Weighted G2Algebra::multiply(int x, int y) const { return table_.at(x).at(y); }

int G2Algebra::identity_index() const { return 0; }

int G2Algebra::generator_basis(const GenSymbol& g) const {
    int idx = rs_->node_of_label(g.node);
    if (g.kind == SymKind::R) {
        NF f;
        f.group = true;
        f.a = W_->generator(idx);
        return nf_index(f);
    }
    if (g.kind == SymKind::E) return nf_index({false, 0, 0, idx, 0, 0});
    throw std::invalid_argument("generator_basis: r or e symbol expected");
}

G2Algebra::Weighted G2Algebra::normalize(const MonoidWord& word) const {
    Weighted cur{0, identity_index()};
    for (const auto& g : word) {
        switch (g.kind) {
            case SymKind::Delta: ++cur.delta; break;
            case SymKind::DeltaInv: --cur.delta; break;
            default: {
                int gi = generator_basis(g);
                Weighted step = table_[cur.index][gi];
                cur = {cur.delta + step.delta, step.index};
            }
        }
    }
    return cur;
}

int G2Algebra::e_beta(int psi_index) const {
    auto [i, u] = conj_of_root_.at(psi_index);
    if (i < 0) throw std::domain_error("e_beta: not a positive root index");
    return nf_index({false, 0, u, i, 0, u});
}

int G2Algebra::op_of(int idx) const {
    const NF& f = basis_.at(idx);
    if (f.group) {
        NF g;
        g.group = true;
        g.a = W_->inverse(f.a);
        return nf_index(g);
    }
    return nf_index({false, 0, f.w, f.node, f.v, f.u});
}

std::string G2Algebra::basis_name(int idx) const {
    const NF& f = basis_.at(idx);
    if (f.group) return W_->word_name(f.a);
    std::string s;
    if (D_[f.node][f.u] != W_->identity()) s += W_->word_name(D_[f.node][f.u]) + " ";
    s += "e" + std::to_string(f.node);
    if (K_[f.node][f.v] != W_->identity()) s += " " + W_->word_name(K_[f.node][f.v]);
    int wi = W_->inverse(D_[f.node][f.w]);
    if (wi != W_->identity()) s += " " + W_->word_name(wi);
    return s;
}

G2Algebra::VerifyReport G2Algebra::verify() const {
    VerifyReport rep;
    rep.basis_count = (int)basis_.size();
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        if (rep.failures.size() < 20) rep.failures.push_back(msg);
    };
    if (rep.basis_count != kRank) fail("basis count is not 39");

    // associativity over every ordered triple
    for (int x = 0; x < kRank; ++x)
        for (int y = 0; y < kRank; ++y) {
            Weighted xy = table_[x][y];
            for (int z = 0; z < kRank; ++z) {
                Weighted l = table_[xy.index][z];
                Weighted yz = table_[y][z];
                Weighted r = table_[x][yz.index];
                ++rep.assoc_triples;
                if (l.index != r.index || xy.delta + l.delta != yz.delta + r.delta)
                    fail("associativity fails at (" + std::to_string(x) + "," +
                         std::to_string(y) + "," + std::to_string(z) + ")");
            }
        }

    // defining relations, the derived consequences and the product rows,
    // all with exact delta exponents
    auto check_relation = [&](const Relation& rel) {
        Weighted l = normalize(rel.lhs);
        Weighted r = normalize(rel.rhs);
        ++rep.relations_checked;
        if (l.index != r.index || l.delta != r.delta + rel.delta_shift)
            fail("relation " + rel.tag + " fails in the table");
    };
    for (const auto& rel : pres_.relations) check_relation(rel);
    for (const auto& rel : derived_g2(pres_).items) check_relation(rel);
    for (const auto& rel : g2_product_rows(pres_).items) check_relation(rel);

    // op: involution, fixes generators, reverses products
    rep.op_involution = true;
    rep.op_antiautomorphism = true;
    for (int x = 0; x < kRank; ++x)
        if (op_of(op_of(x)) != x) rep.op_involution = false;
    for (const GenSymbol& g : {R(0), R(1), E(0), E(1)}) {
        int gi = generator_basis(g);
        if (op_of(gi) != gi) rep.op_involution = false;
    }
    for (int x = 0; x < kRank && rep.op_antiautomorphism; ++x)
        for (int y = 0; y < kRank; ++y) {
            Weighted xy = table_[x][y];
            Weighted rev = table_[op_of(y)][op_of(x)];
            if (rev.index != op_of(xy.index) || rev.delta != xy.delta) {
                rep.op_antiautomorphism = false;
                break;
            }
        }
    if (!rep.op_involution) fail("op is not an involution fixing the generators");
    if (!rep.op_antiautomorphism) fail("op does not reverse products");

    // ideal chain: group layer / e1 layer / e0 layer
    auto ideal_span = [&](int seed) {
        std::set<int> span{seed};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(span.begin(), span.end());
            for (int s : cur)
                for (int x = 0; x < kRank; ++x) {
                    if (span.insert(table_[x][s].index).second) grew = true;
                    if (span.insert(table_[s][x].index).second) grew = true;
                }
        }
        return span;
    };
    int t1 = normalize(parse_word("r1 r0 e1 r0 r1")).index;
    int t0 = normalize(parse_word("e0 r1 r0 e1 r0 r1")).index;
    auto I1 = ideal_span(t1);
    auto I0 = ideal_span(t0);
    rep.layer_group = kRank - (int)I1.size();
    rep.layer_e1 = (int)I1.size() - (int)I0.size();
    rep.layer_e0 = (int)I0.size();
    rep.ideal_chain_ok = rep.layer_group == 12 && rep.layer_e1 == 18 && rep.layer_e0 == 9 &&
                         std::includes(I1.begin(), I1.end(), I0.begin(), I0.end());
    if (!rep.ideal_chain_ok) fail("ideal chain layers are not (12, 18, 9)");

    // e_beta^2 = d^kappa(beta) e_beta, kappa = 3 short / 1 long
    rep.e_beta_quadratic_ok = true;
    for (int p = 0; p < (int)rs_->positive_roots().size(); ++p) {
        int eb = e_beta(p);
        Weighted sq = table_[eb][eb];
        Rational norm = rs_->bilinear(p, p);
        long kappa = norm == Rational(2) ? 1 : 3;
        if (sq.index != eb || sq.delta != kappa) rep.e_beta_quadratic_ok = false;
    }
    if (!rep.e_beta_quadratic_ok) fail("e_beta quadratic relations fail");

    return rep;
}

}  // namespace brauer
