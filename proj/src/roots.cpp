#include "brauer/roots.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace brauer {

long height(const Root& r) {
    long h = 0;
    for (long c : r.simple_coords) h += c;
    return h;
}

FoldingMap FoldingMap::d4_triality() {
    FoldingMap f;
    const Rational h(Int(1), Int(2));
    const Rational mh = -h;
    // column j is the image of e_j
    f.m_ = {{{mh, mh, mh, h}, {h, h, mh, h}, {h, mh, h, h}, {mh, h, h, h}}};
    return f;
}

Vec FoldingMap::apply(const Vec& v) const {
    if (v.size() != 4) throw std::invalid_argument("FoldingMap: expected a vector in R^4");
    Vec r(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m_[i][j] * v[j];
    return r;
}

Vec FoldingMap::reynolds(const Vec& v) const {
    Vec s1 = apply(v);
    Vec s2 = apply(s1);
    return Rational(Int(1), Int(3)) * (v + s1 + s2);
}

RootSystem RootSystem::build(const std::string& label) {
    if (label == "G2" || label == "g2") return build(SystemType::G2Folded, 2);
    if (label.size() < 2) throw std::invalid_argument("RootSystem: bad label " + label);
    int rank = std::stoi(label.substr(1));
    switch (label[0]) {
        case 'A':
        case 'a': return build(SystemType::A, rank);
        case 'D':
        case 'd': return build(SystemType::D, rank);
        default: throw std::invalid_argument("RootSystem: unsupported type " + label);
    }
}

RootSystem RootSystem::build(SystemType t, int rank) {
    RootSystem rs;
    rs.type_ = t;
    rs.rank_ = rank;
    auto eps = [](int dim, int i, int sign = 1) {
        Vec v(dim);
        v[i] = Rational(sign);
        return v;
    };
    switch (t) {
        case SystemType::A: {
            if (rank < 1 || rank > 8) throw std::invalid_argument("RootSystem: A rank must be 1..8");
            rs.ambient_ = rank + 1;
            for (int i = 0; i < rank; ++i)
                rs.simple_.push_back({eps(rs.ambient_, i + 1) - eps(rs.ambient_, i), {}});
            break;
        }
        case SystemType::D: {
            if (rank < 4 || rank > 8) throw std::invalid_argument("RootSystem: D rank must be 4..8");
            rs.ambient_ = rank;
            rs.simple_.push_back({eps(rank, 0) + eps(rank, 1), {}});
            for (int i = 1; i < rank; ++i)
                rs.simple_.push_back({eps(rank, i) - eps(rank, i - 1), {}});
            break;
        }
        case SystemType::G2Folded: {
            if (rank != 2) throw std::invalid_argument("RootSystem: G2 has rank 2");
            rs.ambient_ = 4;
            RootSystem d4 = build(SystemType::D, 4);
            FoldingMap f = FoldingMap::d4_triality();
            Vec beta0 = f.reynolds(d4.simple_[0].coords);  // (a1+a2+a4)/3
            Vec beta1 = f.reynolds(d4.simple_[2].coords);  // a3
            rs.simple_.push_back({beta0, {}});
            rs.simple_.push_back({beta1, {}});
            break;
        }
    }
    rs.close_and_sort();
    return rs;
}

std::string RootSystem::label() const {
    switch (type_) {
        case SystemType::A: return "A" + std::to_string(rank_);
        case SystemType::D: return "D" + std::to_string(rank_);
        case SystemType::G2Folded: return "G2";
    }
    return "?";
}

Vec RootSystem::reflect(const Vec& v, const Vec& root) const {
    Rational c = Rational(2) * dot(v, root) / dot(root, root);
    return v - c * root;
}

void RootSystem::close_and_sort() {
    // Orbit closure of the simple roots under all simple reflections.
    std::set<std::vector<std::string>> seen;
    auto key = [](const Vec& v) {
        std::vector<std::string> k;
        for (auto& x : v) k.push_back(x.to_string());
        return k;
    };
    std::vector<Vec> all;
    for (auto& s : simple_) {
        if (seen.insert(key(s.coords)).second) all.push_back(s.coords);
    }
    for (size_t head = 0; head < all.size(); ++head) {
        Vec v = all[head];
        for (auto& s : simple_) {
            Vec w = reflect(v, s.coords);
            if (seen.insert(key(w)).second) all.push_back(w);
        }
    }
    positive_.clear();
    for (auto& v : all) {
        Root r{v, solve_simple_coords(v)};
        bool nonneg = std::all_of(r.simple_coords.begin(), r.simple_coords.end(),
                                  [](long c) { return c >= 0; });
        bool nonpos = std::all_of(r.simple_coords.begin(), r.simple_coords.end(),
                                  [](long c) { return c <= 0; });
        if (!nonneg && !nonpos)
            throw std::logic_error("RootSystem: root with mixed simple coordinates");
        if (nonneg) positive_.push_back(std::move(r));
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        long ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a.simple_coords < b.simple_coords;
    });
    simple_index_.assign(rank_, -1);
    for (int i = 0; i < rank_; ++i) {
        auto pos = root_of(simple_[i].coords);
        if (pos.second != 1) throw std::logic_error("RootSystem: simple root not positive");
        simple_index_[i] = pos.first;
        simple_[i].simple_coords = positive_[pos.first].simple_coords;
    }
}

std::vector<long> RootSystem::solve_simple_coords(const Vec& v) const {
    // Solve sum_i x_i * simple_i = v by Gaussian elimination over Q.
    int n = rank_, m = ambient_;
    std::vector<Vec> a(m, Vec(n + 1));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) a[r][c] = simple_[c].coords[r];
        a[r][n] = v[r];
    }
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int r = row; r < m; ++r)
            if (!a[r][col].is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        Rational inv = Rational(1) / a[row][col];
        for (int c = col; c <= n; ++c) a[row][c] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (int c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < m; ++r)
        if (!a[r][n].is_zero()) throw std::domain_error("RootSystem: vector outside root lattice span");
    std::vector<long> x(n, 0);
    for (size_t k = 0; k < pivot_col.size(); ++k) {
        const Rational& val = a[k][n];
        if (!val.is_integer()) throw std::domain_error("RootSystem: non-integral simple coordinates");
        x[pivot_col[k]] = val.numerator().get_si();
    }
    return x;
}

std::optional<std::pair<int, int>> RootSystem::find_root(const Vec& v) const {
    for (size_t i = 0; i < positive_.size(); ++i) {
        if (positive_[i].coords == v) return std::make_pair((int)i, 1);
        if (is_zero(positive_[i].coords + v)) return std::make_pair((int)i, -1);
    }
    return std::nullopt;
}

std::pair<int, int> RootSystem::root_of(const Vec& v) const {
    auto r = find_root(v);
    if (!r) throw std::domain_error("RootSystem: vector is not a root");
    return *r;
}

std::string RootSystem::root_name(int idx) const {
    const Root& r = positive_.at(idx);
    std::string s = "[";
    for (size_t i = 0; i < r.simple_coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r.simple_coords[i]);
    }
    return s + "]";
}

bool RootSystem::nodes_adjacent(int i, int j) const {
    return !dot(simple_.at(i).coords, simple_.at(j).coords).is_zero();
}

int RootSystem::node_of_label(int label) const {
    int idx = label - node_base();
    if (idx < 0 || idx >= rank_)
        throw std::invalid_argument("RootSystem: node label out of range: " +
                                    std::to_string(label));
    return idx;
}

}  // namespace brauer
