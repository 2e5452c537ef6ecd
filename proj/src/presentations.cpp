#include "brauer/presentations.hpp"

#include <algorithm>
#include <stdexcept>

namespace brauer {

namespace {

std::string tag2(const std::string& base, int i) { return base + "." + std::to_string(i); }
std::string tag3(const std::string& base, int i, int j) {
    return base + "." + std::to_string(i) + "." + std::to_string(j);
}
std::string tag4(const std::string& base, int i, int j, int k) {
    return tag3(base, i, j) + "." + std::to_string(k);
}

void add_node_relations(Presentation& p) {
    for (int i : p.nodes) {
        p.relations.push_back({{R(i), R(i)}, {}, 0, tag2("r2", i)});
        p.relations.push_back({{R(i), E(i)}, {E(i)}, 0, tag2("re", i)});
        p.relations.push_back({{E(i), R(i)}, {E(i)}, 0, tag2("er", i)});
        p.relations.push_back({{E(i), E(i)}, {E(i)}, p.kappa.at(i), tag2("e2", i)});
    }
}

void add_commuting_relations(Presentation& p) {
    for (size_t a = 0; a < p.nodes.size(); ++a)
        for (size_t b = a + 1; b < p.nodes.size(); ++b) {
            int i = p.nodes[a], j = p.nodes[b];
            if (p.adjacent(i, j)) continue;
            p.relations.push_back({{R(i), R(j)}, {R(j), R(i)}, 0, tag3("rr_comm", i, j)});
            p.relations.push_back({{E(i), R(j)}, {R(j), E(i)}, 0, tag3("er_comm", i, j)});
            p.relations.push_back({{E(j), R(i)}, {R(i), E(j)}, 0, tag3("er_comm", j, i)});
            p.relations.push_back({{E(i), E(j)}, {E(j), E(i)}, 0, tag3("ee_comm", i, j)});
        }
}

void add_single_bond(Presentation& p, int i, int j) {
    p.relations.push_back({{R(i), R(j), R(i)}, {R(j), R(i), R(j)}, 0, tag3("braid", i, j)});
    // both orientations of r r e = e e
    p.relations.push_back({{R(j), R(i), E(j)}, {E(i), E(j)}, 0, tag3("rre", i, j)});
    p.relations.push_back({{R(i), R(j), E(i)}, {E(j), E(i)}, 0, tag3("rre", j, i)});
    p.relations.push_back({{R(i), E(j), R(i)}, {R(j), E(i), R(j)}, 0, tag3("rer", i, j)});
}

void add_double_bond(Presentation& p, int i, int j) {
    p.relations.push_back(
        {{R(j), R(i), R(j), R(i)}, {R(i), R(j), R(i), R(j)}, 0, tag3("braid4", i, j)});
    p.relations.push_back({{R(j), R(i), E(j)}, {R(i), E(j)}, 0, tag3("d_rre", i, j)});
    p.relations.push_back(
        {{R(j), E(i), R(j), E(i)}, {E(i), E(j), E(i)}, 0, tag3("d_rere", i, j)});
    p.relations.push_back(
        {{R(j), R(i), R(j), E(i)}, {E(i), R(j), R(i), R(j)}, 0, tag3("d_rrre", i, j)});
    p.relations.push_back({{E(j), R(i), E(j)}, {E(j)}, 1, tag3("d_ere", i, j)});
    p.relations.push_back({{E(j), E(i), E(j)}, {E(j)}, 1, tag3("d_eee", i, j)});
    p.relations.push_back({{E(j), R(i), R(j)}, {E(j), R(i)}, 0, tag3("d_err", i, j)});
    p.relations.push_back({{E(j), E(i), R(j)}, {E(j), E(i)}, 0, tag3("d_eer", i, j)});
}

void add_triple_bond(Presentation& p, int i, int j) {
    p.relations.push_back({{R(i), E(j), E(i)}, {R(j), E(i)}, 0, tag3("t_ree", i, j)});
    p.relations.push_back({{E(i), E(j), R(i)}, {E(i), R(j)}, 0, tag3("t_eer", i, j)});
    p.relations.push_back(
        {{E(j), R(i), E(j), R(i), E(j)}, {E(j)}, 0, tag3("t_erere", i, j)});
    p.relations.push_back(
        {{E(j), R(i), E(j), R(i), R(j)}, {E(j), R(i), R(j), R(i)}, 0, tag3("t_ererr", i, j)});
    p.relations.push_back({{E(i), R(j), E(i)}, {E(i)}, 2, tag3("t_ere", i, j)});
    p.relations.push_back(
        {{R(j), R(i), E(j), R(i), E(j)}, {R(i), R(j), R(i), E(j)}, 0, tag3("t_rrere", i, j)});
    MonoidWord order12 = power({R(j), R(i)}, 6);
    p.relations.push_back({order12, {}, 0, tag3("t_braid12", i, j)});
}

}  // namespace

bool Presentation::adjacent(int i, int j) const { return bond_multiplicity(i, j) > 0; }

int Presentation::bond_multiplicity(int i, int j) const {
    for (const auto& b : bonds)
        if ((b.i == i && b.j == j) || (b.i == j && b.j == i)) return b.multiplicity;
    return 0;
}

int Presentation::node_position(int node) const {
    auto it = std::find(nodes.begin(), nodes.end(), node);
    if (it == nodes.end()) throw std::invalid_argument("Presentation: unknown node");
    return (int)(it - nodes.begin());
}

const Relation& Presentation::relation(const std::string& tag) const {
    for (const auto& r : relations)
        if (r.tag == tag) return r;
    throw std::invalid_argument("Presentation: no relation tagged " + tag);
}

Presentation Presentation::for_type(const std::string& label) {
    Presentation p;
    p.name = label;
    char fam = (char)std::toupper(label[0]);
    int rank = label.size() > 1 ? std::stoi(label.substr(1)) : 0;
    if (label == "G2" || label == "g2") {
        p.nodes = {0, 1};
        p.kappa = {{0, 3}, {1, 1}};
        p.bonds = {{0, 1, 3}};
    } else if (fam == 'A' || fam == 'D') {
        if (fam == 'A' && (rank < 1 || rank > 8))
            throw std::invalid_argument("Presentation: A rank must be 1..8");
        if (fam == 'D' && (rank < 4 || rank > 8))
            throw std::invalid_argument("Presentation: D rank must be 4..8");
        for (int i = 1; i <= rank; ++i) {
            p.nodes.push_back(i);
            p.kappa[i] = 1;
        }
        if (fam == 'A') {
            for (int i = 1; i < rank; ++i) p.bonds.push_back({i, i + 1, 1});
        } else {
            p.bonds.push_back({1, 3, 1});
            p.bonds.push_back({2, 3, 1});
            for (int i = 3; i < rank; ++i) p.bonds.push_back({i, i + 1, 1});
        }
    } else if (fam == 'B' || fam == 'C') {
        if (rank < 2 || rank > 5) throw std::invalid_argument("Presentation: B/C rank must be 2..5");
        for (int i = 0; i < rank; ++i) p.nodes.push_back(i);
        if (fam == 'C') {
            p.kappa[0] = 1;
            for (int i = 1; i < rank; ++i) p.kappa[i] = 2;
            p.bonds.push_back({0, 1, 2});  // block order (0,1)
        } else {
            p.kappa[0] = 2;
            for (int i = 1; i < rank; ++i) p.kappa[i] = 1;
            p.bonds.push_back({1, 0, 2});  // block order (1,0)
        }
        for (int i = 1; i + 1 < rank; ++i) p.bonds.push_back({i, i + 1, 1});
    } else if (label == "F4" || label == "f4") {
        p.nodes = {1, 2, 3, 4};
        p.kappa = {{1, 2}, {2, 2}, {3, 1}, {4, 1}};
        p.bonds = {{1, 2, 1}, {3, 2, 2}, {3, 4, 1}};  // double bond block order (3,2)
    } else {
        throw std::invalid_argument("Presentation: unsupported type " + label);
    }

    add_node_relations(p);
    add_commuting_relations(p);
    for (const auto& b : p.bonds) {
        if (b.multiplicity == 1)
            add_single_bond(p, std::min(b.i, b.j), std::max(b.i, b.j));
        else if (b.multiplicity == 2)
            add_double_bond(p, b.i, b.j);
        else
            add_triple_bond(p, b.i, b.j);
    }
    return p;
}

DerivedRelationSet derived_simply_laced(const Presentation& p) {
    DerivedRelationSet s;
    s.name = p.name + " chain consequences";
    std::vector<std::pair<int, int>> pairs;
    for (int i : p.nodes)
        for (int j : p.nodes)
            if (i != j && p.bond_multiplicity(i, j) == 1) pairs.push_back({i, j});
    for (auto [i, j] : pairs) {
        s.items.push_back({{E(i), R(j), R(i)}, {E(i), E(j)}, 0, tag3("sl_err", i, j)});
        s.items.push_back({{R(j), E(i), E(j)}, {R(i), E(j)}, 0, tag3("sl_ree", i, j)});
        s.items.push_back({{E(i), R(j), E(i)}, {E(i)}, 0, tag3("sl_ere", i, j)});
        s.items.push_back({{E(j), E(i), R(j)}, {E(j), R(i)}, 0, tag3("sl_eer", i, j)});
        s.items.push_back({{E(i), E(j), E(i)}, {E(i)}, 0, tag3("sl_eee", i, j)});
    }
    for (int j : p.nodes)
        for (int i : p.nodes)
            for (int k : p.nodes) {
                if (i == k || i == j || k == j) continue;
                if (p.bond_multiplicity(i, j) != 1 || p.bond_multiplicity(j, k) != 1) continue;
                if (p.adjacent(i, k)) continue;
                s.items.push_back({{E(j), E(i), R(k), E(j)},
                                   {E(j), R(i), E(k), E(j)},
                                   0,
                                   tag4("sl_eere", i, j, k)});
                s.items.push_back({{E(j), R(i), R(k), E(j)},
                                   {E(j), E(i), E(k), E(j)},
                                   0,
                                   tag4("sl_erre", i, j, k)});
            }
    return s;
}

DerivedRelationSet derived_double_bond(const Presentation& p) {
    DerivedRelationSet s;
    s.name = p.name + " double-bond consequences";
    for (const auto& b : p.bonds) {
        if (b.multiplicity != 2) continue;
        int i = b.i, j = b.j;
        s.items.push_back({{R(j), E(i), E(j)}, {E(i), E(j)}, 0, tag3("db_ree", i, j)});
        s.items.push_back(
            {{E(i), E(j), E(i)}, {E(i), R(j), E(i)}, 0, tag3("db_eee_ere", i, j)});
        s.items.push_back({{E(j), R(i), R(j), E(i)}, {E(j), E(i)}, 0, tag3("db_erre", i, j)});
        s.items.push_back(
            {{R(i), R(j), E(i), R(j)}, {R(j), E(i), R(j), R(i)}, 0, tag3("db_rrer", i, j)});
        s.items.push_back(
            {{E(i), R(j), E(i), R(j)}, {E(i), E(j), E(i)}, 0, tag3("db_erer", i, j)});
    }
    return s;
}

DerivedRelationSet derived_g2(const Presentation& p) {
    DerivedRelationSet s;
    s.name = "G2 consequences";
    for (const auto& b : p.bonds) {
        if (b.multiplicity != 3) continue;
        int i = b.i, j = b.j;
        s.items.push_back({{R(i), R(j), E(i)}, {E(j), E(i)}, 0, tag3("g2_rre", i, j)});
        s.items.push_back({{E(i), R(j), R(i)}, {E(i), E(j)}, 0, tag3("g2_err", i, j)});
        s.items.push_back({{E(i), E(j), E(i)}, {E(i)}, 2, tag3("g2_eee", i, j)});
        s.items.push_back({{R(j), R(i), E(j), R(i), R(j), E(i)}, {E(i)}, 1,
                           tag3("g2_collapse", i, j)});
    }
    return s;
}

std::vector<DerivedRelationSet> derived_sets_for(const Presentation& p) {
    std::vector<DerivedRelationSet> out;
    bool simply_laced = true;
    for (const auto& b : p.bonds)
        if (b.multiplicity > 1) simply_laced = false;
    if (simply_laced) {
        out.push_back(derived_simply_laced(p));
        return out;
    }
    for (const auto& b : p.bonds) {
        if (b.multiplicity == 2) {
            out.push_back(derived_double_bond(p));
            break;
        }
    }
    for (const auto& b : p.bonds) {
        if (b.multiplicity == 3) {
            out.push_back(derived_g2(p));
            break;
        }
    }
    return out;
}

DerivedRelationSet g2_product_rows(const Presentation& p) {
    if (p.bond_multiplicity(0, 1) != 3)
        throw std::invalid_argument("g2_product_rows: G2 presentation expected");
    DerivedRelationSet s;
    s.name = "G2 e_beta * e_j reductions";
    auto w = [](const std::string& t) { return parse_word(t); };
    auto add = [&](const std::string& lhs, const std::string& rhs, int shift,
                   const std::string& tag) {
        s.items.push_back({w(lhs), w(rhs), shift, "row_" + tag});
    };
    // products against e0
    add("e0 e0", "e0", 3, "b0.e0");
    add("r1 e0 r1 e0", "r1 e0", 2, "sb1.e0");
    add("r0 r1 e0 r1 r0 e0", "r0 r1 e0", 2, "sb2.e0");
    add("e1 e0", "r0 r1 e0", 0, "b1.e0");
    add("r0 e1 r0 e0", "r1 e0", 0, "lb1.e0");
    add("r1 r0 e1 r0 r1 e0", "e0", 1, "lb2.e0");
    // products against e1
    add("e0 e1", "e0 r1 r0", 0, "b0.e1");
    add("r1 e0 r1 e1", "r1 e0 r1 r0", 0, "sb1.e1");
    add("r0 r1 e0 r1 r0 e1", "r0 r1 e0 r1 r0", 1, "sb2.e1");
    add("e1 e1", "e1", 1, "b1.e1");
    add("r0 e1 r0 e1", "r1 r0 r1 r0 e1", 0, "lb1.e1");
    add("r1 r0 e1 r0 r1 e1", "r0 r1 r0 e1", 0, "lb2.e1");
    return s;
}

Relation op_relation(const Relation& r) {
    return {reversed(r.lhs), reversed(r.rhs), r.delta_shift, r.tag + ".op"};
}

}  // namespace brauer
