#pragma once

#include <map>
#include <string>
#include <vector>

#include "brauer/words.hpp"

namespace brauer {

/// Oriented relation lhs = d^delta_shift * rhs. Relation words never contain
/// delta symbols; the shift carries the whole d-weight.
struct Relation {
    MonoidWord lhs;
    MonoidWord rhs;
    int delta_shift = 0;
    std::string tag;
};

struct Bond {
    int i, j;
    int multiplicity;  // 1 single, 2 double, 3 triple; for 2/3 the pair (i,j)
                       // is ordered as the relation block uses it
};

/// A relation table for one of the supported diagram types. Node labels
/// follow the usual conventions: A_n, D_n, F4 use 1..n; B_n, C_n, G2 use
/// 0..n-1 with the multiple bond at the low end.
class Presentation {
public:
    static Presentation for_type(const std::string& label);

    std::string name;
    std::vector<int> nodes;
    std::map<int, int> kappa;
    std::vector<Bond> bonds;
    std::vector<Relation> relations;

    bool adjacent(int i, int j) const;
    int bond_multiplicity(int i, int j) const;  // 0 when not adjacent
    int node_position(int node) const;          // dense index of a node label

    const Relation& relation(const std::string& tag) const;
};

struct DerivedRelationSet {
    std::string name;
    std::vector<Relation> items;
};

/// Consequence relations for the simply-laced types: the two-generator chain
/// identities plus the three-node sandwich identities.
DerivedRelationSet derived_simply_laced(const Presentation& p);
/// Consequence relations around a double bond.
DerivedRelationSet derived_double_bond(const Presentation& p);
/// Consequence relations around the G2 triple bond, ending with the
/// closure-collapse identity r1 r0 e1 r0 r1 e0 = d e0.
DerivedRelationSet derived_g2(const Presentation& p);

std::vector<DerivedRelationSet> derived_sets_for(const Presentation& p);

/// The twelve two-sided reductions e_beta * e_j -> d^t a1 e_m a2 used by the
/// G2 normal form; each is provable from the presentation.
DerivedRelationSet g2_product_rows(const Presentation& p);

/// op(relation): both sides reversed. The anti-involution fixes generators.
Relation op_relation(const Relation& r);

}  // namespace brauer
