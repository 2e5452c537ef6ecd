#pragma once

#include <set>
#include <string>
#include <vector>

#include "brauer/admissible.hpp"
#include "brauer/presentations.hpp"

namespace brauer {

/// The Brauer monoid action on the admissible collection of a simply-laced
/// system: r_i acts through the Weyl group, delta acts trivially, and e_i
/// acts by the three-case rule (keep B; adjoin alpha_i and close; or reflect
/// through a non-orthogonal member).
class AdmissibleAction {
public:
    AdmissibleAction(const RootSystem& rs, const WeylGroup& W);

    const RootSystem& system() const { return *rs_; }

    std::set<int> apply_generator(const GenSymbol& g, const std::set<int>& B) const;
    // Right-to-left: the last symbol acts first.
    std::set<int> apply_word(const MonoidWord& w, const std::set<int>& B) const;

    struct Mismatch {
        std::string tag;
        std::set<int> input;
        std::set<int> lhs_result, rhs_result;
    };
    /// Checks every relation of p against every set in the collection (delta
    /// weights are invisible to the action). Node labels map to simple roots
    /// through node order.
    std::vector<Mismatch> check_relations(const Presentation& p,
                                          const std::vector<std::set<int>>& collection) const;

    /// Verifies that the third case of the e_i action does not depend on the
    /// chosen non-orthogonal member; returns descriptions of any violations.
    std::vector<std::string> third_case_independence(
        const std::vector<std::set<int>>& collection) const;

private:
    const RootSystem* rs_;
    const WeylGroup* W_;
    std::set<int> apply_e(int node, const std::set<int>& B, int forced_beta = -1) const;
};

}  // namespace brauer
