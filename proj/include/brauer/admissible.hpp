#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "brauer/weyl.hpp"

namespace brauer {

// Root sets are std::set<int> of indices into rs.positive_roots().

bool mutually_orthogonal(const RootSystem& rs, const std::set<int>& B);

enum class AdmDefinition { OrbitForm, ClosureForm };

/// The two equivalent admissibility tests for simply-laced systems.
/// OrbitForm needs the full Weyl group; ClosureForm is local. Inputs must be
/// mutually orthogonal sets of positive roots (std::domain_error otherwise).
bool is_admissible(const RootSystem& rs, const std::set<int>& B, AdmDefinition def,
                   const WeylGroup* W = nullptr);

/// Admissible closure of X in a simply-laced system: saturate with the rule
/// that adds 2*gamma + gamma_1 + gamma_2 + gamma_3 (as its positive
/// representative) for distinct gamma_i in X and roots gamma meeting all
/// three with inner product -1. Throws std::domain_error if X is not
/// mutually orthogonal; std::runtime_error if saturation breaks
/// orthogonality (no admissible superset exists).
std::set<int> closure(const RootSystem& rs, const std::set<int>& X);

/// Minimal member of `collection` containing X, for systems whose admissible
/// collection is given explicitly (the folded case). std::runtime_error if
/// X has no admissible superset.
std::set<int> closure_in_collection(const std::vector<std::set<int>>& collection,
                                    const std::set<int>& X);

/// All admissible subsets of the positive roots (closure-form test).
std::vector<std::set<int>> all_admissible(const RootSystem& rs);

/// Partition of a collection of root sets into W-orbits; each orbit is listed
/// with its members sorted, orbits ordered by their lex-least member.
std::vector<std::vector<std::set<int>>> orbit_partition(const WeylGroup& W,
                                                        const std::vector<std::set<int>>& sets);

struct RaisingEdge {
    int from, to;
    int gen;
};

struct OrbitPoset {
    std::vector<std::set<int>> elements;
    std::vector<RaisingEdge> raising_edges;
    std::vector<long> heights;  // ht(B) = d - l, l = raising distance to the maximum
    int max_index = -1;
    std::vector<int> maximal_indices;       // elements with no raising move
    std::vector<std::string> diagnostics;   // ambiguity or reachability flags
};

/// The W-orbit of an admissible set with its raising structure.
OrbitPoset orbit_and_hasse(const WeylGroup& W, const std::set<int>& B0);

std::string hasse_dot(const RootSystem& rs, const OrbitPoset& poset);

struct FoldedAdmissibles {
    std::vector<std::set<int>> sets;             // subsets of Psi+ (G2), incl. the empty set
    std::vector<std::vector<std::set<int>>> orbits;  // W(G2)-orbit partition of sets \ {empty}
};

/// The admissible collection of the folded G2 system: images under the
/// averaging projection of the sigma-invariant admissible D4 sets.
FoldedAdmissibles folded_admissibles(const RootSystem& d4, const FoldingMap& fold,
                                     const RootSystem& g2, const WeylGroup& Wg2);

/// sigma as a permutation of the positive roots of D4.
std::vector<int> sigma_root_permutation(const RootSystem& d4, const FoldingMap& fold);

/// Image of a D4 root set under the averaging projection, as Psi+ indices.
std::set<int> reynolds_image(const RootSystem& d4, const FoldingMap& fold,
                             const RootSystem& g2, const std::set<int>& B);

std::string set_name(const RootSystem& rs, const std::set<int>& B);

}  // namespace brauer
