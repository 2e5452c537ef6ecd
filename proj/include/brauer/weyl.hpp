#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "brauer/roots.hpp"

namespace brauer {

/// A Weyl group element stored by its signed action on the positive roots:
/// image[p] = +-(q+1) means w(positive_root p) = +-positive_root q.
struct WeylElement {
    std::vector<int16_t> image;
    std::vector<uint8_t> word;  // shortest generator word, lexicographically least

    bool operator==(const WeylElement& o) const { return image == o.image; }
};

/// The full Weyl group of a root system, enumerated by breadth-first closure
/// over the simple reflections. Elements are referred to by dense indices;
/// index 0 is the identity. Plain BFS is all we need at order <= ~10^3.
class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& rs, std::size_t max_size = 1000000);

    const RootSystem& system() const { return *rs_; }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& element(int idx) const { return elements_.at(idx); }

    int identity() const { return 0; }
    int generator(int node) const { return gen_index_.at(node); }

    int index_of(const std::vector<int16_t>& image) const;  // -1 if absent
    int multiply(int a, int b) const;  // (ab)(x) = a(b(x))
    int inverse(int a) const;
    int word_to_element(const std::vector<uint8_t>& w) const;
    std::string word_name(int idx) const;  // e.g. "r0r1r0", "1" for the identity

    // Positive representatives of w(B) for a set B of positive-root indices.
    std::set<int> act_on_rootset(int w, const std::set<int>& B) const;
    // Signed action on a single positive root: (root index, sign).
    std::pair<int, int> act_on_root(int w, int root_idx) const;

    // The reflection in an arbitrary positive root, as a group element.
    int reflection(int root_idx) const;

    std::vector<int> subgroup_closure(const std::vector<int>& gens) const;  // sorted
    std::vector<int> set_stabilizer(const std::set<int>& B) const;          // sorted
    // Minimal-length (ties broken by word) representatives of the left cosets
    // w*H, in order of discovery; H given as a sorted element list.
    std::vector<int> left_coset_reps(const std::vector<int>& subgroup) const;

private:
    const RootSystem* rs_;
    std::vector<WeylElement> elements_;
    std::map<std::vector<int16_t>, int> index_;
    std::vector<int> gen_index_;
    std::vector<int16_t> compose(const std::vector<int16_t>& a, const std::vector<int16_t>& b) const;
};

}  // namespace brauer
