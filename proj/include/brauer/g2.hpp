#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "brauer/prover.hpp"
#include "brauer/weyl.hpp"

namespace brauer {

/// Concrete rank-39 model of the type-G2 Brauer algebra over Z[d,d^-1].
///
/// Basis classes are the normal forms d^k * a (a in W(G2), 12 classes) and
/// d^k * u e_i v w with u in D_i, v in K_i, w the inverse of a D_i
/// representative (9 classes for i = 0, 18 for i = 1). Every product of two
/// classes is a single d-monomial times a class; the full 39x39 table is
/// built once and verified by the suite in verify().
class G2Algebra {
public:
    G2Algebra();

    struct NF {
        bool group = true;
        int a = 0;                          // group case: W(G2) element index
        int u = 0, node = 0, v = 0, w = 0;  // sandwich case: D_i / K_i / D_i^op indices
        bool operator==(const NF& o) const {
            if (group != o.group) return false;
            return group ? a == o.a
                         : (u == o.u && node == o.node && v == o.v && w == o.w);
        }
    };

    struct Weighted {
        long delta = 0;
        int index = 0;
    };

    static constexpr int kRank = 39;

    const RootSystem& roots() const { return *rs_; }
    const WeylGroup& weyl() const { return *W_; }
    const Presentation& presentation() const { return pres_; }

    int basis_size() const { return kRank; }
    const NF& basis(int idx) const { return basis_.at(idx); }
    std::string basis_name(int idx) const;

    Weighted multiply(int x, int y) const;
    long table_delta(int x, int y) const { return table_[x][y].delta; }
    int table_index(int x, int y) const { return table_[x][y].index; }

    /// Deterministic normal form of a word over r0, r1, e0, e1, d, d'.
    Weighted normalize(const MonoidWord& word) const;

    /// e_beta = c e_i c^-1 for the positive G2 root with the given index.
    int e_beta(int psi_index) const;

    /// The anti-involution fixing the generators, as a basis permutation.
    int op_of(int idx) const;

    int identity_index() const;
    int generator_basis(const GenSymbol& g) const;

    // coset and stabilizer data (W element indices)
    const std::vector<int>& coset_reps(int i) const { return D_[i]; }
    const std::vector<int>& k_elements(int i) const { return K_[i]; }
    const std::vector<int>& stabilizer_elements(int i) const { return N_[i]; }
    int z_element(int i) const { return z_[i]; }

    /// The twelve e_beta * e_j rows as relations over the presentation, for
    /// certification by the prover.
    DerivedRelationSet row_relations() const;

    struct VerifyReport {
        bool ok = true;
        std::vector<std::string> failures;
        int basis_count = 0;
        long assoc_triples = 0;
        int relations_checked = 0;
        bool op_involution = false;
        bool op_antiautomorphism = false;
        int layer_group = 0, layer_e1 = 0, layer_e0 = 0;
        bool ideal_chain_ok = false;
        bool e_beta_quadratic_ok = false;
    };
    /// Closure, associativity over all 39^3 triples, the defining relations
    /// with exact d-exponents, op, the ideal-chain layer ranks and the
    /// quadratic relations of all e_beta.
    VerifyReport verify() const;

private:
    std::unique_ptr<RootSystem> rs_;
    std::unique_ptr<WeylGroup> W_;
    Presentation pres_;

    std::array<int, 2> z_{};                   // z_0 = r1r0r1r0r1, z_1 = r0r1r0r1r0
    std::array<std::vector<int>, 2> N_;        // stabilizers of {beta_i}
    std::array<std::vector<int>, 2> D_;        // fixed left coset representatives
    std::array<std::vector<int>, 2> K_;        // K_0 = {1}, K_1 = {1, z_1}

    struct Row {  // e_beta e_j = d^t a1 e_m a2
        int t;
        int a1, m, a2;
    };
    std::vector<std::array<Row, 2>> rows_;     // indexed by Psi+ root index
    std::vector<std::pair<int, int>> conj_of_root_;  // root -> (node i, u index)

    std::vector<NF> basis_;
    std::vector<std::array<Weighted, kRank>> table_;

    int kfactor(int i, int n) const;                       // n in N_i -> element of K_i
    std::pair<int, int> left_absorb(int g, int i) const;   // g -> (u index, k element)
    std::pair<int, int> right_absorb(int i, int g) const;  // g -> (k element, w index)
    int nf_index(const NF& f) const;
    Weighted mul_nf(const NF& x, const NF& y) const;
    void build_rows();
    void build_table();
};

}  // namespace brauer
