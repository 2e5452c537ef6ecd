#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "brauer/action.hpp"
#include "brauer/prover.hpp"

namespace brauer {

/// Generator substitution r0 -> R1 R2 R4, r1 -> R3, e0 -> E1 E2 E4,
/// e1 -> E3; delta symbols pass through.
MonoidWord phi_word(const MonoidWord& g2_word);

struct PhiRelationCert {
    std::string tag;
    int delta_expected = 0;
    bool prover_checked = false;
    bool prover_ok = false;
    bool prover_inconclusive = false;  // NotFound: bounds exhausted
    int delta_found = 0;
    int trace_steps = 0;
    bool replay_ok = false;
    std::string method;  // "search" or "square-collapse"
    bool action_checked = false;
    bool action_ok = false;
};

struct PhiReport {
    std::vector<PhiRelationCert> items;
    bool all_ok = true;
    PipelineReport lemma_report;  // the chain consequences certified first
};

struct SigmaCensus {
    struct OrbitRow {
        std::set<int> rep;  // lex-least member
        int size = 0;
        int sigma_invariant = 0;
    };
    std::vector<OrbitRow> orbits;            // all W(D4)-orbits of admissible sets
    int orbit_count = 0;
    int invariant_pair_orbits = 0;           // invariant members in the two 2-root orbits
    int phi_orbit_closure_size = 0;          // phi(W(G2))-orbit of {a1,a2,a4}^cl
    int phi_orbit_alpha3_size = 0;           // phi(W(G2))-orbit of {alpha_3}
    std::size_t phi_group_order = 0;         // subgroup generated by the images
    bool folded_matches = false;             // projection images match the two G2 orbits
};

/// Verifies the homomorphism into the D4 Brauer algebra: every G2 relation
/// (and the derived consequences, including the closure collapse) is
/// certified by the prover on the generator images and checked against the
/// admissible-set action of D4.
class PhiVerifier {
public:
    PhiVerifier();

    PhiReport verify_relations(bool with_prover, bool with_action,
                               const SearchBounds& bounds = {});
    SigmaCensus census() const;

    const RulePool& pool() const { return *pool_; }
    const std::vector<std::set<int>>& admissible_d4() const { return adm_; }
    const RootSystem& d4() const { return *d4_; }
    const WeylGroup& weyl_d4() const { return *w4_; }

private:
    std::unique_ptr<RootSystem> d4_;
    std::unique_ptr<WeylGroup> w4_;
    Presentation pres_d4_;
    std::unique_ptr<RulePool> pool_;
    PipelineReport lemma_report_;
    std::vector<std::set<int>> adm_;
    std::unique_ptr<AdmissibleAction> action_;
};

}  // namespace brauer
