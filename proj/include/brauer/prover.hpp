#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brauer/presentations.hpp"

namespace brauer {

/// Rewrite rules available to the prover: the relations of a presentation
/// plus any lemmas certified so far. Words are stored delta-free internally;
/// one byte per symbol.
class RulePool {
public:
    explicit RulePool(const Presentation& p);

    struct Rule {
        std::string lhs, rhs;  // encoded words
        int shift;             // lhs = d^shift rhs
        std::string tag;
    };

    void add_lemma(const Relation& r);
    const std::vector<Rule>& rules() const { return rules_; }
    const Rule& by_tag(const std::string& tag) const;
    const Presentation& presentation() const { return *pres_; }

    // Encodes w with delta symbols stripped; *delta_out accumulates their
    // signed count when non-null.
    std::string encode(const MonoidWord& w, int* delta_out = nullptr) const;
    MonoidWord decode(const std::string& s) const;

private:
    const Presentation* pres_;
    std::vector<Rule> rules_;
};

struct SearchBounds {
    int max_depth = 24;        // per search side
    int max_word_length = 20;
    std::size_t max_frontier = 200000;
};

struct ProofStep {
    int position;     // symbol index where the rule is applied
    std::string tag;  // rule tag in the pool
    bool forward;     // true: lhs -> rhs, false: rhs -> lhs
    int shift;        // signed delta contribution of this step
};

/// Replayable derivation: applying the steps to `start` yields `end`, and the
/// accumulated delta exponent equals total_delta (start = d^total_delta end).
struct ProofTrace {
    MonoidWord start, end;
    std::vector<ProofStep> steps;
    int total_delta = 0;
};

struct ProveResult {
    bool found = false;
    ProofTrace trace;
    bool frontier_capped = false;  // a frontier hit max_frontier and was frozen
    int depth_a = 0, depth_b = 0;  // levels expanded on each side
    std::size_t states = 0;        // total states discovered
};

/// Bidirectional breadth-first search for a rewrite path a ->* b. NotFound
/// (found == false) is an inconclusive outcome, not a refutation.
ProveResult prove_equal(const MonoidWord& a, const MonoidWord& b, const RulePool& rules,
                        const SearchBounds& bounds);

/// Independent verification of a trace: every step must apply a pool rule
/// verbatim at its stated position.
bool replay(const ProofTrace& t, const RulePool& rules, int* fail_step = nullptr);

/// Proves half*half = 1 for a delta-free reflection word `half` whose group
/// element is an involution: a braid search connects half to its reversal,
/// the two halves then cancel pairwise. The returned trace is an ordinary
/// rewrite derivation over the pool rules.
ProveResult prove_square_collapse(const MonoidWord& half, const RulePool& rules,
                                  const SearchBounds& bounds);

struct PipelineItem {
    std::string tag;
    bool certified = false;
    bool found = false;
    bool delta_ok = false;
    bool replay_ok = false;
    int delta_expected = 0, delta_found = 0;
    int trace_steps = 0;
    int depth_a = 0, depth_b = 0;
};

struct PipelineReport {
    std::vector<PipelineItem> items;
    bool all_certified = true;
};

/// Proves each set's items in order, adding certified items to the pool
/// before the next item is attempted. Certification requires the proved
/// delta exponent to match the stated one and the trace to replay.
PipelineReport certify_lemma_pipeline(RulePool& pool, const std::vector<DerivedRelationSet>& sets,
                                      const SearchBounds& bounds);

}  // namespace brauer
