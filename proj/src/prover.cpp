#include "brauer/prover.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace brauer {

RulePool::RulePool(const Presentation& p) : pres_(&p) {
    for (const auto& r : p.relations) add_lemma(r);
}

void RulePool::add_lemma(const Relation& r) {
    rules_.push_back({encode(r.lhs), encode(r.rhs), r.delta_shift, r.tag});
}

const RulePool::Rule& RulePool::by_tag(const std::string& tag) const {
    for (const auto& r : rules_)
        if (r.tag == tag) return r;
    throw std::invalid_argument("RulePool: no rule tagged " + tag);
}

std::string RulePool::encode(const MonoidWord& w, int* delta_out) const {
    std::string s;
    s.reserve(w.size());
    for (const auto& g : w) {
        switch (g.kind) {
            case SymKind::Delta:
                if (delta_out) ++*delta_out;
                break;
            case SymKind::DeltaInv:
                if (delta_out) --*delta_out;
                break;
            case SymKind::R:
                s.push_back((char)(2 * pres_->node_position(g.node)));
                break;
            case SymKind::E:
                s.push_back((char)(2 * pres_->node_position(g.node) + 1));
                break;
        }
    }
    return s;
}

MonoidWord RulePool::decode(const std::string& s) const {
    MonoidWord w;
    for (char c : s) {
        int v = (unsigned char)c;
        int node = pres_->nodes.at(v / 2);
        w.push_back({v % 2 ? SymKind::E : SymKind::R, node});
    }
    return w;
}

namespace {

struct State {
    std::string word;
    int delta;
    int parent;      // index into the side's state vector, -1 at the root
    ProofStep step;  // step applied to the parent to produce this state
};

struct Side {
    std::vector<State> states;
    std::unordered_map<std::string, int> visited;
    std::vector<int> frontier;
    int depth = 0;
    bool frozen = false;

    void seed(const std::string& w) {
        states.push_back({w, 0, -1, {}});
        visited.emplace(w, 0);
        frontier.push_back(0);
    }
    bool can_expand(const SearchBounds& b) const {
        return !frozen && !frontier.empty() && depth < b.max_depth;
    }
};

// All single-rule rewrites of w, in deterministic order.
template <typename F>
void for_each_rewrite(const std::string& w, const std::vector<RulePool::Rule>& rules,
                      int max_len, F&& emit) {
    for (const auto& rule : rules) {
        for (int dir = 0; dir < 2; ++dir) {
            const std::string& from = dir == 0 ? rule.lhs : rule.rhs;
            const std::string& to = dir == 0 ? rule.rhs : rule.lhs;
            if (from.size() > w.size()) continue;
            if (w.size() - from.size() + to.size() > (std::size_t)max_len) continue;
            for (size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
                if (w.compare(pos, from.size(), from) != 0) continue;
                std::string next = w.substr(0, pos) + to + w.substr(pos + from.size());
                int shift = dir == 0 ? rule.shift : -rule.shift;
                emit(std::move(next), ProofStep{(int)pos, rule.tag, dir == 0, shift});
            }
        }
    }
}

ProofTrace build_trace(const RulePool& rules, const Side sides[2], int idx_a, int idx_b) {
    ProofTrace t;
    t.start = rules.decode(sides[0].states[0].word);
    t.end = rules.decode(sides[1].states[0].word);
    // path from a to the meeting word
    std::vector<ProofStep> fwd;
    for (int cur = idx_a; sides[0].states[cur].parent >= 0;
         cur = sides[0].states[cur].parent)
        fwd.push_back(sides[0].states[cur].step);
    std::reverse(fwd.begin(), fwd.end());
    t.steps = std::move(fwd);
    // path from the meeting word back down to b: invert the b-side steps
    for (int cur = idx_b; sides[1].states[cur].parent >= 0;
         cur = sides[1].states[cur].parent) {
        ProofStep s = sides[1].states[cur].step;
        s.forward = !s.forward;
        s.shift = -s.shift;
        t.steps.push_back(s);
    }
    t.total_delta = sides[0].states[idx_a].delta - sides[1].states[idx_b].delta;
    return t;
}

}  // namespace

ProveResult prove_equal(const MonoidWord& a, const MonoidWord& b, const RulePool& rules,
                        const SearchBounds& bounds) {
    ProveResult res;
    int da = 0, db = 0;
    std::string wa = rules.encode(a, &da);
    std::string wb = rules.encode(b, &db);

    Side sides[2];
    sides[0].seed(wa);
    sides[1].seed(wb);

    auto finish = [&](int idx_a, int idx_b) {
        res.found = true;
        res.trace = build_trace(rules, sides, idx_a, idx_b);
        res.trace.total_delta += da - db;
        res.depth_a = sides[0].depth;
        res.depth_b = sides[1].depth;
        res.states = sides[0].states.size() + sides[1].states.size();
    };

    if (wa == wb) {  // reflexivity, possibly with a delta-symbol imbalance
        finish(0, 0);
        return res;
    }

    while (sides[0].can_expand(bounds) || sides[1].can_expand(bounds)) {
        int s;
        if (!sides[0].can_expand(bounds))
            s = 1;
        else if (!sides[1].can_expand(bounds))
            s = 0;
        else
            s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
        Side& side = sides[s];
        Side& other = sides[1 - s];

        std::vector<int> next;
        std::vector<State> pending;
        bool overflow = false;
        for (int idx : side.frontier) {
            const std::string cur = side.states[idx].word;  // copy: vector grows below
            int cur_delta = side.states[idx].delta;
            for_each_rewrite(cur, rules.rules(), bounds.max_word_length,
                             [&](std::string&& w, ProofStep&& step) {
                                 if (overflow || side.visited.count(w)) return;
                                 pending.push_back(
                                     {std::move(w), cur_delta + step.shift, idx, std::move(step)});
                                 if (pending.size() > bounds.max_frontier) overflow = true;
                             });
            if (overflow) break;
        }
        if (overflow) {
            // Refuse to evict: freeze this side, keep its reached set intact.
            side.frozen = true;
            res.frontier_capped = true;
            continue;
        }
        // commit the level, checking for a meeting point as we go
        for (auto& st : pending) {
            auto [it, fresh] = side.visited.emplace(st.word, (int)side.states.size());
            if (!fresh) continue;
            side.states.push_back(st);
            next.push_back(it->second);
            auto hit = other.visited.find(st.word);
            if (hit != other.visited.end()) {
                side.depth += 1;
                int ia = s == 0 ? it->second : hit->second;
                int ib = s == 0 ? hit->second : it->second;
                finish(ia, ib);
                return res;
            }
        }
        side.frontier = std::move(next);
        side.depth += 1;
    }

    res.depth_a = sides[0].depth;
    res.depth_b = sides[1].depth;
    res.states = sides[0].states.size() + sides[1].states.size();
    return res;
}

bool replay(const ProofTrace& t, const RulePool& rules, int* fail_step) {
    int delta = 0;
    std::string w = rules.encode(t.start, &delta);
    int end_delta = 0;
    std::string target = rules.encode(t.end, &end_delta);
    delta -= end_delta;
    for (size_t i = 0; i < t.steps.size(); ++i) {
        const ProofStep& s = t.steps[i];
        const RulePool::Rule* rule;
        try {
            rule = &rules.by_tag(s.tag);
        } catch (const std::invalid_argument&) {
            if (fail_step) *fail_step = (int)i;
            return false;
        }
        const std::string& from = s.forward ? rule->lhs : rule->rhs;
        const std::string& to = s.forward ? rule->rhs : rule->lhs;
        int shift = s.forward ? rule->shift : -rule->shift;
        if (s.position < 0 || s.position + from.size() > w.size() ||
            w.compare(s.position, from.size(), from) != 0 || shift != s.shift) {
            if (fail_step) *fail_step = (int)i;
            return false;
        }
        w = w.substr(0, s.position) + to + w.substr(s.position + from.size());
        delta += shift;
    }
    if (w != target || delta != t.total_delta) {
        if (fail_step) *fail_step = (int)t.steps.size();
        return false;
    }
    return true;
}

ProveResult prove_square_collapse(const MonoidWord& half, const RulePool& rules,
                                  const SearchBounds& bounds) {
    for (const auto& g : half)
        if (g.kind != SymKind::R)
            throw std::invalid_argument("prove_square_collapse: reflection word expected");
    ProveResult res;
    if (half.empty()) {
        res.found = true;
        return res;
    }
    MonoidWord rev = reversed(half);
    SearchBounds braid = bounds;
    // Braid moves keep the length, deletions shrink it; nothing longer than
    // the input is ever needed to connect a word with its reversal.
    braid.max_word_length = (int)half.size();
    ProveResult inner = prove_equal(half, rev, rules, braid);
    res.frontier_capped = inner.frontier_capped;
    res.depth_a = inner.depth_a;
    res.depth_b = inner.depth_b;
    res.states = inner.states;
    if (!inner.found) return res;

    int L = (int)half.size();
    ProofTrace t;
    t.start = power(half, 2);
    t.end = {};
    t.total_delta = inner.trace.total_delta;
    for (ProofStep s : inner.trace.steps) {
        s.position += L;  // rewrite inside the second copy
        t.steps.push_back(s);
    }
    // word is now half * reversed(half); cancel from the middle outwards
    for (int k = 0; k < L; ++k) {
        const GenSymbol& sym = half[L - 1 - k];
        std::string tag;
        MonoidWord pat{sym, sym};
        std::string enc = rules.encode(pat);
        for (const auto& r : rules.rules())
            if (r.lhs == enc && r.rhs.empty() && r.shift == 0) {
                tag = r.tag;
                break;
            }
        if (tag.empty())
            throw std::invalid_argument("prove_square_collapse: missing r^2 rule for node " +
                                        std::to_string(sym.node));
        t.steps.push_back({L - 1 - k, tag, true, 0});
    }
    if (!replay(t, rules, nullptr))
        throw std::logic_error("prove_square_collapse: spliced trace does not replay");
    res.found = true;
    res.trace = std::move(t);
    return res;
}

PipelineReport certify_lemma_pipeline(RulePool& pool, const std::vector<DerivedRelationSet>& sets,
                                      const SearchBounds& bounds) {
    PipelineReport report;
    for (const auto& set : sets) {
        for (const auto& item : set.items) {
            PipelineItem pi;
            pi.tag = item.tag;
            pi.delta_expected = item.delta_shift;
            ProveResult r = prove_equal(item.lhs, item.rhs, pool, bounds);
            pi.found = r.found;
            pi.depth_a = r.depth_a;
            pi.depth_b = r.depth_b;
            if (r.found) {
                pi.delta_found = r.trace.total_delta;
                pi.delta_ok = pi.delta_found == item.delta_shift;
                pi.replay_ok = replay(r.trace, pool, nullptr);
                pi.trace_steps = (int)r.trace.steps.size();
            }
            pi.certified = pi.found && pi.delta_ok && pi.replay_ok;
            if (pi.certified)
                pool.add_lemma(item);
            else
                report.all_certified = false;
            report.items.push_back(pi);
        }
    }
    return report;
}

}  // namespace brauer
