#include "brauer/action.hpp"

#include <algorithm>

namespace brauer {

AdmissibleAction::AdmissibleAction(const RootSystem& rs, const WeylGroup& W)
    : rs_(&rs), W_(&W) {
    if (rs.type() == SystemType::G2Folded)
        throw std::invalid_argument(
            "AdmissibleAction: defined on the simply-laced collections only");
}

std::set<int> AdmissibleAction::apply_e(int node, const std::set<int>& B, int forced_beta) const {
    int alpha = rs_->simple_index(rs_->node_of_label(node));
    if (B.count(alpha)) return B;
    // roots of B not orthogonal to alpha_i, by (height, index)
    std::vector<int> crossing;
    for (int p : B)
        if (!rs_->bilinear(p, alpha).is_zero()) crossing.push_back(p);
    if (crossing.empty()) {
        auto with = B;
        with.insert(alpha);
        return closure(*rs_, with);
    }
    int beta;
    if (forced_beta >= 0) {
        beta = forced_beta;
    } else {
        std::sort(crossing.begin(), crossing.end(), [&](int a, int b) {
            long ha = rs_->height_of(a), hb = rs_->height_of(b);
            if (ha != hb) return ha < hb;
            return a < b;
        });
        beta = crossing.front();
    }
    std::set<int> Ri = W_->act_on_rootset(W_->generator(rs_->node_of_label(node)), B);
    return W_->act_on_rootset(W_->reflection(beta), Ri);
}

std::set<int> AdmissibleAction::apply_generator(const GenSymbol& g, const std::set<int>& B) const {
    switch (g.kind) {
        case SymKind::Delta:
        case SymKind::DeltaInv: return B;
        case SymKind::R:
            return W_->act_on_rootset(W_->generator(rs_->node_of_label(g.node)), B);
        case SymKind::E: return apply_e(g.node, B);
    }
    return B;
}

std::set<int> AdmissibleAction::apply_word(const MonoidWord& w, const std::set<int>& B) const {
    std::set<int> cur = B;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply_generator(*it, cur);
    return cur;
}

std::vector<AdmissibleAction::Mismatch> AdmissibleAction::check_relations(
    const Presentation& p, const std::vector<std::set<int>>& collection) const {
    std::vector<Mismatch> out;
    for (const auto& rel : p.relations) {
        for (const auto& B : collection) {
            auto a = apply_word(rel.lhs, B);
            auto b = apply_word(rel.rhs, B);
            if (a != b) out.push_back({rel.tag, B, a, b});
        }
    }
    return out;
}

std::vector<std::string> AdmissibleAction::third_case_independence(
    const std::vector<std::set<int>>& collection) const {
    std::vector<std::string> out;
    for (const auto& B : collection) {
        for (int idx = 0; idx < rs_->rank(); ++idx) {
            int label = idx + rs_->node_base();
            int alpha = rs_->simple_index(idx);
            if (B.count(alpha)) continue;
            std::vector<int> crossing;
            for (int p : B)
                if (!rs_->bilinear(p, alpha).is_zero()) crossing.push_back(p);
            if (crossing.size() < 2) continue;
            auto ref = apply_e(label, B, crossing[0]);
            for (size_t k = 1; k < crossing.size(); ++k) {
                if (apply_e(label, B, crossing[k]) != ref)
                    out.push_back("e" + std::to_string(label) + " on " + set_name(*rs_, B) +
                                  ": result depends on the chosen member");
            }
        }
    }
    return out;
}

}  // namespace brauer
