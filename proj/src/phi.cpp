#include "brauer/phi.hpp"

#include <algorithm>

namespace brauer {

MonoidWord phi_word(const MonoidWord& g2_word) {
    MonoidWord out;
    for (const auto& g : g2_word) {
        switch (g.kind) {
            case SymKind::Delta:
            case SymKind::DeltaInv: out.push_back(g); break;
            case SymKind::R:
                if (g.node == 0) {
                    out.push_back(R(1));
                    out.push_back(R(2));
                    out.push_back(R(4));
                } else if (g.node == 1) {
                    out.push_back(R(3));
                } else {
                    throw std::invalid_argument("phi_word: G2 word expected");
                }
                break;
            case SymKind::E:
                if (g.node == 0) {
                    out.push_back(E(1));
                    out.push_back(E(2));
                    out.push_back(E(4));
                } else if (g.node == 1) {
                    out.push_back(E(3));
                } else {
                    throw std::invalid_argument("phi_word: G2 word expected");
                }
                break;
        }
    }
    return out;
}

PhiVerifier::PhiVerifier() {
    d4_ = std::make_unique<RootSystem>(RootSystem::build(SystemType::D, 4));
    w4_ = std::make_unique<WeylGroup>(*d4_);
    pres_d4_ = Presentation::for_type("D4");
    pool_ = std::make_unique<RulePool>(pres_d4_);
    lemma_report_ = certify_lemma_pipeline(*pool_, {derived_simply_laced(pres_d4_)}, {});
    adm_ = all_admissible(*d4_);
    action_ = std::make_unique<AdmissibleAction>(*d4_, *w4_);
}

namespace {

// lhs == half * half with rhs empty and reflection symbols only
bool is_even_power_group_relation(const Relation& rel) {
    if (!rel.rhs.empty() || rel.delta_shift != 0) return false;
    if (rel.lhs.size() % 2 != 0 || rel.lhs.empty()) return false;
    for (const auto& g : rel.lhs)
        if (g.kind != SymKind::R) return false;
    size_t h = rel.lhs.size() / 2;
    for (size_t k = 0; k < h; ++k)
        if (!(rel.lhs[k] == rel.lhs[h + k])) return false;
    return true;
}

}  // namespace

PhiReport PhiVerifier::verify_relations(bool with_prover, bool with_action,
                                        const SearchBounds& bounds) {
    PhiReport report;
    report.lemma_report = lemma_report_;
    if (!lemma_report_.all_certified) report.all_ok = false;

    std::vector<Relation> relations = Presentation::for_type("G2").relations;
    for (const auto& rel : derived_g2(Presentation::for_type("G2")).items)
        relations.push_back(rel);

    // Certified images join the working pool, so later relations may lean on
    // earlier ones the way the displayed derivations do.
    RulePool working = *pool_;

    for (const auto& rel : relations) {
        PhiRelationCert cert;
        cert.tag = rel.tag;
        cert.delta_expected = rel.delta_shift;
        MonoidWord lhs = phi_word(rel.lhs);
        MonoidWord rhs = phi_word(rel.rhs);

        if (with_prover) {
            cert.prover_checked = true;
            ProveResult res;
            if (is_even_power_group_relation(rel)) {
                MonoidWord half = phi_word(
                    MonoidWord(rel.lhs.begin(), rel.lhs.begin() + rel.lhs.size() / 2));
                SearchBounds group_bounds = bounds;
                group_bounds.max_frontier = std::max<std::size_t>(bounds.max_frontier, 2000000);
                res = prove_square_collapse(half, working, group_bounds);
                cert.method = "square-collapse";
            } else {
                SearchBounds tight = bounds;
                tight.max_word_length =
                    (int)std::max(lhs.size(), rhs.size()) + 2;
                res = prove_equal(lhs, rhs, working, tight);
                cert.method = "search";
            }
            if (res.found) {
                cert.delta_found = res.trace.total_delta;
                cert.trace_steps = (int)res.trace.steps.size();
                cert.replay_ok = replay(res.trace, working, nullptr);
                cert.prover_ok = cert.replay_ok && cert.delta_found == rel.delta_shift;
                if (cert.prover_ok)
                    working.add_lemma({lhs, rhs, rel.delta_shift, "phi_" + rel.tag});
            } else {
                cert.prover_inconclusive = true;
            }
            if (!cert.prover_ok) report.all_ok = false;
        }
        if (with_action) {
            cert.action_checked = true;
            cert.action_ok = true;
            for (const auto& B : adm_) {
                if (action_->apply_word(lhs, B) != action_->apply_word(rhs, B)) {
                    cert.action_ok = false;
                    report.all_ok = false;
                    break;
                }
            }
        }
        report.items.push_back(cert);
    }
    return report;
}

SigmaCensus PhiVerifier::census() const {
    SigmaCensus out;
    FoldingMap fold = FoldingMap::d4_triality();
    auto perm = sigma_root_permutation(*d4_, fold);
    auto invariant = [&](const std::set<int>& B) {
        std::set<int> img;
        for (int p : B) img.insert(perm[p]);
        return img == B;
    };

    auto orbits = orbit_partition(*w4_, adm_);
    out.orbit_count = (int)orbits.size();
    for (const auto& orbit : orbits) {
        SigmaCensus::OrbitRow row;
        row.rep = orbit.front();
        row.size = (int)orbit.size();
        for (const auto& B : orbit)
            if (invariant(B)) ++row.sigma_invariant;
        if (row.rep.size() == 2) out.invariant_pair_orbits += row.sigma_invariant;
        out.orbits.push_back(row);
    }

    // subgroup of W(D4) generated by the reflection images
    int img_r0 = w4_->word_to_element({0, 1, 3});  // R1 R2 R4 (0-based node indices)
    int img_r1 = w4_->generator(2);                // R3
    auto phi_group = w4_->subgroup_closure({img_r0, img_r1});
    out.phi_group_order = phi_group.size();

    auto phi_orbit = [&](const std::set<int>& B) {
        std::set<std::set<int>> orbit{B};
        std::vector<std::set<int>> queue{B};
        for (size_t head = 0; head < queue.size(); ++head)
            for (int g : {img_r0, img_r1}) {
                auto img = w4_->act_on_rootset(g, queue[head]);
                if (orbit.insert(img).second) queue.push_back(img);
            }
        return orbit;
    };
    std::set<int> simples = {d4_->simple_index(0), d4_->simple_index(1), d4_->simple_index(3)};
    std::set<int> xcl = closure(*d4_, simples);
    out.phi_orbit_closure_size = (int)phi_orbit(xcl).size();
    out.phi_orbit_alpha3_size = (int)phi_orbit({d4_->simple_index(2)}).size();

    // projection images against the two G2 orbits
    RootSystem g2 = RootSystem::build(SystemType::G2Folded, 2);
    WeylGroup wg2(g2);
    auto folded = folded_admissibles(*d4_, fold, g2, wg2);
    out.folded_matches = folded.orbits.size() == 2;
    if (out.folded_matches) {
        std::set<int> beta1 = {g2.simple_index(1)};
        auto pair = reynolds_image(*d4_, fold, g2, xcl);
        auto in_orbit = [&](const std::set<int>& S, const std::vector<std::set<int>>& orbit) {
            return std::find(orbit.begin(), orbit.end(), S) != orbit.end();
        };
        bool ok = false;
        for (auto& orbit : folded.orbits)
            if (orbit.size() == 3 && in_orbit(beta1, orbit)) ok = true;
        bool ok2 = false;
        for (auto& orbit : folded.orbits)
            if (orbit.size() == 3 && in_orbit(pair, orbit)) ok2 = true;
        out.folded_matches = ok && ok2;
    }
    return out;
}

}  // namespace brauer
