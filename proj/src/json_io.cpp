#include "brauer/json_io.hpp"

namespace brauer {

json laurent_to_json(const LaurentPoly& p) {
    json j = json::object();
    for (auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_si();
    return j;
}

LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p = p + LaurentPoly::monomial(std::stol(it.key()), Int(it.value().get<long>()));
    return p;
}

json set_to_json(const RootSystem& rs, const std::set<int>& B) {
    json arr = json::array();
    for (int p : B) arr.push_back(rs.root_name(p));
    return arr;
}

json root_system_to_json(const RootSystem& rs) {
    json j;
    j["type"] = rs.label();
    json simple = json::array();
    for (auto& r : rs.simple_roots()) {
        json v = json::array();
        for (auto& c : r.coords) v.push_back(c.to_string());
        simple.push_back(v);
    }
    j["simple_roots"] = simple;
    json positive = json::array();
    json heights = json::array();
    for (auto& r : rs.positive_roots()) {
        json v = json::array();
        for (auto& c : r.coords) v.push_back(c.to_string());
        positive.push_back(v);
        heights.push_back(height(r));
    }
    j["positive_roots"] = positive;
    j["heights"] = heights;
    return j;
}

RootSystem root_system_from_json(const json& j) {
    RootSystem rs = RootSystem::build(j.at("type").get<std::string>());
    // exact round-trip check
    const auto& pos = j.at("positive_roots");
    if (pos.size() != rs.positive_roots().size())
        throw std::runtime_error("root_system_from_json: positive root count mismatch");
    for (size_t i = 0; i < pos.size(); ++i) {
        const auto& want = rs.positive_roots()[i].coords;
        for (size_t k = 0; k < want.size(); ++k)
            if (Rational::parse(pos[i][k].get<std::string>()) != want[k])
                throw std::runtime_error("root_system_from_json: coordinate mismatch");
    }
    return rs;
}

json presentation_to_json(const Presentation& p) {
    json j;
    j["name"] = p.name;
    j["nodes"] = p.nodes;
    json bonds = json::array();
    for (auto& b : p.bonds)
        bonds.push_back({{"i", b.i}, {"j", b.j}, {"multiplicity", b.multiplicity},
                         {"arrow", b.multiplicity > 1}});
    j["bonds"] = bonds;
    json kappa = json::object();
    for (auto& [n, k] : p.kappa) kappa[std::to_string(n)] = k;
    j["kappa"] = kappa;
    json rels = json::array();
    for (auto& r : p.relations)
        rels.push_back({{"lhs", word_to_string(r.lhs)},
                        {"rhs", word_to_string(r.rhs)},
                        {"delta_shift", r.delta_shift},
                        {"tag", r.tag}});
    j["relations"] = rels;
    return j;
}

Presentation presentation_from_json(const json& j) {
    Presentation p;
    p.name = j.at("name").get<std::string>();
    p.nodes = j.at("nodes").get<std::vector<int>>();
    for (auto& b : j.at("bonds"))
        p.bonds.push_back({b.at("i").get<int>(), b.at("j").get<int>(),
                           b.at("multiplicity").get<int>()});
    for (auto it = j.at("kappa").begin(); it != j.at("kappa").end(); ++it)
        p.kappa[std::stoi(it.key())] = it.value().get<int>();
    for (auto& r : j.at("relations")) {
        Relation rel;
        std::string lhs = r.at("lhs").get<std::string>();
        std::string rhs = r.at("rhs").get<std::string>();
        rel.lhs = lhs == "1" ? MonoidWord{} : parse_word(lhs);
        rel.rhs = rhs == "1" ? MonoidWord{} : parse_word(rhs);
        rel.delta_shift = r.at("delta_shift").get<int>();
        rel.tag = r.at("tag").get<std::string>();
        p.relations.push_back(rel);
    }
    return p;
}

json trace_to_json(const ProofTrace& t) {
    json j;
    j["start"] = word_to_string(t.start);
    j["end"] = word_to_string(t.end);
    j["total_delta"] = t.total_delta;
    json steps = json::array();
    for (auto& s : t.steps)
        steps.push_back({{"position", s.position},
                         {"tag", s.tag},
                         {"direction", s.forward ? "LR" : "RL"},
                         {"delta_shift", s.shift}});
    j["steps"] = steps;
    return j;
}

json pipeline_to_json(const PipelineReport& r) {
    json items = json::array();
    for (auto& it : r.items)
        items.push_back({{"tag", it.tag},
                         {"certified", it.certified},
                         {"found", it.found},
                         {"delta_expected", it.delta_expected},
                         {"delta_found", it.delta_found},
                         {"trace_steps", it.trace_steps},
                         {"replay_ok", it.replay_ok},
                         {"depth_a", it.depth_a},
                         {"depth_b", it.depth_b}});
    return {{"all_certified", r.all_certified}, {"items", items}};
}

json poset_to_json(const RootSystem& rs, const OrbitPoset& poset) {
    json j;
    json elems = json::array();
    for (size_t i = 0; i < poset.elements.size(); ++i)
        elems.push_back({{"set", set_to_json(rs, poset.elements[i])},
                         {"height", poset.heights.empty() ? -1 : poset.heights[i]}});
    j["elements"] = elems;
    json edges = json::array();
    for (auto& e : poset.raising_edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"generator", e.gen}});
    j["raising_edges"] = edges;
    j["max_index"] = poset.max_index;
    j["diagnostics"] = poset.diagnostics;
    return j;
}

json phi_report_to_json(const PhiReport& r) {
    json items = json::array();
    for (auto& it : r.items)
        items.push_back({{"tag", it.tag},
                         {"delta_expected", it.delta_expected},
                         {"prover_ok", it.prover_ok},
                         {"prover_inconclusive", it.prover_inconclusive},
                         {"delta_found", it.delta_found},
                         {"trace_steps", it.trace_steps},
                         {"method", it.method},
                         {"action_ok", it.action_ok}});
    return {{"all_ok", r.all_ok},
            {"lemmas", pipeline_to_json(r.lemma_report)},
            {"relations", items}};
}

json census_to_json(const RootSystem& d4, const SigmaCensus& c) {
    json orbits = json::array();
    for (auto& row : c.orbits)
        orbits.push_back({{"representative", set_to_json(d4, row.rep)},
                          {"size", row.size},
                          {"sigma_invariant", row.sigma_invariant}});
    return {{"orbit_count", c.orbit_count},
            {"orbits", orbits},
            {"invariant_in_pair_orbits", c.invariant_pair_orbits},
            {"phi_orbit_of_closure", c.phi_orbit_closure_size},
            {"phi_orbit_of_alpha3", c.phi_orbit_alpha3_size},
            {"phi_group_order", c.phi_group_order},
            {"folded_matches_two_orbits", c.folded_matches}};
}

json g2_verify_to_json(const G2Algebra::VerifyReport& r) {
    return {{"ok", r.ok},
            {"basis_count", r.basis_count},
            {"assoc_triples", r.assoc_triples},
            {"relations_checked", r.relations_checked},
            {"op_involution", r.op_involution},
            {"op_antiautomorphism", r.op_antiautomorphism},
            {"layers", {r.layer_group, r.layer_e1, r.layer_e0}},
            {"ideal_chain_ok", r.ideal_chain_ok},
            {"e_beta_quadratic_ok", r.e_beta_quadratic_ok},
            {"failures", r.failures}};
}

}  // namespace brauer
