// brg2: exact computations around the type-G2 Brauer algebra and its
// embedding into the type-D4 algebra. All outputs are deterministic.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "brauer/json_io.hpp"
#include "brauer/verify.hpp"

using namespace brauer;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

// "a1,a2,a4" or "1 0 0 0,0 1 0 0" (simple-basis integer vectors)
std::set<int> parse_root_set(const RootSystem& rs, const std::string& text) {
    std::set<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (item.empty()) continue;
        Vec v(rs.ambient_dim());
        if (item[0] == 'a' || item[0] == 'b') {
            int label = std::stoi(item.substr(1));
            v = rs.simple_roots()[rs.node_of_label(label)].coords;
        } else {
            std::stringstream cs(item);
            long coeff;
            int k = 0;
            Vec acc(rs.ambient_dim());
            while (cs >> coeff) {
                if (k >= rs.rank()) throw std::runtime_error("too many coordinates: " + item);
                acc = acc + Rational(coeff) * rs.simple_roots()[k].coords;
                ++k;
            }
            if (k != rs.rank()) throw std::runtime_error("expected " +
                                                         std::to_string(rs.rank()) +
                                                         " coordinates: " + item);
            v = acc;
        }
        auto r = rs.find_root(v);
        if (!r || r->second != 1) throw std::runtime_error("not a positive root: " + item);
        out.insert(r->first);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the type-G2 Brauer algebra inside type D4"};
    app.require_subcommand(1);

    std::string type_label = "D4", out_path, format = "json";
    std::string set_text, word_text, lhs_text, rhs_text, pres_file;
    int max_depth = 24, max_width = 20;
    std::size_t max_frontier = 200000;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_option("--format", format, "json|csv|dot|text");
    };

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "emit a root system");
    roots_cmd->add_option("--type", type_label, "A1..A8, D4..D8, G2");
    add_common(roots_cmd);

    // weyl
    auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group computations");
    auto* weyl_orbit = weyl_cmd->add_subcommand("orbit", "orbit of a root set");
    auto* weyl_stab = weyl_cmd->add_subcommand("stabilizer", "stabilizer of a root set");
    for (auto* cmd : {weyl_orbit, weyl_stab}) {
        cmd->add_option("--type", type_label);
        cmd->add_option("--set", set_text, "comma-separated roots (aK or integer vectors)");
        add_common(cmd);
    }

    // adm
    auto* adm_cmd = app.add_subcommand("adm", "admissible root sets");
    auto* adm_orbits = adm_cmd->add_subcommand("orbits", "all admissible orbits");
    auto* adm_closure = adm_cmd->add_subcommand("closure", "admissible closure of a set");
    auto* adm_hasse = adm_cmd->add_subcommand("hasse", "orbit poset of a set");
    for (auto* cmd : {adm_orbits, adm_closure, adm_hasse}) {
        cmd->add_option("--type", type_label);
        if (cmd != adm_orbits) cmd->add_option("--set", set_text);
        add_common(cmd);
    }

    // action
    auto* action_cmd = app.add_subcommand("action", "monoid action on admissible sets");
    auto* action_apply = action_cmd->add_subcommand("apply", "apply a word to a set");
    action_apply->add_option("--type", type_label);
    action_apply->add_option("--word", word_text, "e.g. \"E3 R1\"");
    action_apply->add_option("--set", set_text);
    add_common(action_apply);
    auto* action_check = action_cmd->add_subcommand("check", "relation compatibility sweep");
    action_check->add_option("--type", type_label);
    add_common(action_check);

    // prove
    auto* prove_cmd = app.add_subcommand("prove", "bounded equational search");
    std::string prove_pres = "G2";
    prove_cmd->add_option("--presentation", prove_pres, "G2, D4, A4, C2, B2, F4, ...");
    prove_cmd->add_option("--presentation-file", pres_file, "JSON presentation");
    prove_cmd->add_option("--lhs", lhs_text)->required();
    prove_cmd->add_option("--rhs", rhs_text)->required();
    prove_cmd->add_option("--max-depth", max_depth);
    prove_cmd->add_option("--max-width", max_width, "maximum word length");
    prove_cmd->add_option("--max-frontier", max_frontier);
    bool with_lemmas = false;
    prove_cmd->add_flag("--lemmas", with_lemmas, "certify derived sets first");
    add_common(prove_cmd);

    // g2
    auto* g2_cmd = app.add_subcommand("g2", "the 39-dimensional algebra");
    auto* g2_table = g2_cmd->add_subcommand("table", "structure constants");
    add_common(g2_table);
    auto* g2_verify = g2_cmd->add_subcommand("verify", "full verification suite");
    add_common(g2_verify);

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "the embedding into type D4");
    auto* phi_verify = phi_cmd->add_subcommand("verify", "certify the relation images");
    std::string methods = "prover,action";
    phi_verify->add_option("--method", methods, "prover,action");
    phi_verify->add_option("--max-depth", max_depth);
    add_common(phi_verify);
    auto* phi_census = phi_cmd->add_subcommand("census", "sigma-invariance census");
    add_common(phi_census);

    // pres
    auto* pres_cmd = app.add_subcommand("pres", "emit a presentation as JSON");
    pres_cmd->add_option("--type", type_label);
    add_common(pres_cmd);

    // verify-all
    auto* verify_all = app.add_subcommand("verify-all", "run every acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (roots_cmd->parsed()) {
            RootSystem rs = RootSystem::build(type_label);
            write_out(out_path, root_system_to_json(rs).dump(2));
        } else if (weyl_orbit->parsed() || weyl_stab->parsed()) {
            RootSystem rs = RootSystem::build(type_label);
            WeylGroup W(rs);
            auto B = parse_root_set(rs, set_text);
            json j;
            if (weyl_stab->parsed()) {
                auto stab = W.set_stabilizer(B);
                json words = json::array();
                for (int s : stab) words.push_back(W.word_name(s));
                j = {{"set", set_to_json(rs, B)}, {"order", stab.size()}, {"elements", words}};
            } else {
                auto orbits = orbit_partition(W, {B});
                json members = json::array();
                for (auto& m : orbits[0]) members.push_back(set_to_json(rs, m));
                j = {{"set", set_to_json(rs, B)}, {"size", orbits[0].size()},
                     {"members", members}};
            }
            write_out(out_path, j.dump(2));
        } else if (adm_orbits->parsed()) {
            RootSystem rs = RootSystem::build(type_label);
            json j = json::array();
            if (rs.type() == SystemType::G2Folded) {
                RootSystem d4 = RootSystem::build("D4");
                WeylGroup wg2(rs);
                auto folded = folded_admissibles(d4, FoldingMap::d4_triality(), rs, wg2);
                for (auto& orbit : folded.orbits) {
                    json members = json::array();
                    for (auto& m : orbit) members.push_back(set_to_json(rs, m));
                    j.push_back({{"size", orbit.size()}, {"members", members}});
                }
            } else {
                WeylGroup W(rs);
                for (auto& orbit : orbit_partition(W, all_admissible(rs))) {
                    json members = json::array();
                    for (auto& m : orbit) members.push_back(set_to_json(rs, m));
                    j.push_back({{"size", orbit.size()},
                                 {"representative", set_to_json(rs, orbit.front())},
                                 {"members", members}});
                }
            }
            write_out(out_path, j.dump(2));
        } else if (adm_closure->parsed()) {
            RootSystem rs = RootSystem::build(type_label);
            auto X = parse_root_set(rs, set_text);
            std::set<int> cl;
            if (rs.type() == SystemType::G2Folded) {
                RootSystem d4 = RootSystem::build("D4");
                WeylGroup wg2(rs);
                auto folded = folded_admissibles(d4, FoldingMap::d4_triality(), rs, wg2);
                cl = closure_in_collection(folded.sets, X);
            } else {
                cl = closure(rs, X);
            }
            write_out(out_path, json({{"set", set_to_json(rs, X)},
                                      {"closure", set_to_json(rs, cl)}})
                                    .dump(2));
        } else if (adm_hasse->parsed()) {
            RootSystem rs = RootSystem::build(type_label);
            WeylGroup W(rs);
            auto B = parse_root_set(rs, set_text);
            auto poset = orbit_and_hasse(W, B);
            if (format == "dot")
                write_out(out_path, hasse_dot(rs, poset));
            else
                write_out(out_path, poset_to_json(rs, poset).dump(2));
        } else if (action_apply->parsed()) {
            RootSystem rs = RootSystem::build(type_label);
            WeylGroup W(rs);
            AdmissibleAction act(rs, W);
            auto B = parse_root_set(rs, set_text);
            auto result = act.apply_word(parse_word(word_text), B);
            write_out(out_path, json({{"set", set_to_json(rs, B)},
                                      {"word", word_text},
                                      {"result", set_to_json(rs, result)}})
                                    .dump(2));
        } else if (action_check->parsed()) {
            RootSystem rs = RootSystem::build(type_label);
            WeylGroup W(rs);
            AdmissibleAction act(rs, W);
            auto mismatches =
                act.check_relations(Presentation::for_type(type_label), all_admissible(rs));
            json j = json::array();
            for (auto& m : mismatches)
                j.push_back({{"relation", m.tag},
                             {"set", set_to_json(rs, m.input)},
                             {"lhs_result", set_to_json(rs, m.lhs_result)},
                             {"rhs_result", set_to_json(rs, m.rhs_result)}});
            write_out(out_path, j.dump(2));
            if (!mismatches.empty()) return kExitVerifyFail;
        } else if (prove_cmd->parsed()) {
            Presentation p;
            if (!pres_file.empty()) {
                std::ifstream f(pres_file);
                if (!f) throw std::runtime_error("cannot read " + pres_file);
                p = presentation_from_json(json::parse(f));
            } else {
                p = Presentation::for_type(prove_pres);
            }
            RulePool pool(p);
            SearchBounds bounds{max_depth, max_width, max_frontier};
            if (with_lemmas) certify_lemma_pipeline(pool, derived_sets_for(p), bounds);
            auto res = prove_equal(parse_word(lhs_text), parse_word(rhs_text), pool, bounds);
            if (format == "text") {
                std::string text;
                if (!res.found) {
                    text = "not found (inconclusive)";
                    if (res.frontier_capped) text += "; frontier capped";
                    text += "\n";
                } else {
                    text = word_to_string(res.trace.start) + "\n";
                    int n = 1;
                    for (auto& s : res.trace.steps)
                        text += "  " + std::to_string(n++) + ". " + s.tag +
                                (s.forward ? "" : " (reversed)") + " at " +
                                std::to_string(s.position) + "\n";
                    text += "= d^" + std::to_string(res.trace.total_delta) + " * " +
                            word_to_string(res.trace.end) + "\n";
                }
                write_out(out_path, text);
            } else {
                json j;
                j["found"] = res.found;
                j["frontier_capped"] = res.frontier_capped;
                j["states"] = res.states;
                if (res.found) {
                    j["total_delta"] = res.trace.total_delta;
                    j["replay_ok"] = replay(res.trace, pool, nullptr);
                    j["trace"] = trace_to_json(res.trace);
                }
                write_out(out_path, j.dump(2));
            }
            if (!res.found) return kExitVerifyFail;
        } else if (g2_table->parsed()) {
            G2Algebra alg;
            if (format == "csv") {
                std::string csv = "i,j,delta_exp,k\n";
                for (int i = 0; i < alg.basis_size(); ++i)
                    for (int j = 0; j < alg.basis_size(); ++j)
                        csv += std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(alg.table_delta(i, j)) + "," +
                               std::to_string(alg.table_index(i, j)) + "\n";
                write_out(out_path, csv);
            } else {
                json names = json::array();
                for (int i = 0; i < alg.basis_size(); ++i) names.push_back(alg.basis_name(i));
                json entries = json::array();
                for (int i = 0; i < alg.basis_size(); ++i)
                    for (int j = 0; j < alg.basis_size(); ++j)
                        entries.push_back({{"i", i},
                                           {"j", j},
                                           {"delta_exp", alg.table_delta(i, j)},
                                           {"k", alg.table_index(i, j)}});
                write_out(out_path, json({{"basis", names}, {"table", entries}}).dump());
            }
        } else if (g2_verify->parsed()) {
            G2Algebra alg;
            auto rep = alg.verify();
            write_out(out_path, g2_verify_to_json(rep).dump(2));
            if (!rep.ok) return kExitVerifyFail;
        } else if (phi_verify->parsed()) {
            PhiVerifier phi;
            bool with_prover = methods.find("prover") != std::string::npos;
            bool with_action = methods.find("action") != std::string::npos;
            SearchBounds bounds;
            bounds.max_depth = max_depth;
            auto rep = phi.verify_relations(with_prover, with_action, bounds);
            write_out(out_path, phi_report_to_json(rep).dump(2));
            if (!rep.all_ok) return kExitVerifyFail;
        } else if (phi_census->parsed()) {
            PhiVerifier phi;
            write_out(out_path, census_to_json(phi.d4(), phi.census()).dump(2));
        } else if (pres_cmd->parsed()) {
            write_out(out_path, presentation_to_json(Presentation::for_type(type_label)).dump(2));
        } else if (verify_all->parsed()) {
            auto results = run_acceptance();
            bool all = print_acceptance(results);
            if (!all) {
                json j = json::array();
                for (auto& r : results)
                    j.push_back({{"criterion", r.number},
                                 {"name", r.name},
                                 {"pass", r.pass},
                                 {"detail", r.detail}});
                std::cerr << j.dump(2) << "\n";
                return kExitVerifyFail;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return 0;
}
