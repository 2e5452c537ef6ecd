#include <doctest.h>

#include <stdexcept>

#include "brauer/action.hpp"

using namespace brauer;

namespace {
struct D4Act {
    RootSystem rs = RootSystem::build("D4");
    WeylGroup W{rs};
    AdmissibleAction act{rs, W};
    int a1 = rs.simple_index(0), a2 = rs.simple_index(1), a3 = rs.simple_index(2),
        a4 = rs.simple_index(3);
};
}  // namespace

TEST_CASE("the action is a simply-laced construction") {
    RootSystem g2 = RootSystem::build("G2");
    WeylGroup W(g2);
    CHECK_THROWS_AS(AdmissibleAction(g2, W), std::invalid_argument);
}

TEST_CASE("the three cases of the e action") {
    D4Act f;
    // empty set: adjoin and close
    CHECK(f.act.apply_generator(E(3), {}) == std::set<int>{f.a3});
    // alpha_i already present: fixed
    CHECK(f.act.apply_generator(E(3), {f.a3}) == std::set<int>{f.a3});
    auto xcl = closure(f.rs, {f.a1, f.a2, f.a4});
    CHECK(f.act.apply_generator(E(1), xcl) == xcl);
    // orthogonal: {a1} U {a4} closes to itself
    std::set<int> mixed = {f.a4};
    CHECK(f.act.apply_generator(E(1), mixed) == std::set<int>({f.a1, f.a4}));
    // third case: E3 {a2} = R_{a2} R3 {a2}
    auto expected = f.W.act_on_rootset(f.W.reflection(f.a2),
                                       f.W.act_on_rootset(f.W.generator(2), {f.a2}));
    CHECK(f.act.apply_generator(E(3), {f.a2}) == expected);
    CHECK(expected == std::set<int>{f.a3});
}

TEST_CASE("delta acts as the identity and words act right to left") {
    D4Act f;
    CHECK(f.act.apply_word(parse_word("d e3 d'"), {}) == std::set<int>{f.a3});
    CHECK(f.act.apply_word({}, {f.a1}) == std::set<int>{f.a1});
    // E1 E2 E4 applied to the empty set gives the closed four-root set
    auto result = f.act.apply_word(parse_word("e1 e2 e4"), {});
    CHECK(result == closure(f.rs, {f.a1, f.a2, f.a4}));
}

TEST_CASE("relation compatibility sweep on D4 and A4") {
    for (const char* label : {"D4", "A4"}) {
        RootSystem rs = RootSystem::build(label);
        WeylGroup W(rs);
        AdmissibleAction act(rs, W);
        auto mismatches = act.check_relations(Presentation::for_type(label), all_admissible(rs));
        CHECK(mismatches.empty());
    }
}

TEST_CASE("third case does not depend on the chosen member") {
    for (const char* label : {"D4", "A4"}) {
        RootSystem rs = RootSystem::build(label);
        WeylGroup W(rs);
        AdmissibleAction act(rs, W);
        CHECK(act.third_case_independence(all_admissible(rs)).empty());
    }
}

TEST_CASE("sigma-relabelled words act as sigma-transported sets") {
    D4Act f;
    FoldingMap fold = FoldingMap::d4_triality();
    auto perm = sigma_root_permutation(f.rs, fold);
    auto apply_sigma = [&](const std::set<int>& B) {
        std::set<int> out;
        for (int p : B) out.insert(perm[p]);
        return out;
    };
    // sigma on node labels: 1 -> 2 -> 4 -> 1, 3 fixed
    auto relabel = [](const MonoidWord& w) {
        MonoidWord out;
        for (auto g : w) {
            if (g.kind == SymKind::R || g.kind == SymKind::E) {
                if (g.node == 1) g.node = 2;
                else if (g.node == 2) g.node = 4;
                else if (g.node == 4) g.node = 1;
            }
            out.push_back(g);
        }
        return out;
    };
    std::vector<MonoidWord> words = {parse_word("e1"), parse_word("e3 r1"),
                                     parse_word("e1 e2 e4"), parse_word("r3 e2 r4")};
    for (auto& B : all_admissible(f.rs))
        for (auto& w : words)
            CHECK(apply_sigma(f.act.apply_word(w, B)) ==
                  f.act.apply_word(relabel(w), apply_sigma(B)));
}

TEST_CASE("a relation image acts identically on every admissible set") {
    // r e = e for every node, as a spot check of the sweep machinery
    D4Act f;
    auto adm = all_admissible(f.rs);
    for (int label = 1; label <= 4; ++label) {
        MonoidWord re = {R(label), E(label)};
        MonoidWord e = {E(label)};
        for (auto& B : adm) CHECK(f.act.apply_word(re, B) == f.act.apply_word(e, B));
    }
}
