#include <doctest.h>

#include <stdexcept>

#include "brauer/prover.hpp"

using namespace brauer;

TEST_CASE("basic proofs in the D4 presentation") {
    Presentation d4 = Presentation::for_type("D4");
    RulePool pool(d4);
    SearchBounds bounds;

    SUBCASE("E1 E3 E1 = E1") {
        auto res = prove_equal(parse_word("e1 e3 e1"), parse_word("e1"), pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.total_delta == 0);
        CHECK(replay(res.trace, pool));
    }
    SUBCASE("reflexivity gives an empty trace") {
        auto res = prove_equal(parse_word("r1 e3"), parse_word("r1 e3"), pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.steps.empty());
        CHECK(res.trace.total_delta == 0);
    }
    SUBCASE("delta-weighted: E3 E3 = d E3") {
        auto res = prove_equal(parse_word("e3 e3"), parse_word("e3"), pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.total_delta == 1);
    }
    SUBCASE("delta symbols in the inputs are normalized out") {
        auto res = prove_equal(parse_word("d e3"), parse_word("e3 e3"), pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.total_delta == 0);
    }
    SUBCASE("NotFound is a value") {
        SearchBounds small{3, 8, 1000};
        auto res = prove_equal(parse_word("e1"), parse_word("e2"), pool, small);
        CHECK(!res.found);
    }
}

TEST_CASE("proofs in the G2 presentation") {
    Presentation g2 = Presentation::for_type("G2");
    RulePool pool(g2);
    SearchBounds bounds;

    SUBCASE("e1 e0 = r0 r1 e0") {
        auto res = prove_equal(parse_word("e1 e0"), parse_word("r0 r1 e0"), pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.total_delta == 0);
        CHECK(replay(res.trace, pool));
    }
    SUBCASE("e0 e1 e0 = d^2 e0") {
        auto res = prove_equal(parse_word("e0 e1 e0"), parse_word("e0"), pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.total_delta == 2);
    }
    SUBCASE("r1 r0 r1 r0 r1 e0 = e0") {
        auto res = prove_equal(parse_word("r1 r0 r1 r0 r1 e0"), parse_word("e0"), pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.total_delta == 0);
    }
    SUBCASE("z1 commutes past e1") {
        auto res = prove_equal(parse_word("r0 r1 r0 r1 r0 e1"),
                               parse_word("e1 r0 r1 r0 r1 r0"), pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.total_delta == 0);
    }
    SUBCASE("e0 absorbs z0 on the right as well") {
        auto res = prove_equal(parse_word("e0 r1 r0 r1 r0 r1"), parse_word("e0"), pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.total_delta == 0);
    }
}

TEST_CASE("symmetry: a = b iff b = a") {
    Presentation g2 = Presentation::for_type("G2");
    RulePool pool(g2);
    SearchBounds bounds;
    std::vector<std::pair<std::string, std::string>> cases = {
        {"e1 e0", "r0 r1 e0"},
        {"e0 r1 r0", "e0 e1"},
        {"r1 r0 e1 r0 r1 e0", "d e0"},
    };
    for (auto& [l, r] : cases) {
        auto fwd = prove_equal(parse_word(l), parse_word(r), pool, bounds);
        auto bwd = prove_equal(parse_word(r), parse_word(l), pool, bounds);
        CHECK(fwd.found == bwd.found);
        if (fwd.found && bwd.found)
            CHECK(fwd.trace.total_delta == -bwd.trace.total_delta);
    }
}

TEST_CASE("replay rejects corrupted traces") {
    Presentation g2 = Presentation::for_type("G2");
    RulePool pool(g2);
    auto res = prove_equal(parse_word("e1 e0"), parse_word("r0 r1 e0"), pool, {});
    REQUIRE(res.found);
    REQUIRE(!res.trace.steps.empty());

    ProofTrace bad = res.trace;
    bad.steps[0].position = 99;
    int fail_step = -1;
    CHECK(!replay(bad, pool, &fail_step));
    CHECK(fail_step == 0);

    ProofTrace bad2 = res.trace;
    bad2.total_delta += 1;
    CHECK(!replay(bad2, pool));

    ProofTrace bad3 = res.trace;
    bad3.steps[0].tag = "no_such_rule";
    CHECK(!replay(bad3, pool));
}

TEST_CASE("lemma pipelines certify the derived relation sets") {
    SearchBounds bounds;  // depth 24, the regression bound

    SUBCASE("D4 chain consequences") {
        Presentation d4 = Presentation::for_type("D4");
        RulePool pool(d4);
        auto rep = certify_lemma_pipeline(pool, {derived_simply_laced(d4)}, bounds);
        CHECK(rep.all_certified);
        CHECK(rep.items.size() == 42);
        for (auto& item : rep.items) {
            CHECK(item.certified);
            CHECK(item.replay_ok);
            CHECK(item.depth_a + item.depth_b <= 24);
        }
    }
    SUBCASE("C2 double-bond consequences") {
        Presentation c2 = Presentation::for_type("C2");
        RulePool pool(c2);
        auto rep = certify_lemma_pipeline(pool, {derived_double_bond(c2)}, bounds);
        CHECK(rep.all_certified);
        CHECK(rep.items.size() == 5);
    }
    SUBCASE("B2 double-bond consequences") {
        Presentation b2 = Presentation::for_type("B2");
        RulePool pool(b2);
        auto rep = certify_lemma_pipeline(pool, {derived_double_bond(b2)}, bounds);
        CHECK(rep.all_certified);
    }
    SUBCASE("G2 consequences, then the product rows") {
        Presentation g2 = Presentation::for_type("G2");
        RulePool pool(g2);
        auto rep = certify_lemma_pipeline(
            pool, {derived_g2(g2), g2_product_rows(g2)}, bounds);
        CHECK(rep.all_certified);
        CHECK(rep.items.size() == 16);
        for (auto& item : rep.items) CHECK(item.delta_ok);
    }
}

TEST_CASE("the conjugated absorption image in D4: E1E2E4 R3 E1E2E4 = d^2 E1E2E4") {
    Presentation d4 = Presentation::for_type("D4");
    RulePool pool(d4);
    SearchBounds bounds;
    bounds.max_word_length = 9;
    auto res = prove_equal(parse_word("e1 e2 e4 r3 e1 e2 e4"), parse_word("e1 e2 e4"), pool,
                           bounds);
    REQUIRE(res.found);
    CHECK(res.trace.total_delta == 2);
    CHECK(replay(res.trace, pool));
}

TEST_CASE("square collapse strategy for group words") {
    Presentation d4 = Presentation::for_type("D4");
    RulePool pool(d4);
    SearchBounds bounds;
    bounds.max_frontier = 2000000;

    SUBCASE("(R1 R2 R4)^2 = 1") {
        auto res = prove_square_collapse(parse_word("r1 r2 r4"), pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.total_delta == 0);
        CHECK(res.trace.start == parse_word("r1 r2 r4 r1 r2 r4"));
        CHECK(res.trace.end.empty());
        CHECK(replay(res.trace, pool));
    }
    SUBCASE("(R3 R1 R2 R4)^6 = 1 via the halved word") {
        MonoidWord half = power(parse_word("r3 r1 r2 r4"), 3);
        auto res = prove_square_collapse(half, pool, bounds);
        REQUIRE(res.found);
        CHECK(res.trace.total_delta == 0);
        CHECK(res.trace.start.size() == 24);
        CHECK(res.trace.end.empty());
        CHECK(replay(res.trace, pool));
    }
    SUBCASE("rejects words with e symbols") {
        CHECK_THROWS_AS(prove_square_collapse(parse_word("e1"), pool, bounds),
                        std::invalid_argument);
    }
}

TEST_CASE("frontier cap freezes a side instead of evicting") {
    Presentation d4 = Presentation::for_type("D4");
    RulePool pool(d4);
    SearchBounds tiny{24, 20, 5};
    auto res = prove_equal(parse_word("e1 e3 e1"), parse_word("e1"), pool, tiny);
    // with a five-state frontier the search cannot roam; it must either find
    // the short proof or report the cap honestly
    if (!res.found) CHECK(res.frontier_capped);
}
