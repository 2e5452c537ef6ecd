#include <doctest.h>

#include "brauer/json_io.hpp"
#include "brauer/presentations.hpp"
#include "brauer/prover.hpp"

using namespace brauer;

TEST_CASE("G2 presentation content") {
    Presentation g2 = Presentation::for_type("G2");
    CHECK(g2.nodes == std::vector<int>{0, 1});
    CHECK(g2.kappa.at(0) == 3);
    CHECK(g2.kappa.at(1) == 1);
    CHECK(g2.relations.size() == 15);

    // (r1 r0)^6 = 1 is present
    const Relation& braid = g2.relation("t_braid12.0.1");
    CHECK(braid.lhs.size() == 12);
    CHECK(braid.rhs.empty());
    CHECK(word_to_string(braid.lhs) == "r1 r0 r1 r0 r1 r0 r1 r0 r1 r0 r1 r0");

    // e0^2 = d^3 e0
    const Relation& sq = g2.relation("e2.0");
    CHECK(sq.delta_shift == 3);
}

TEST_CASE("instantiated relation counts are stable") {
    CHECK(Presentation::for_type("D4").relations.size() == 40);
    CHECK(Presentation::for_type("A4").relations.size() == 40);
    CHECK(Presentation::for_type("C2").relations.size() == 16);
    CHECK(Presentation::for_type("B2").relations.size() == 16);
    CHECK(Presentation::for_type("F4").relations.size() == 44);
    CHECK_THROWS(Presentation::for_type("E6"));
}

TEST_CASE("adjacent pairs instantiate both orientations") {
    Presentation d4 = Presentation::for_type("D4");
    const Relation& r13 = d4.relation("rre.1.3");
    const Relation& r31 = d4.relation("rre.3.1");
    CHECK(word_to_string(r13.lhs) == "r3 r1 e3");
    CHECK(word_to_string(r13.rhs) == "e1 e3");
    CHECK(word_to_string(r31.lhs) == "r1 r3 e1");
    CHECK(word_to_string(r31.rhs) == "e3 e1");
}

TEST_CASE("double and triple bonds are stored directed") {
    Presentation c2 = Presentation::for_type("C2");
    CHECK(c2.bonds.size() == 1);
    CHECK(c2.bonds[0].i == 0);
    CHECK(c2.bonds[0].j == 1);
    CHECK(c2.kappa.at(0) == 1);
    CHECK(c2.kappa.at(1) == 2);
    // e1 r0 e1 = d e1 (the short-node side absorbs)
    CHECK(word_to_string(c2.relation("d_ere.0.1").lhs) == "e1 r0 e1");

    Presentation b2 = Presentation::for_type("B2");
    CHECK(b2.bonds[0].i == 1);
    CHECK(b2.bonds[0].j == 0);
    CHECK(b2.kappa.at(0) == 2);
    CHECK(word_to_string(b2.relation("d_ere.1.0").lhs) == "e0 r1 e0");

    Presentation f4 = Presentation::for_type("F4");
    CHECK(f4.bond_multiplicity(2, 3) == 2);
    CHECK(word_to_string(f4.relation("d_ere.3.2").lhs) == "e2 r3 e2");
}

TEST_CASE("derived sets") {
    Presentation d4 = Presentation::for_type("D4");
    auto chain = derived_simply_laced(d4);
    // 6 ordered adjacent pairs x 5 two-node items + 6 ordered triples x 2
    CHECK(chain.items.size() == 42);

    Presentation g2 = Presentation::for_type("G2");
    auto cons = derived_g2(g2);
    REQUIRE(cons.items.size() == 4);
    CHECK(word_to_string(cons.items[0].lhs) == "r0 r1 e0");
    CHECK(word_to_string(cons.items[0].rhs) == "e1 e0");
    CHECK(cons.items[2].delta_shift == 2);  // e0 e1 e0 = d^2 e0

    auto rows = g2_product_rows(g2);
    CHECK(rows.items.size() == 12);

    auto dbl = derived_double_bond(Presentation::for_type("C2"));
    CHECK(dbl.items.size() == 5);
}

TEST_CASE("presentation JSON round-trip") {
    for (const char* label : {"G2", "D4", "C2"}) {
        Presentation p = Presentation::for_type(label);
        json j = presentation_to_json(p);
        Presentation q = presentation_from_json(j);
        REQUIRE(q.relations.size() == p.relations.size());
        for (size_t k = 0; k < p.relations.size(); ++k) {
            CHECK(q.relations[k].tag == p.relations[k].tag);
            CHECK(q.relations[k].lhs == p.relations[k].lhs);
            CHECK(q.relations[k].rhs == p.relations[k].rhs);
            CHECK(q.relations[k].delta_shift == p.relations[k].delta_shift);
        }
        CHECK(q.kappa == p.kappa);
        CHECK(q.nodes == p.nodes);
    }
}

TEST_CASE("root system JSON round-trips exactly") {
    for (const char* label : {"D4", "A4", "G2"}) {
        RootSystem rs = RootSystem::build(label);
        json j = root_system_to_json(rs);
        RootSystem back = root_system_from_json(j);  // throws on any mismatch
        CHECK(back.label() == rs.label());
        CHECK(root_system_to_json(back) == j);
    }
}

TEST_CASE("word parsing and printing") {
    MonoidWord w = parse_word("r0 e1 d r1 d'");
    CHECK(w.size() == 5);
    CHECK(word_to_string(w) == "r0 e1 d r1 d'");
    CHECK(word_to_string(parse_word("E3 R1"), true) == "E3 R1");
    CHECK(parse_word("1").empty());
    CHECK_THROWS(parse_word("x9"));
    CHECK(reversed(parse_word("r0 r1 e0")) == parse_word("e0 r1 r0"));
    CHECK(power(parse_word("r1 r0"), 2) == parse_word("r1 r0 r1 r0"));
}

TEST_CASE("reversing every relation yields provable relations (op closure)") {
    // certified for G2 and for one double-bond presentation
    for (const char* label : {"G2", "C2"}) {
        Presentation p = Presentation::for_type(label);
        RulePool pool(p);
        SearchBounds bounds;
        bounds.max_depth = 12;
        for (const auto& rel : p.relations) {
            Relation rev = op_relation(rel);
            auto res = prove_equal(rev.lhs, rev.rhs, pool, bounds);
            CHECK(res.found);
            if (res.found) CHECK(res.trace.total_delta == rev.delta_shift);
        }
    }
}
