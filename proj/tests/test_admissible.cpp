#include <doctest.h>

#include <stdexcept>

#include "brauer/admissible.hpp"

using namespace brauer;

namespace {
struct D4Fixture {
    RootSystem rs = RootSystem::build("D4");
    WeylGroup W{rs};
    int a1 = rs.simple_index(0), a2 = rs.simple_index(1), a3 = rs.simple_index(2),
        a4 = rs.simple_index(3);
    int closure_root() const {
        Vec v = rs.simple_roots()[0].coords + rs.simple_roots()[1].coords +
                Rational(2) * rs.simple_roots()[2].coords + rs.simple_roots()[3].coords;
        return rs.root_of(v).first;
    }
};
}  // namespace

TEST_CASE("the D4 example: {a1,a2,a4} is orthogonal but not admissible") {
    D4Fixture f;
    std::set<int> B = {f.a1, f.a2, f.a4};
    CHECK(mutually_orthogonal(f.rs, B));
    CHECK(!is_admissible(f.rs, B, AdmDefinition::ClosureForm));
    CHECK(!is_admissible(f.rs, B, AdmDefinition::OrbitForm, &f.W));
    CHECK(is_admissible(f.rs, {}, AdmDefinition::ClosureForm));

    std::set<int> closed = B;
    closed.insert(f.closure_root());
    CHECK(is_admissible(f.rs, closed, AdmDefinition::ClosureForm));
    CHECK(closure(f.rs, B) == closed);
    CHECK(closure(f.rs, closed) == closed);  // fixed point
    CHECK(closure(f.rs, {f.a1, f.a2}) == std::set<int>{f.a1, f.a2});

    CHECK_THROWS_AS(is_admissible(f.rs, {f.a3, f.closure_root()}, AdmDefinition::ClosureForm),
                    std::domain_error);
}

TEST_CASE("closure minimality by brute force over subsets") {
    D4Fixture f;
    std::set<int> B = {f.a1, f.a2, f.a4};
    auto cl = closure(f.rs, B);
    for (auto& adm : all_admissible(f.rs)) {
        if (!std::includes(adm.begin(), adm.end(), B.begin(), B.end())) continue;
        CHECK(std::includes(adm.begin(), adm.end(), cl.begin(), cl.end()));
    }
}

TEST_CASE("admissible collection of D4: the named representatives and the full partition") {
    D4Fixture f;
    auto adm = all_admissible(f.rs);
    CHECK(adm.size() == 34);
    auto orbits = orbit_partition(f.W, adm);
    // The named representatives sit in five pairwise-distinct orbits. The
    // exhaustive partition holds one more orbit of pairs: {a2, a4} is not
    // reachable from {a1, a2} or {a1, a4} (an even-signed group preserves
    // the sign pattern of a pair covering all four coordinates), so the
    // pair sets split into three classes of six.
    REQUIRE(orbits.size() == 6);
    std::multiset<size_t> sizes;
    for (auto& orbit : orbits) sizes.insert(orbit.size());
    CHECK(sizes == std::multiset<size_t>{1, 3, 6, 6, 6, 12});

    auto orbit_of = [&](const std::set<int>& rep) -> const std::vector<std::set<int>>* {
        for (auto& orbit : orbits)
            for (auto& m : orbit)
                if (m == rep) return &orbit;
        return nullptr;
    };
    auto* o_empty = orbit_of({});
    auto* o_single = orbit_of({f.a3});
    auto* o_12 = orbit_of({f.a1, f.a2});
    auto* o_14 = orbit_of({f.a1, f.a4});
    auto* o_24 = orbit_of({f.a2, f.a4});
    auto* o_cl = orbit_of(closure(f.rs, {f.a1, f.a2, f.a4}));
    REQUIRE(o_empty != nullptr);
    REQUIRE(o_single != nullptr);
    REQUIRE(o_12 != nullptr);
    REQUIRE(o_14 != nullptr);
    REQUIRE(o_24 != nullptr);
    REQUIRE(o_cl != nullptr);
    CHECK(o_empty->size() == 1);
    CHECK(o_single->size() == 12);
    CHECK(o_12->size() == 6);
    CHECK(o_14->size() == 6);
    CHECK(o_24->size() == 6);
    CHECK(o_cl->size() == 3);
    // symmetric in the diagram, still distinct orbits
    CHECK(o_12 != o_14);
    CHECK(o_12 != o_24);
    CHECK(o_14 != o_24);
}

TEST_CASE("intersections of admissible sets are admissible (exhaustive on D4)") {
    D4Fixture f;
    auto adm = all_admissible(f.rs);
    for (auto& A : adm)
        for (auto& B : adm) {
            std::set<int> inter;
            std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                                  std::inserter(inter, inter.begin()));
            CHECK(is_admissible(f.rs, inter, AdmDefinition::ClosureForm));
        }
}

TEST_CASE("orbit posets: unique maximum, heights from the raising distance") {
    RootSystem a4 = RootSystem::build("A4");
    WeylGroup W(a4);
    std::set<int> B = {a4.simple_index(0), a4.simple_index(2)};  // {a1, a3}
    auto poset = orbit_and_hasse(W, B);
    CHECK(poset.elements.size() == 15);
    REQUIRE(poset.maximal_indices.size() == 1);
    // six sideways moves flag the underdetermined raise/lower case; they do
    // not disturb the unique maximum
    CHECK(poset.diagnostics.size() == 6);
    for (auto& d : poset.diagnostics) CHECK(d.find("ambiguous") != std::string::npos);

    Vec m1 = a4.simple_roots()[0].coords + a4.simple_roots()[1].coords +
             a4.simple_roots()[2].coords;
    Vec m2 = a4.simple_roots()[1].coords + a4.simple_roots()[2].coords +
             a4.simple_roots()[3].coords;
    std::set<int> expected_max = {a4.root_of(m1).first, a4.root_of(m2).first};
    CHECK(poset.elements[poset.max_index] == expected_max);

    long d = 0;
    for (long h : poset.heights) d = std::max(d, h);
    CHECK(poset.heights[poset.max_index] == d);
    long min_h = d;
    for (long h : poset.heights) min_h = std::min(min_h, h);
    CHECK(min_h == 0);
    // the seeded minimal element sits at height zero
    int b_index = -1;
    for (size_t i = 0; i < poset.elements.size(); ++i)
        if (poset.elements[i] == B) b_index = (int)i;
    REQUIRE(b_index >= 0);
    CHECK(poset.heights[b_index] == 0);

    SUBCASE("dot export") {
        std::string dot = hasse_dot(a4, poset);
        CHECK(dot.find("digraph") != std::string::npos);
        CHECK(dot.find("->") != std::string::npos);
    }
}

TEST_CASE("every A4 and D4 orbit poset has a unique maximal element") {
    for (const char* label : {"A4", "D4"}) {
        RootSystem rs = RootSystem::build(label);
        WeylGroup W(rs);
        for (auto& orbit : orbit_partition(W, all_admissible(rs))) {
            auto poset = orbit_and_hasse(W, orbit.front());
            CHECK(poset.maximal_indices.size() == 1);
            // every element reaches the maximum; the only recorded
            // diagnostics are the sideways-move ambiguities
            for (auto& d : poset.diagnostics)
                CHECK(d.find("ambiguous") != std::string::npos);
            for (long h : poset.heights) CHECK(h >= 0);
        }
    }
}

TEST_CASE("poset classification rejects the folded system") {
    RootSystem g2 = RootSystem::build("G2");
    WeylGroup W(g2);
    CHECK_THROWS_AS(orbit_and_hasse(W, {g2.simple_index(1)}), std::invalid_argument);
}

TEST_CASE("folded admissible collection of G2") {
    RootSystem d4 = RootSystem::build("D4");
    WeylGroup w4(d4);
    RootSystem g2 = RootSystem::build("G2");
    WeylGroup wg2(g2);
    FoldingMap fold = FoldingMap::d4_triality();
    auto folded = folded_admissibles(d4, fold, g2, wg2);

    // two orbits of three, plus the empty set: |B| = 7 with it, 6 without
    CHECK(folded.sets.size() == 7);
    REQUIRE(folded.orbits.size() == 2);
    CHECK(folded.orbits[0].size() == 3);
    CHECK(folded.orbits[1].size() == 3);

    int b0 = g2.simple_index(0), b1 = g2.simple_index(1);
    Vec high = Rational(3) * g2.simple_roots()[0].coords + Rational(2) * g2.simple_roots()[1].coords;
    int highest = g2.root_of(high).first;

    auto contains = [&](const std::vector<std::set<int>>& orbit, const std::set<int>& S) {
        return std::find(orbit.begin(), orbit.end(), S) != orbit.end();
    };
    bool single_orbit_found = contains(folded.orbits[0], {b1}) || contains(folded.orbits[1], {b1});
    bool pair_orbit_found = contains(folded.orbits[0], {b0, highest}) ||
                            contains(folded.orbits[1], {b0, highest});
    CHECK(single_orbit_found);
    CHECK(pair_orbit_found);

    // {beta0} alone is not admissible here; its closure is the orthogonal pair
    for (auto& S : folded.sets) CHECK(S != std::set<int>{b0});
    CHECK(closure_in_collection(folded.sets, {b0}) == std::set<int>{b0, highest});
    CHECK_THROWS_AS(closure_in_collection(folded.sets, {b0, b1}), std::runtime_error);

    // projection of the D4 closure set is {beta0, 3 beta0 + 2 beta1}
    std::set<int> xcl = closure(
        d4, {d4.simple_index(0), d4.simple_index(1), d4.simple_index(3)});
    CHECK(reynolds_image(d4, fold, g2, xcl) == std::set<int>{b0, highest});
}

TEST_CASE("the two admissibility definitions agree exhaustively (A3, D4)") {
    for (const char* label : {"A3", "D4"}) {
        RootSystem rs = RootSystem::build(label);
        WeylGroup W(rs);
        int n = (int)rs.positive_roots().size();
        std::vector<std::set<int>> orth{{}};
        for (size_t head = 0; head < orth.size(); ++head) {
            auto cur = orth[head];
            for (int p = cur.empty() ? 0 : *cur.rbegin() + 1; p < n; ++p) {
                bool ok = true;
                for (int q : cur)
                    if (!rs.bilinear(p, q).is_zero()) ok = false;
                if (!ok) continue;
                auto next = cur;
                next.insert(p);
                orth.push_back(next);
            }
        }
        for (auto& B : orth)
            CHECK(is_admissible(rs, B, AdmDefinition::OrbitForm, &W) ==
                  is_admissible(rs, B, AdmDefinition::ClosureForm));
    }
}
