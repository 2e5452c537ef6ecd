#include <doctest.h>

#include <random>
#include <set>

#include "brauer/roots.hpp"

using namespace brauer;

namespace {
Vec simple(const RootSystem& rs, int i) { return rs.simple_roots()[i].coords; }
}  // namespace

TEST_CASE("positive root counts") {
    CHECK(RootSystem::build("D4").positive_roots().size() == 12);
    CHECK(RootSystem::build("A4").positive_roots().size() == 10);
    CHECK(RootSystem::build("D5").positive_roots().size() == 20);
    CHECK(RootSystem::build("A5").positive_roots().size() == 15);
    CHECK_THROWS(RootSystem::build(SystemType::D, 3));
    CHECK_THROWS(RootSystem::build(SystemType::A, 9));
}

TEST_CASE("D4 realization: a1 = e1+e2, a_i = e_i - e_{i-1}") {
    RootSystem d4 = RootSystem::build("D4");
    auto eps = [&](int i) {
        Vec v(4);
        v[i] = Rational(1);
        return v;
    };
    CHECK(simple(d4, 0) == eps(0) + eps(1));
    CHECK(simple(d4, 1) == eps(1) - eps(0));
    CHECK(simple(d4, 2) == eps(2) - eps(1));
    CHECK(simple(d4, 3) == eps(3) - eps(2));
    // star diagram with center 3 (0-based index 2)
    CHECK(d4.nodes_adjacent(0, 2));
    CHECK(d4.nodes_adjacent(1, 2));
    CHECK(d4.nodes_adjacent(3, 2));
    CHECK(!d4.nodes_adjacent(0, 1));
    CHECK(!d4.nodes_adjacent(0, 3));
    CHECK(!d4.nodes_adjacent(1, 3));
}

TEST_CASE("heights") {
    RootSystem d4 = RootSystem::build("D4");
    CHECK(d4.height_of(d4.simple_index(2)) == 1);
    // a1+a2+2a3+a4 has height 5
    Vec v = simple(d4, 0) + simple(d4, 1) + Rational(2) * simple(d4, 2) + simple(d4, 3);
    auto [idx, sign] = d4.root_of(v);
    CHECK(sign == 1);
    CHECK(d4.height_of(idx) == 5);
    // maximal height over the positive roots, by full enumeration
    long max_h = 0;
    for (int p = 0; p < 12; ++p) max_h = std::max(max_h, d4.height_of(p));
    CHECK(max_h == 5);
    CHECK_THROWS_AS(d4.root_of(Rational(3) * v), std::domain_error);
}

TEST_CASE("triality permutes the simple roots as a 3-cycle") {
    RootSystem d4 = RootSystem::build("D4");
    FoldingMap f = FoldingMap::d4_triality();
    CHECK(f.apply(simple(d4, 0)) == simple(d4, 1));  // a1 -> a2
    CHECK(f.apply(simple(d4, 1)) == simple(d4, 3));  // a2 -> a4
    CHECK(f.apply(simple(d4, 2)) == simple(d4, 2));  // a3 fixed
    CHECK(f.apply(simple(d4, 3)) == simple(d4, 0));  // a4 -> a1

    // order 3 on all 24 roots
    for (auto& r : d4.positive_roots())
        for (int s : {1, -1}) {
            Vec v = Rational(s) * r.coords;
            CHECK(f.apply(f.apply(f.apply(v))) == v);
        }
}

TEST_CASE("averaging projection: beta0, beta1 and their norms") {
    RootSystem d4 = RootSystem::build("D4");
    FoldingMap f = FoldingMap::d4_triality();
    Vec beta0 = f.reynolds(simple(d4, 0));
    Vec beta1 = f.reynolds(simple(d4, 2));
    Vec expected0 = Rational(Int(1), Int(3)) * (simple(d4, 0) + simple(d4, 1) + simple(d4, 3));
    CHECK(beta0 == expected0);
    CHECK(beta1 == simple(d4, 2));
    CHECK(dot(beta0, beta0) == Rational(Int(2), Int(3)));
    CHECK(dot(beta1, beta1) == Rational(2));

    SUBCASE("idempotent projection commuting with sigma") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> d(-5, 5);
        for (int iter = 0; iter < 50; ++iter) {
            Vec v(4);
            for (auto& c : v) c = Rational(Int(d(rng)), Int(1 + (iter % 3)));
            CHECK(f.reynolds(f.reynolds(v)) == f.reynolds(v));
            CHECK(f.reynolds(f.apply(v)) == f.reynolds(v));
            CHECK(f.apply(f.reynolds(v)) == f.reynolds(v));
        }
    }
}

TEST_CASE("folded G2 system") {
    RootSystem g2 = RootSystem::build("G2");
    CHECK(g2.positive_roots().size() == 6);
    // short roots have squared norm 2/3, long roots 2
    int shorts = 0, longs = 0;
    for (int p = 0; p < 6; ++p) {
        Rational n = g2.bilinear(p, p);
        if (n == Rational(Int(2), Int(3))) ++shorts;
        if (n == Rational(2)) ++longs;
    }
    CHECK(shorts == 3);
    CHECK(longs == 3);

    // (beta0, 3 beta0 + 2 beta1) = 0, exact
    Vec b0 = simple(g2, 0), b1 = simple(g2, 1);
    CHECK(dot(b0, Rational(3) * b0 + Rational(2) * b1) == Rational(0));

    // highest root 3 beta0 + 2 beta1 is a positive root of height 5
    auto [idx, sign] = g2.root_of(Rational(3) * b0 + Rational(2) * b1);
    CHECK(sign == 1);
    CHECK(g2.height_of(idx) == 5);
}

TEST_CASE("the positive G2 roots are the listed images of the simple ones") {
    RootSystem g2 = RootSystem::build("G2");
    Vec b0 = g2.simple_roots()[0].coords, b1 = g2.simple_roots()[1].coords;
    auto refl = [&](const Vec& v, const Vec& root) { return g2.reflect(v, root); };
    std::set<int> generated;
    for (const Vec& v : {b0, refl(b0, b1), refl(refl(b0, b1), b0),  // short chain
                         b1, refl(b1, b0), refl(refl(b1, b0), b1)}) {
        auto [idx, sign] = g2.root_of(v);
        CHECK(sign == 1);
        generated.insert(idx);
    }
    CHECK(generated.size() == 6);
}

TEST_CASE("projection maps the positive D4 roots onto the positive G2 roots") {
    RootSystem d4 = RootSystem::build("D4");
    RootSystem g2 = RootSystem::build("G2");
    FoldingMap f = FoldingMap::d4_triality();
    std::set<int> image;
    for (auto& r : d4.positive_roots()) {
        auto [idx, sign] = g2.root_of(f.reynolds(r.coords));
        CHECK(sign == 1);
        image.insert(idx);
    }
    CHECK(image.size() == 6);
}

TEST_CASE("reflections preserve the bilinear form") {
    RootSystem d4 = RootSystem::build("D4");
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(0, 11), d(-4, 4);
    for (int iter = 0; iter < 100; ++iter) {
        Vec x(4), y(4);
        for (auto& c : x) c = Rational(d(rng));
        for (auto& c : y) c = Rational(d(rng));
        const Vec& alpha = d4.positive_roots()[pick(rng)].coords;
        CHECK(dot(d4.reflect(x, alpha), d4.reflect(y, alpha)) == dot(x, y));
    }
}
