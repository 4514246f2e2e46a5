#include "doctest.h"
#include "toricdiv/fan.hpp"

using namespace toricdiv;

TEST_CASE("germ parsing") {
    CHECK(GermSpec::parse("cyclic:5,2") == GermSpec::cyclic(5, 2));
    CHECK(GermSpec::parse("odp").kind == GermSpec::Kind::OrdinaryDoublePoint);
    CHECK(GermSpec::parse("smooth2").dim == 2);
    CHECK_THROWS_AS(GermSpec::parse("cyclic:4,2"), Error);
    CHECK_THROWS_AS(GermSpec::parse("cyclic:4"), Error);
    CHECK_THROWS_AS(GermSpec::parse("quartic"), Error);
}

TEST_CASE("canonical form is one on every germ ray") {
    for (auto spec : {GermSpec::smooth(3), GermSpec::smooth(2), GermSpec::cyclic(7, 3), GermSpec::odp()}) {
        ToricGerm g = toric_germ(spec);
        for (const auto& ray : g.rays) CHECK(dot(g.canonical_form, ray) == Rational(1));
        for (const auto& form : g.coordinate_forms)
            for (const auto& ray : g.rays) CHECK(dot(form, ray) >= Rational(0));
    }
}

TEST_CASE("blow-up rays") {
    CHECK(blowup_ray(GermSpec::smooth(), std::vector<long long>{1, 1, 1}) == LatticeVector{1, 1, 1});
    CHECK(blowup_ray(GermSpec::smooth(), std::vector<long long>{6, 10, 15}) == LatticeVector{6, 10, 15});
    CHECK_THROWS_AS(blowup_ray(GermSpec::smooth(), std::vector<long long>{2, 4, 6}), Error);
    CHECK_THROWS_AS(blowup_ray(GermSpec::smooth(), std::vector<long long>{1, 0, 1}), Error);
    CHECK_THROWS_AS(blowup_ray(GermSpec::smooth(), std::vector<long long>{1, 1}), Error);

    LatticeVector w = blowup_ray(GermSpec::odp(), std::vector<long long>{1, 2, 2, 1});
    CHECK(w == LatticeVector{1, 1, 3});
    auto weights = coordinate_weights(toric_germ(GermSpec::odp()), w);
    CHECK(weights == RationalVector{1, 2, 2, 1});
    CHECK_THROWS_AS(blowup_ray(GermSpec::odp(), std::vector<long long>{1, 2, 2, 2}), Error);
    CHECK_THROWS_AS(blowup_ray(GermSpec::odp(), std::vector<long long>{2, 2, 2, 2}), Error);

    GermSpec cyc = GermSpec::cyclic(5, 2);
    RationalVector cw{Rational(Integer(1), Integer(5)), Rational(Integer(3), Integer(5)),
                      Rational(Integer(2), Integer(5))};
    LatticeVector v = blowup_ray(cyc, cw);
    CHECK(coordinate_weights(toric_germ(cyc), v) == cw);
    CHECK_THROWS_AS(blowup_ray(cyc, RationalVector{Rational(Integer(1), Integer(5)), 1, 1}), Error);
}

TEST_CASE("star subdivision of the octant") {
    Fan f = germ_fan(GermSpec::smooth());
    Fan g = star_subdivide(f, LatticeVector{1, 1, 1});
    CHECK(g.maximal_cones.size() == 3);
    for (const auto& c : g.maximal_cones) CHECK(c.has_generator(LatticeVector{1, 1, 1}));

    Fan h = star_subdivide(f, LatticeVector{1, 1, 0});
    CHECK(h.maximal_cones.size() == 2);
    CHECK(star_subdivide(f, LatticeVector{1, 0, 0}).maximal_cones == f.maximal_cones);
    CHECK_THROWS_AS(star_subdivide(f, LatticeVector{-1, 1, 1}), Error);
}

TEST_CASE("star surface of the weighted blow-up") {
    Fan g = star_subdivide(germ_fan(GermSpec::smooth()), LatticeVector{6, 10, 15});
    StarSurface s = star_surface(g, LatticeVector{6, 10, 15});
    REQUIRE(s.rays.size() == 3);
    Integer prod = 1;
    for (const auto& e : s.edge_indices) prod *= e;
    // P(6,10,15) is well formed with singular points of orders 6/(2*3), 10/(2*5), 15/(3*5)
    std::vector<Integer> sorted_diff = s.diff_indices;
    std::sort(sorted_diff.begin(), sorted_diff.end());
    CHECK(sorted_diff == std::vector<Integer>{2, 3, 5});
    CHECK(s.edge_indices == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("odp blow-up has four boundary curves") {
    LatticeVector w = blowup_ray(GermSpec::odp(), std::vector<long long>{1, 2, 2, 1});
    Fan g = star_subdivide(germ_fan(GermSpec::odp()), w);
    CHECK(g.maximal_cones.size() == 4);
    StarSurface s = star_surface(g, w);
    CHECK(s.rays.size() == 4);
}

TEST_CASE("fan json") {
    Fan f = germ_fan(GermSpec::smooth());
    auto j = fan_to_json(f);
    CHECK(j.dump() == R"({"rank":3,"cones":[[[1,0,0],[0,1,0],[0,0,1]]]})");
}
