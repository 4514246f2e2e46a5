#include "doctest.h"
#include "toricdiv/surface.hpp"

#include <numeric>
#include <random>

using namespace toricdiv;

namespace {

Rational q(long long a, long long b) { return Rational(Integer(a), Integer(b)); }

Rational a_family(long long a2, long long a3, long long d1) {
    return -(q(1, d1) * q(a2 + a3, a2 * a3) + q((a2 + a3) * (a2 + a3), a2 * a3));
}

}  // namespace

TEST_CASE("contraction type syntax") {
    for (std::string s : {"An:2,3,1", "An:1,1,2,special", "D:6", "D:7,special", "E6", "E7", "E8", "odpA:2,2,1"})
        CHECK(ContractionType::parse(s).spelling() == s);
    CHECK(ContractionType::parse("D:6").weights() == std::vector<long long>{2, 4, 5});
    CHECK(ContractionType::parse("D:7").weights() == std::vector<long long>{2, 5, 6});
    CHECK(ContractionType::parse("An:2,3,1").name() == "A4");
    CHECK(ContractionType::parse("odpA:2,2,1").weights() == std::vector<long long>{1, 2, 2, 1});
    CHECK_THROWS_AS(ContractionType::parse("An:2,4,1"), Error);
    CHECK_THROWS_AS(ContractionType::parse("An:1,2,2,special"), Error);
    CHECK_THROWS_AS(ContractionType::parse("D:3"), Error);
    CHECK_THROWS_AS(ContractionType::parse("odpA:2,2,2"), Error);
    CHECK_THROWS_AS(ContractionType::parse("odpA:3,3,3"), Error);
    CHECK_NOTHROW(ContractionType::parse("odpA:3,2,2"));
    CHECK_THROWS_AS(ContractionType::parse("F4"), Error);
}

TEST_CASE("designated polynomials are quasihomogeneous of degree sum(beta) - 1") {
    for (std::string s : {"An:2,3,1", "An:1,1,2,special", "D:6", "D:7", "D:8,special", "E6", "E7", "E8"}) {
        auto t = ContractionType::parse(s);
        auto beta = t.weights();
        long long total = std::accumulate(beta.begin(), beta.end(), 0LL);
        for (const auto& l : t.phi().exponents) {
            long long deg = 0;
            for (std::size_t i = 0; i < l.size(); ++i) deg += l[i] * beta[i];
            CHECK(deg == total - 1);
        }
    }
}

TEST_CASE("weighted projective intersections") {
    CHECK(wpp_intersection(1, 1, {1, 1, 1}) == Rational(1));
    CHECK(wpp_intersection(2, 2, {1, 2, 1}) == Rational(2));
    CHECK(wpp_intersection(3, 3, {2, 1, 3}) == q(3, 2));
}

TEST_CASE("weights decomposition") {
    auto e8 = weights_decomposition({6, 10, 15});
    CHECK(e8.a == std::array<long long, 3>{1, 1, 1});
    CHECK(e8.d == std::array<long long, 3>{5, 3, 2});
    auto e6 = weights_decomposition({3, 4, 6});
    CHECK(e6.a == std::array<long long, 3>{1, 2, 1});
    CHECK(e6.d == std::array<long long, 3>{2, 3, 1});
    CHECK(weights_decomposition({1, 1, 1}).d == std::array<long long, 3>{1, 1, 1});
    CHECK_THROWS_AS(weights_decomposition({4, 4, 4}), Error);

    int admissible = 0;
    for (long long b1 = 1; b1 <= 60; ++b1)
        for (long long b2 = 1; b2 <= 60; ++b2)
            for (long long b3 = 1; b3 <= 60; ++b3) {
                if (std::gcd(std::gcd(b1, b2), b3) != 1) continue;
                WeightsDecomposition w;
                try {
                    w = weights_decomposition({b1, b2, b3});
                } catch (const Error&) {
                    continue;
                }
                ++admissible;
                std::array<long long, 3> b{b1, b2, b3};
                for (int i = 0; i < 3; ++i) CHECK(w.a[i] * w.d[(i + 1) % 3] * w.d[(i + 2) % 3] == b[i]);
            }
    CHECK(admissible > 100000);
}

TEST_CASE("adjunction degrees") {
    CHECK(adjunction_degree(wpp_model({1, 1, 1})) == Rational(-3));
    CHECK(adjunction_degree(wpp_model({6, 10, 15})) == q(-31, 30));
    CHECK(adjunction_degree(wpp_model({3, 4, 6})) == q(-13, 6));
}

TEST_CASE("nef and ample") {
    SurfaceModel p113 = wpp_model({1, 1, 3});
    auto r = nef_test(p113, DivisorClass{0, {}});
    CHECK(r.nef);
    CHECK_FALSE(r.ample);
    CHECK(point_case_inequality(1, 3, 2) == q(-1, 2));

    LatticeVector w = blowup_ray(GermSpec::odp(), std::vector<long long>{1, 1, 1, 1});
    SurfaceModel quad = star_model(GermSpec::odp(), w);
    CHECK(quad.kind == SurfaceModel::Kind::QuadricStar);
    REQUIRE(quad.boundary_count() == 4);
    DivisorClass all{0, {1, 1, 1, 1}};
    CHECK(nef_test(quad, all).nef);
    CHECK(nef_test(quad, adjunction_class(quad)).witness.has_value());
}

TEST_CASE("nef classes meet effective boundary combinations nonnegatively") {
    std::mt19937 rng(51);
    for (auto type : {"E6", "E7", "E8", "odpA:4,3,2", "odpA:1,1,1", "An:2,3,2"}) {
        auto t = ContractionType::parse(type);
        SurfaceModel s = star_model(t.germ(), t.ray());
        const std::size_t n = s.boundary_count();
        auto random_class = [&](int lo) {
            DivisorClass c;
            for (std::size_t j = 0; j < n; ++j)
                c.coeffs.push_back(q(lo + static_cast<long long>(rng() % 9), 1 + static_cast<long long>(rng() % 5)));
            return c;
        };
        int nef_seen = 0;
        for (int i = 0; i < 200; ++i) {
            DivisorClass c = random_class(-4);
            auto r = nef_test(s, c);
            if (!r.nef) {
                REQUIRE(r.witness);
                DivisorClass curve{0, std::vector<Rational>(n, Rational(0))};
                curve.coeffs[*r.witness] = 1;
                CHECK(intersect(s, c, curve).sign() < 0);
                continue;
            }
            ++nef_seen;
            for (int k = 0; k < 5; ++k) CHECK(intersect(s, c, random_class(0)).sign() >= 0);
        }
        CHECK(nef_seen > 0);
        if (n == 3)
            for (int i = 0; i < 50; ++i) CHECK(nef_test(s, random_class(1)).ample);
    }
}

TEST_CASE("diff coefficients of the star fan match the gcd formulas") {
    for (long long b1 = 1; b1 <= 12; ++b1)
        for (long long b2 = 1; b2 <= 12; ++b2)
            for (long long b3 = 1; b3 <= 12; ++b3) {
                if (std::gcd(std::gcd(b1, b2), b3) != 1) continue;
                WeightsDecomposition dec;
                try {
                    dec = weights_decomposition({b1, b2, b3});
                } catch (const Error&) {
                    continue;
                }
                SurfaceModel s = star_model(GermSpec::smooth(), LatticeVector{b1, b2, b3});
                std::vector<Integer> got = s.star.diff_indices, want(dec.d.begin(), dec.d.end());
                std::sort(got.begin(), got.end());
                std::sort(want.begin(), want.end());
                CHECK(got == want);
            }

    for (long long b2 = 1; b2 <= 15; ++b2)
        for (long long b4 = 1; b4 <= b2; ++b4) {
            long long b3 = b2 + 1 - b4;
            ContractionType t;
            try {
                t = ContractionType::odp_type(b2, b3, b4);
            } catch (const Error&) {
                continue;
            }
            SurfaceModel s = star_model(t.germ(), t.ray());
            std::vector<Integer> got = s.star.diff_indices;
            std::vector<Integer> want{std::gcd(b2, b4), std::gcd(b2, b3), std::gcd(1LL, b4), std::gcd(1LL, b3)};
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
}

TEST_CASE("gamma tilde squared: exceptional types") {
    CHECK(gamma_tilde_sq(ContractionType::e_type(6)).value == q(-13, 6));
    CHECK(gamma_tilde_sq(ContractionType::e_type(7)).value == q(-19, 12));
    CHECK(gamma_tilde_sq(ContractionType::e_type(8)).value == q(-31, 30));
    CHECK(gamma_tilde_sq(ContractionType::a_type(1, 1, 2, true)).value == Rational(-5));
    CHECK(gamma_tilde_sq(ContractionType::odp_type(2, 2, 1)).value == q(-9, 2));
    CHECK(*gamma_tilde_sq(ContractionType::e_type(6)).gamma_degree == Rational(2));
    CHECK(*gamma_tilde_sq(ContractionType::e_type(7)).gamma_degree == Rational(3));
    CHECK(*gamma_tilde_sq(ContractionType::e_type(8)).gamma_degree == Rational(1));
}

TEST_CASE("closed-form route equals the star route and the family formulas") {
    for (long long d1 = 1; d1 <= 4; ++d1)
        for (long long a2 = 1; a2 <= 6; ++a2)
            for (long long a3 = a2; a3 <= 6; ++a3) {
                if (std::gcd(a2, a3) != 1) continue;
                auto t = ContractionType::a_type(a2, a3, d1);
                auto closed = gamma_tilde_sq(t);
                CHECK(closed.value == a_family(a2, a3, d1));
                CHECK(gamma_tilde_sq_star(t).value == closed.value);
            }
    for (long long n = 4; n <= 20; ++n)
        for (bool special : {false, true}) {
            auto t = ContractionType::d_type(n, special);
            CHECK(gamma_tilde_sq_star(t).value == gamma_tilde_sq(t).value);
        }
    for (int e : {6, 7, 8}) CHECK(gamma_tilde_sq_star(ContractionType::e_type(e)).value == gamma_tilde_sq(ContractionType::e_type(e)).value);
    CHECK(gamma_tilde_sq_star(ContractionType::a_type(1, 1, 2, true)).value == Rational(-5));
}

TEST_CASE("self-restriction identity on star models") {
    for (auto type : {"E6", "E7", "E8", "An:2,5,3", "D:9", "odpA:5,4,2", "odpA:7,4,4"}) {
        auto t = ContractionType::parse(type);
        SurfaceModel s = star_model(t.germ(), t.ray());
        DivisorClass gamma = star_gamma_class(t.germ(), t.ray(), s, t.phi());
        DivisorClass self = star_self_restriction(t.germ(), t.ray(), s);
        auto g = gamma_tilde_sq_star(t);
        CHECK(intersect(s, self, gamma) == g.adjunction_dot / g.a_plus_one);
        CHECK(intersect(s, self, gamma) - intersect(s, gamma, gamma) == g.value);
    }
}
