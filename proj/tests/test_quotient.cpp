#include "doctest.h"
#include "toricdiv/quotient.hpp"

#include <numeric>
#include <random>

using namespace toricdiv;

namespace {

// Oracle: the group N / (sum Z g_i) via lattice points of the parallelepiped; a point whose
// coefficients have denominator exactly r generates when the group is cyclic.
CyclicQuotientType quotient_oracle(const IntegerMatrix& g) {
    auto pts = fundamental_parallelepiped_points(g);
    long long r = static_cast<long long>(pts.size());
    if (r == 1) return CyclicQuotientType::make(1, std::vector<long long>(g.rows(), 0));
    for (const auto& p : pts) {
        auto c = solve_row_combination(g, p);
        Integer den = 1;
        for (const auto& ci : c) den = lcm(den, ci.den());
        if (den != r) continue;
        std::vector<long long> w;
        for (const auto& ci : c) w.push_back(static_cast<long long>((ci * Rational(r)).num()));
        return CyclicQuotientType::make(r, w);
    }
    throw Error("not cyclic");
}

}  // namespace

TEST_CASE("cone to quotient examples") {
    auto smooth = cone_to_quotient(Cone{{LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1}}});
    CHECK(smooth.str() == "1/1(0,0,0)");
    CHECK(reid_tai_classify(smooth) == SingularityClass::Smooth);

    auto t = cone_to_quotient(Cone{{LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}, LatticeVector{1, 1, 2}}});
    CHECK(t.normalize().str() == "1/2(1,1,1)");

    CHECK_THROWS_AS(cone_to_quotient(Cone{{LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}, LatticeVector{1, 1, 0}}}),
                    Error);
}

TEST_CASE("labels with negative weights reduce mod r") {
    auto t = CyclicQuotientType::parse("1/3(1,3,-1)");
    CHECK(t.str() == "1/3(1,0,2)");
    CHECK(t.normalize().str() == "1/3(0,1,2)");
    CHECK_THROWS_AS(CyclicQuotientType::parse("1/4(2,2,0)"), Error);
    CHECK_THROWS_AS(CyclicQuotientType::parse("1/4[1,2,3]"), Error);
}

TEST_CASE("reid-tai examples") {
    CHECK(reid_tai_classify(CyclicQuotientType::make(2, {1, 1, 1})) == SingularityClass::Terminal);
    CHECK(reid_tai_classify(CyclicQuotientType::make(3, {1, 1, 1})) == SingularityClass::CanonicalNotTerminal);
    CHECK(reid_tai_classify(CyclicQuotientType::make(4, {1, 3, 1})) == SingularityClass::Terminal);
    CHECK(reid_tai_classify(CyclicQuotientType::make(2, {1, 1, 0})) == SingularityClass::CanonicalNotTerminal);
    CHECK(reid_tai_classify(CyclicQuotientType::make(5, {1, 1, 1})) == SingularityClass::NotCanonical);
    CHECK(ages(CyclicQuotientType::make(4, {1, 3, 1})) ==
          std::vector<Rational>{Rational(Integer(5), Integer(4)), Rational(Integer(3), Integer(2)),
                                Rational(Integer(7), Integer(4))});
}

TEST_CASE("random cones match the parallelepiped oracle") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> d(-4, 4);
    int tested = 0;
    for (int trial = 0; trial < 2000 && tested < 300; ++trial) {
        std::vector<LatticeVector> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(LatticeVector{d(rng), d(rng), d(rng)});
        bool prim = true;
        for (const auto& g : gens) prim = prim && !g.is_zero() && g.content() == 1;
        if (!prim) continue;
        Cone c{gens};
        IntegerMatrix m = c.matrix();
        Integer det = determinant(m);
        if (det == 0) continue;
        SmithForm s = smith_normal_form(m);
        if (s.diagonal[1] != 1) {
            CHECK_THROWS_AS(cone_to_quotient(c), Error);
            continue;
        }
        ++tested;
        auto t = cone_to_quotient(c);
        CHECK(Integer(t.order) == (det < 0 ? Integer(-det) : det));
        CHECK(t.normalize() == quotient_oracle(m).normalize());
    }
    CHECK(tested > 100);
}

TEST_CASE("classification is invariant under units and permutations") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        long long r = std::uniform_int_distribution<long long>(2, 30)(rng);
        std::uniform_int_distribution<long long> d(0, r - 1);
        std::vector<long long> w{d(rng), d(rng), d(rng)};
        if (std::gcd(std::gcd(w[0], w[1]), std::gcd(w[2], r)) != 1) continue;
        auto t = CyclicQuotientType::make(r, w);
        long long u = 0;
        do u = d(rng); while (std::gcd(u, r) != 1);
        auto t2 = CyclicQuotientType::make(r, {u * w[2], u * w[0], u * w[1]});
        CHECK(reid_tai_classify(t) == reid_tai_classify(t2));
        CHECK(t.normalize() == t2.normalize());

        auto a = ages(t);
        for (long long k = 1; k < r; ++k) {
            long long moving = 0;
            for (long long x : t.weights) moving += (k * x) % r != 0;
            CHECK(a[static_cast<std::size_t>(k - 1)] + a[static_cast<std::size_t>(r - k - 1)] == Rational(moving));
        }
    }
}

TEST_CASE("terminal lemma small orders") {
    auto rep2 = verify_terminal_lemma(2, 1);
    REQUIRE(rep2.orders.size() == 1);
    REQUIRE(rep2.orders[0].terminal_types.size() == 1);
    CHECK(rep2.orders[0].terminal_types[0].str() == "1/2(1,1,1)");

    auto rep5 = verify_terminal_lemma(5, 2);
    CHECK(rep5.ok());
    const auto& five = rep5.orders.back();
    CHECK(five.order == 5);
    std::vector<CyclicQuotientType> want{standard_terminal_type(5, 1), standard_terminal_type(5, 2)};
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    CHECK(five.terminal_types == want);
}
