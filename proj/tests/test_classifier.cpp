#include "doctest.h"

#include "toricdiv/classifier.hpp"

#include <algorithm>
#include <map>

using namespace toricdiv;

namespace {

std::vector<std::string> listed_types(const ContractionReport& r) {
    std::vector<std::string> out;
    for (const auto& s : r.singularities)
        if (s.type) out.push_back(s.type->str());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> expected(std::vector<std::pair<long long, std::vector<long long>>> list) {
    std::vector<std::string> out;
    for (auto& [r, w] : list)
        if (r > 1) out.push_back(CyclicQuotientType::make(r, w).normalize().str());
    std::sort(out.begin(), out.end());
    return out;
}

Integer det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
    return determinant(IntegerMatrix::from_rows({a, b, c}));
}

}  // namespace

TEST_CASE("exceptional types have the listed quotient singularities") {
    CHECK(listed_types(build_report(ContractionType::e_type(6))) ==
          expected({{3, {1, 1, -1}}, {3, {1, 1, -1}}, {2, {1, 1, 1}}}));
    CHECK(listed_types(build_report(ContractionType::e_type(7))) ==
          expected({{3, {1, 1, -1}}, {4, {3, 1, -1}}, {2, {1, 1, 1}}}));
    CHECK(listed_types(build_report(ContractionType::e_type(8))) ==
          expected({{5, {1, 1, -1}}, {3, {1, 1, -1}}, {2, {1, 1, 1}}}));
}

TEST_CASE("D_n singularities") {
    for (long long n = 4; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(listed_types(build_report(ContractionType::d_type(n))) ==
              expected({{n - 2, {1, 3, -1}}, {2, {1, 1, 1}}, {2, {1, 1, 1}}}));
        if (n >= 5) {
            auto special = build_report(ContractionType::d_type(n, true));
            CHECK(listed_types(special) == expected({{n - 2, {1, 3, -1}}}));
            CHECK(special.fixtures.size() == 1);
        }
    }
}

TEST_CASE("A_n singularities") {
    for (long long a2 = 1; a2 <= 8; ++a2)
        for (long long a3 = a2; a3 <= 8; ++a3) {
            if (std::gcd(a2, a3) != 1) continue;
            for (long long d1 = 1; d1 <= 6; ++d1) {
                INFO(a2, " ", a3, " ", d1);
                auto r = build_report(ContractionType::a_type(a2, a3, d1));
                CHECK(listed_types(r) ==
                      expected({{a2 * d1, {1, a3 * d1 + 1, -1}}, {a3 * d1, {1, a2 * d1 + 1, -1}}}));
            }
        }
    auto special = build_report(ContractionType::a_type(1, 1, 2, true));
    CHECK(listed_types(special).empty());
    REQUIRE(special.singularities.size() == 1);
    CHECK(special.singularities[0].fixture);
}

TEST_CASE("ODP singularities") {
    for (long long b2 = 1; b2 <= 20; ++b2)
        for (long long b4 = 1; 2 * b4 <= b2 + 1; ++b4) {
            long long b3 = b2 + 1 - b4;
            INFO(b2, " ", b3, " ", b4);
            auto r = build_report(ContractionType::odp_type(b2, b3, b4));
            CHECK(listed_types(r) == expected({{b3, {1, b2 + 1, -1}}, {b4, {1, b2 + 1, -1}}}));
        }
}

TEST_CASE("chart cones") {
    auto types = enumerate_types(GermSpec::smooth(), 6);
    auto odp = enumerate_types(GermSpec::odp(), 10);
    types.insert(types.end(), odp.begin(), odp.end());
    for (const auto& t : types) {
        CAPTURE(t.spelling());
        for (const auto& c : chart_sites(t)) {
            CAPTURE(c.tag);
            CHECK(c.rho == t.ray());
            CHECK(c.e4 == c.rho + c.g);
            Integer d = det3(c.rho, c.g, c.h);
            CHECK(d != 0);
            // e4 = rho + g keeps the lattice index of the site cone
            Integer d4 = det3(c.e4, c.g, c.h);
            CHECK(abs(d4) == abs(d));
            // curve sites: g completes the saturation of <rho, h>, so the index is that of <rho, h>
            if (c.on_curve) CHECK(saturation_index(IntegerMatrix::from_rows({c.rho, c.h})) == abs(d));
            auto near = surface_label(c.e4, c.h, c.rho);
            auto far = surface_label(c.e4, c.h, c.g);
            CHECK(near.order == far.order);
            if (near.order > 1) CHECK((near.weights[1] + far.weights[1]) % near.order == 0);
        }
    }
}

TEST_CASE("surface labels at the drawn points") {
    auto labels = [](const ContractionType& t) {
        std::map<std::string, std::pair<std::string, std::string>> out;
        for (const auto& c : chart_sites(t))
            out[c.tag] = {surface_label(c.e4, c.h, c.rho).str(), surface_label(c.e4, c.h, c.g).str()};
        return out;
    };
    auto e7 = labels(ContractionType::e_type(7));
    CHECK(e7["P1"] == std::pair<std::string, std::string>{"1/4(1,1)", "1/4(1,3)"});
    auto e8 = labels(ContractionType::e_type(8));
    CHECK(e8["C1"] == std::pair<std::string, std::string>{"1/5(1,4)", "1/5(1,1)"});
    CHECK(e8["C2"] == std::pair<std::string, std::string>{"1/3(1,2)", "1/3(1,1)"});
    for (long long n = 6; n <= 30; ++n) {
        if ((n - 2) % 3 == 0) continue;
        auto d = labels(ContractionType::d_type(n));
        CAPTURE(n);
        CHECK(d["P1"].first == CyclicQuotientType{n - 2, {1, (-3 % (n - 2) + (n - 2)) % (n - 2)}, false}.str());
        CHECK(d["P1"].second == CyclicQuotientType{n - 2, {1, 3 % (n - 2)}, false}.str());
    }
    for (long long b2 = 2; b2 <= 15; ++b2)
        for (long long b4 = 1; 2 * b4 <= b2 + 1; ++b4) {
            long long b3 = b2 + 1 - b4;
            if (std::gcd(b2 + 1, b3) != 1 || b3 == 1) continue;
            auto o = labels(ContractionType::odp_type(b2, b3, b4));
            INFO(b2, " ", b3);
            CHECK(o["P3"].second == CyclicQuotientType{b3, {1, (b2 + 1) % b3}, false}.str());
        }
}

TEST_CASE("Gamma meets each multiple boundary curve at the chart sites") {
    auto types = enumerate_types(GermSpec::smooth(), 6);
    for (const auto& t : types) {
        if (t.special) continue;
        CAPTURE(t.spelling());
        const GermSpec germ = t.germ();
        const LatticeVector rho = t.ray();
        SurfaceModel s = star_model(germ, rho);
        DivisorClass gamma = star_gamma_class(germ, rho, s, t.phi());
        auto sites = chart_sites(t);
        for (std::size_t j = 0; j < s.boundary_count(); ++j) {
            if (s.star.diff_indices[j] == 1) continue;
            DivisorClass cj{0, std::vector<Rational>(s.boundary_count(), Rational(0))};
            cj.coeffs[j] = 1;
            Rational expected_dot = 0;
            for (const auto& c : sites) {
                if (c.h != s.star.lifts[j]) continue;
                if (c.on_curve) {
                    expected_dot += 1;
                } else {
                    LatticeVector a = primitive(quotient_image(rho, c.g)), b = primitive(quotient_image(rho, c.h));
                    expected_dot += Rational(Integer(1), Integer(cone_to_quotient(Cone{{a, b}}).order));
                }
            }
            CHECK(intersect(s, gamma, cj) == expected_dot);
        }
    }
}

TEST_CASE("enumeration") {
    auto smooth = enumerate_types(GermSpec::smooth(), 3);
    std::vector<std::string> names;
    for (const auto& t : smooth) names.push_back(t.spelling());
    CHECK(std::count(names.begin(), names.end(), "An:1,1,2,special") == 1);
    CHECK(std::count(names.begin(), names.end(), "D:4") == 1);
    CHECK(std::count(names.begin(), names.end(), "D:5,special") == 1);
    CHECK(std::count(names.begin(), names.end(), "E8") == 1);
    CHECK(std::count(names.begin(), names.end(), "An:2,2,1") == 0);
    CHECK(enumerate_types(GermSpec::cyclic(5, 2), 10).empty());
    for (const auto& t : enumerate_types(GermSpec::odp(), 12)) {
        const auto& b = t.params;
        CHECK(b[0] + 1 == b[1] + b[2]);
        CHECK(b[1] >= b[2]);
    }
    CHECK_THROWS_AS(enumerate_types(GermSpec::smooth(), 0), Error);
}

TEST_CASE("every enumerated type satisfies A, B and C") {
    auto types = enumerate_types(GermSpec::smooth(), 6);
    auto odp = enumerate_types(GermSpec::odp(), 6);
    types.insert(types.end(), odp.begin(), odp.end());
    for (const auto& t : types) {
        CAPTURE(t.spelling());
        auto c = check_conditions(t);
        CHECK(c.A);
        CHECK(c.B);
        CHECK(c.C);
        CHECK(c.all());
    }
}

TEST_CASE("conditions pinpoint the failing clause") {
    auto e6 = ContractionType::e_type(6).phi();
    auto bad = check_conditions(GermSpec::smooth(), {2, 3, 4}, e6);
    CHECK_FALSE(bad.B);
    auto e8 = ContractionType::e_type(8).phi();
    auto worse = check_conditions(GermSpec::smooth(), {2, 3, 3}, e8);
    CHECK_FALSE(worse.B);
    CHECK_FALSE(worse.C);
    CHECK_FALSE(worse.all());
    // a double plane has the right degree; only the generic term makes the pair canonical
    auto doubled = check_conditions(GermSpec::smooth(), {1, 1, 1}, MonomialBranch::parse("x1^2", 3));
    CHECK(doubled.B);
    CHECK(doubled.C);
    CHECK_FALSE(doubled.A_without_generic_term);
    CHECK(doubled.A);
}

TEST_CASE("cyclic quotient germs admit no such contraction") {
    for (long long r = 2; r <= 30; ++r)
        for (long long q = 1; q < r; ++q) {
            if (std::gcd(r, q) != 1) continue;
            INFO(r, " ", q);
            auto o = cyclic_obstruction(GermSpec::cyclic(r, q));
            CHECK(o.discrepancy == Rational(Integer(-1), Integer(r)));
            CHECK(o.discrepancy < 0);
        }
    CHECK_THROWS_AS(cyclic_obstruction(GermSpec::smooth()), Error);
}

TEST_CASE("Du Val recognition") {
    CHECK(du_val_recognize({3, 4, 6}, ContractionType::e_type(6).phi()).kind == DuValClass::Kind::E6);
    CHECK(du_val_recognize({4, 6, 9}, ContractionType::e_type(7).phi()).kind == DuValClass::Kind::E7);
    CHECK(du_val_recognize({6, 10, 15}, ContractionType::e_type(8).phi()).kind == DuValClass::Kind::E8);
    for (const auto& t : enumerate_types(GermSpec::smooth(), 5)) {
        CAPTURE(t.spelling());
        auto c = du_val_recognize(t.weights(), t.phi());
        if (t.special) {
            if (t.family == ContractionType::Family::D) CHECK(c.kind == DuValClass::Kind::SpecialX1X2sqX3sq);
            continue;
        }
        CHECK(c.str() == t.name());
    }
    CHECK(du_val_recognize({4, 3, 2}, MonomialBranch::parse("x^2+y^2*z+z^4", 3)).str() == "D5");
    CHECK(du_val_recognize({21, 14, 6}, MonomialBranch::parse("x^2+y^3+z^7", 3)).str() == "not Du Val");
    CHECK(du_val_recognize({2, 1, 1}, MonomialBranch::parse("x*y+z^3", 3)).str() == "A2");
    CHECK_THROWS_AS(du_val_recognize({1, 1, 1}, MonomialBranch::parse("x^2+y^3", 3)), Error);
}

TEST_CASE("flags") {
    auto a = build_report(ContractionType::a_type(1, 2, 3));
    CHECK(a.log_surface_toric);
    CHECK(a.plt_blowup);
    CHECK_FALSE(a.non_normal_E);
    auto d = build_report(ContractionType::d_type(7, true));
    CHECK_FALSE(d.plt_blowup);
    CHECK(d.non_normal_E);
    CHECK_FALSE(d.log_surface_toric);
    CHECK(build_report(ContractionType::odp_type(3, 2, 2)).log_surface_toric);
    CHECK_FALSE(build_report(ContractionType::e_type(8)).log_surface_toric);
}

TEST_CASE("JSON reports round-trip and agree with the text form") {
    for (const auto& t : enumerate_types(GermSpec::smooth(), 3)) {
        CAPTURE(t.spelling());
        auto rep = build_report(t);
        auto j = report_to_json(rep, true);
        std::string dumped = j.dump(2);
        CHECK(nlohmann::ordered_json::parse(dumped).dump(2) == dumped);
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{"family", "params", "weights", "surface", "gamma_class",
                                                "gamma_tilde_sq", "singularities", "diagram", "flags", "fixtures",
                                                "charts", "notes", "fan"});
        std::string text = report_to_text(rep);
        CHECK(text.find("gamma_tilde_sq " + j["gamma_tilde_sq"].get<std::string>()) != std::string::npos);
        for (const auto& s : j["singularities"])
            if (!s["type"].is_null()) CHECK(text.find(s["type"].get<std::string>()) != std::string::npos);
        CHECK(Rational::parse(j["gamma_tilde_sq"].get<std::string>()) == gamma_tilde_sq(t).value);
    }
    auto special = report_to_json(build_report(ContractionType::a_type(1, 1, 2, true)), false);
    CHECK(special["fixtures"][0]["source"] == "fixture");
    CHECK(special["gamma_tilde_sq"] == "-5");
}
