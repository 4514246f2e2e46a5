#include "toricdiv/checks.hpp"

#include "toricdiv/classifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

namespace toricdiv {

namespace {

Rational q(long long a, long long b) { return Rational(Integer(a), Integer(b)); }

CheckResult timed(std::string name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = std::move(name);
    auto start = std::chrono::steady_clock::now();
    try {
        r.detail = body();
        r.passed = r.detail.empty();
        if (r.passed) r.detail = "ok";
    } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<std::string> listed(const ContractionType& t) {
    std::vector<std::string> out;
    for (const auto& s : build_report(t).singularities)
        if (s.type) out.push_back(s.type->str());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> normalized(const std::vector<std::pair<long long, std::vector<long long>>>& list) {
    std::vector<std::string> out;
    for (const auto& [r, w] : list)
        if (r > 1) out.push_back(CyclicQuotientType::make(r, w).normalize().str());
    std::sort(out.begin(), out.end());
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return "{" + s + "}";
}

}  // namespace

std::vector<CheckResult> reference_checks(unsigned workers) {
    std::vector<CheckResult> out;

    out.push_back(timed("gamma_tilde_sq for E6, E7, E8 is -13/6, -19/12, -31/30", [] {
        const Rational want[3] = {q(-13, 6), q(-19, 12), q(-31, 30)};
        std::ostringstream err;
        for (int e = 6; e <= 8; ++e) {
            Rational got = gamma_tilde_sq(ContractionType::e_type(e)).value;
            if (got != want[e - 6]) err << "E" << e << " gave " << got << "; ";
        }
        return err.str();
    }));

    out.push_back(timed("gamma_tilde_sq for special A3 is -5", [] {
        Rational got = gamma_tilde_sq(ContractionType::a_type(1, 1, 2, true)).value;
        return got == Rational(-5) ? std::string() : "got " + got.str();
    }));

    out.push_back(timed("A_n, D_2k+2, D_2k+1 closed forms (a2, a3 <= 20, d1 <= 10, k <= 20)", [] {
        std::ostringstream err;
        for (long long a2 = 1; a2 <= 20; ++a2)
            for (long long a3 = a2; a3 <= 20; ++a3) {
                if (std::gcd(a2, a3) != 1) continue;
                for (long long d1 = 1; d1 <= 10; ++d1) {
                    Rational want = -(q(1, d1) * q(a2 + a3, a2 * a3) + q((a2 + a3) * (a2 + a3), a2 * a3));
                    Rational got = gamma_tilde_sq_star(ContractionType::a_type(a2, a3, d1)).value;
                    if (got != want) err << "An:" << a2 << "," << a3 << "," << d1 << " gave " << got << "; ";
                }
            }
        for (long long k = 1; k <= 20; ++k) {
            Rational even = gamma_tilde_sq_star(ContractionType::d_type(2 * k + 2)).value;
            if (even != -(q(1, 2 * k) + q(2 * k + 1, k))) err << "D" << 2 * k + 2 << " gave " << even << "; ";
            if (k < 2) continue;
            Rational odd = gamma_tilde_sq_star(ContractionType::d_type(2 * k + 1)).value;
            if (odd != -(q(1, 2 * k - 1) + q(4 * k, 2 * k - 1))) err << "D" << 2 * k + 1 << " gave " << odd << "; ";
        }
        return err.str();
    }));

    out.push_back(timed("ODP closed form equals the star-fan computation (b2 <= 15)", [] {
        std::ostringstream err;
        for (long long b2 = 1; b2 <= 15; ++b2)
            for (long long b4 = 1; 2 * b4 <= b2 + 1; ++b4) {
                long long b3 = b2 + 1 - b4;
                Rational want = -Rational(b2 + 1) * (q(1, b3) + q(1, b4));
                Rational got = gamma_tilde_sq_star(ContractionType::odp_type(b2, b3, b4)).value;
                if (got != want) err << "odpA:" << b2 << "," << b3 << "," << b4 << " gave " << got << "; ";
            }
        return err.str();
    }));

    out.push_back(timed("terminal cyclic quotients of order r <= 60 are 1/r(1,-q,q)", [workers] {
        auto rep = verify_terminal_lemma(60, workers);
        if (rep.ok()) return std::string();
        std::ostringstream err;
        err << rep.counterexamples.size() << " counterexamples, first " << rep.counterexamples.front().str();
        return err.str();
    }));

    out.push_back(timed("singularities of Y~ outside Gamma~ match the diagrams", [] {
        std::ostringstream err;
        auto expect = [&](const ContractionType& t, const std::vector<std::pair<long long, std::vector<long long>>>& want) {
            auto got = listed(t);
            auto w = normalized(want);
            if (got != w) err << t.spelling() << ": " << join(got) << " vs " << join(w) << "; ";
        };
        expect(ContractionType::e_type(6), {{3, {1, 1, -1}}, {3, {1, 1, -1}}, {2, {1, 1, 1}}});
        expect(ContractionType::e_type(7), {{3, {1, 1, -1}}, {4, {3, 1, -1}}, {2, {1, 1, 1}}});
        expect(ContractionType::e_type(8), {{5, {1, 1, -1}}, {3, {1, 1, -1}}, {2, {1, 1, 1}}});
        const long long a_samples[5][3] = {{1, 2, 1}, {2, 3, 1}, {2, 5, 3}, {3, 4, 2}, {1, 7, 5}};
        for (const auto& s : a_samples) {
            long long a2 = s[0], a3 = s[1], d1 = s[2];
            expect(ContractionType::a_type(a2, a3, d1), {{a2 * d1, {1, a3 * d1 + 1, -1}}, {a3 * d1, {1, a2 * d1 + 1, -1}}});
        }
        const long long odp_samples[5][3] = {{2, 2, 1}, {4, 3, 2}, {6, 4, 3}, {9, 5, 5}, {11, 7, 5}};
        for (const auto& s : odp_samples) {
            long long b2 = s[0], b3 = s[1], b4 = s[2];
            expect(ContractionType::odp_type(b2, b3, b4), {{b3, {1, b2 + 1, -1}}, {b4, {1, b2 + 1, -1}}});
        }
        return err.str();
    }));

    out.push_back(timed("conditions A, B, C hold for every type with parameters <= 10, a(S) = 0", [] {
        std::ostringstream err;
        for (const auto& germ : {GermSpec::smooth(), GermSpec::odp()})
            for (const auto& t : enumerate_types(germ, 10)) {
                auto c = check_conditions(t);
                if (!c.all() || !c.c_value.is_zero())
                    err << t.spelling() << " A=" << c.A << " B=" << c.B << " C=" << c.c_value << "; ";
            }
        return err.str();
    }));

    out.push_back(timed("cyclic germs of order r <= 30 admit no type, with a(M) < 0", [] {
        std::ostringstream err;
        for (long long r = 2; r <= 30; ++r)
            for (long long qq = 1; qq < r; ++qq) {
                if (std::gcd(r, qq) != 1) continue;
                GermSpec g = GermSpec::cyclic(r, qq);
                if (!enumerate_types(g, 10).empty()) err << g.str() << " has types; ";
                auto o = cyclic_obstruction(g);
                if (o.discrepancy.sign() >= 0) err << g.str() << " discrepancy " << o.discrepancy << "; ";
            }
        return err.str();
    }));

    out.push_back(timed("5/6 (x^2+y^3) splits as 1/2, 1/3 with d_x = 2, d_y = 3", [] {
        MonomialDivisorSpec d{{{q(5, 6), MonomialBranch::parse("x^2+y^3", 2)}}};
        auto dec = lc_decompose_2d(d);
        std::ostringstream err;
        if (!dec.exists || dec.theta_prime != q(1, 2) || dec.theta_double_prime != q(1, 3)) err << "split mismatch; ";
        if (dec.d_x != std::vector<long long>{2} || dec.d_y != std::vector<long long>{3}) err << "degrees mismatch; ";
        if (dec.theta_prime * Rational(dec.d_x[0]) != Rational(1) || dec.theta_double_prime * Rational(dec.d_y[0]) != Rational(1))
            err << "equality fails; ";
        return err.str();
    }));

    out.push_back(timed("nonplt bound -(1-1/r)(1+1/q) <= -1 for 2 <= r <= 100", [] {
        std::ostringstream err;
        for (long long r = 2; r <= 100; ++r)
            for (long long qq = 1; qq < r; ++qq) {
                if (std::gcd(r, qq) != 1) continue;
                if (nonplt_bound(r, qq, Rational(0), Rational(0)).bound > Rational(-1)) err << r << "," << qq << "; ";
            }
        return err.str();
    }));

    return out;
}

}  // namespace toricdiv
