#include "toricdiv/surface.hpp"

#include <numeric>

namespace toricdiv {

namespace {

Rational ratio(const Integer& a, const Integer& b) { return Rational(a, b); }

Integer det2(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

WeightsDecomposition weights_decomposition(const std::array<long long, 3>& b) {
    for (long long x : b)
        if (x < 1) throw Error("weights must be positive");
    WeightsDecomposition w{};
    for (int i = 0; i < 3; ++i) w.d[i] = std::gcd(b[(i + 1) % 3], b[(i + 2) % 3]);
    for (int i = 0; i < 3; ++i) {
        long long den = w.d[(i + 1) % 3] * w.d[(i + 2) % 3];
        if (b[i] % den != 0) throw Error("weights not of toric blow-up form");
        w.a[i] = b[i] / den;
    }
    return w;
}

Rational wpp_intersection(const Rational& m, const Rational& m2, const std::array<long long, 3>& a) {
    return m * m2 / Rational(a[0] * a[1] * a[2]);
}

std::string SurfaceModel::kind_name() const {
    switch (kind) {
        case Kind::WPP:
            return "P(" + std::to_string(wpp_weights[0]) + "," + std::to_string(wpp_weights[1]) + "," +
                   std::to_string(wpp_weights[2]) + ")";
        case Kind::QuadricStar: return "QuadricStar";
        case Kind::GeneralStar: return "GeneralStar";
    }
    return "?";
}

SurfaceModel wpp_model(const std::array<long long, 3>& beta) {
    auto dec = weights_decomposition(beta);
    SurfaceModel s;
    s.kind = SurfaceModel::Kind::WPP;
    s.wpp_weights = dec.a;
    for (long long d : dec.d) s.diff_coeffs.push_back(Rational(d - 1) / Rational(d));
    return s;
}

SurfaceModel star_model(const GermSpec& germ, const LatticeVector& w) {
    Fan f = star_subdivide(germ_fan(germ), w);
    SurfaceModel s;
    s.kind = germ.kind == GermSpec::Kind::OrdinaryDoublePoint ? SurfaceModel::Kind::QuadricStar
                                                              : SurfaceModel::Kind::GeneralStar;
    s.star = star_surface(f, w);
    const auto& u = s.star.rays;
    const std::size_t n = u.size();
    for (const auto& m : s.star.diff_indices) s.diff_coeffs.push_back(ratio(m - 1, m));
    s.intersection.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        const auto& prev = u[(j + n - 1) % n];
        const auto& next = u[(j + 1) % n];
        s.intersection[j][j] = -Rational(det2(prev, next)) / Rational(det2(prev, u[j]) * det2(u[j], next));
        Rational adj = Rational(1) / Rational(det2(u[j], next));
        s.intersection[j][(j + 1) % n] = adj;
        s.intersection[(j + 1) % n][j] = adj;
    }
    return s;
}

Rational intersect(const SurfaceModel& s, const DivisorClass& x, const DivisorClass& y) {
    if (s.kind == SurfaceModel::Kind::WPP) return wpp_intersection(x.degree, y.degree, s.wpp_weights);
    const std::size_t n = s.boundary_count();
    if (x.coeffs.size() != n || y.coeffs.size() != n) throw Error("class does not match the boundary curves");
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) total += x.coeffs[i] * y.coeffs[j] * s.intersection[i][j];
    return total;
}

DivisorClass adjunction_class(const SurfaceModel& s) {
    DivisorClass c;
    if (s.kind == SurfaceModel::Kind::WPP) {
        c.degree = adjunction_degree(s);
        return c;
    }
    // K_S = -sum C_j; Diff = sum (1 - 1/m_j) C_j
    for (const auto& m : s.star.diff_indices) c.coeffs.push_back(-ratio(1, m));
    return c;
}

Rational adjunction_degree(const SurfaceModel& s) {
    if (s.kind != SurfaceModel::Kind::WPP) throw Error("adjunction degree is defined on WPP models; use adjunction_class");
    Rational deg = 0;
    for (int i = 0; i < 3; ++i) deg += (s.diff_coeffs[i] - Rational(1)) * Rational(s.wpp_weights[i]);
    return deg;
}

NefResult nef_test(const SurfaceModel& s, const DivisorClass& c) {
    NefResult r;
    if (s.kind == SurfaceModel::Kind::WPP) {
        r.nef = c.degree.sign() >= 0;
        r.ample = c.degree.sign() > 0;
        if (!r.nef) r.witness = 0;
        return r;
    }
    r.nef = true;
    r.ample = true;
    for (std::size_t j = 0; j < s.boundary_count(); ++j) {
        DivisorClass curve;
        curve.coeffs.assign(s.boundary_count(), Rational(0));
        curve.coeffs[j] = 1;
        Rational d = intersect(s, c, curve);
        if (d.sign() < 0 && r.nef) {
            r.nef = false;
            r.witness = j;
        }
        if (d.sign() <= 0) r.ample = false;
    }
    return r;
}

Rational point_case_inequality(long long a2, long long a3, long long d3) {
    if (d3 < 1) throw Error("d3 must be positive");
    return Rational(a2 + a3 - a2 * a3) - Rational(Integer(d3 - 1), Integer(d3)) * Rational(a3);
}

DivisorClass star_gamma_class(const GermSpec& germ, const LatticeVector& w, const SurfaceModel& s,
                              const MonomialBranch& phi) {
    ToricGerm g = toric_germ(germ);
    const auto weights = coordinate_weights(g, w);
    // a monomial of the initial form of phi
    const std::vector<long long>* lead = nullptr;
    Rational best;
    for (const auto& l : phi.exponents) {
        Rational v = 0;
        for (std::size_t i = 0; i < l.size(); ++i) v += Rational(l[i]) * weights[i];
        if (!lead || v < best) {
            lead = &l;
            best = v;
        }
    }
    if (!lead) throw Error("phi has no monomials");
    RationalVector form(g.rank, Rational(0));
    for (std::size_t i = 0; i < lead->size(); ++i)
        for (std::size_t k = 0; k < g.rank; ++k) form[k] += Rational((*lead)[i]) * g.coordinate_forms[i][k];
    DivisorClass c;
    for (std::size_t j = 0; j < s.star.lifts.size(); ++j)
        c.coeffs.push_back(dot(form, s.star.lifts[j]) / Rational(s.star.diff_indices[j]));
    return c;
}

DivisorClass star_self_restriction(const GermSpec& germ, const LatticeVector& w, const SurfaceModel& s) {
    ToricGerm g = toric_germ(germ);
    Rational kw = dot(g.canonical_form, w);
    DivisorClass c;
    for (std::size_t j = 0; j < s.star.lifts.size(); ++j)
        c.coeffs.push_back(-dot(g.canonical_form, s.star.lifts[j]) / (Rational(s.star.diff_indices[j]) * kw));
    return c;
}

namespace {

Rational a_plus_one(const ContractionType& t) {
    return toric_discrepancy(toric_germ(t.germ()), t.ray(), MonomialDivisorSpec{}).value + Rational(1);
}

}  // namespace

GammaTilde gamma_tilde_sq_star(const ContractionType& t) {
    const GermSpec germ = t.germ();
    const LatticeVector w = t.ray();
    SurfaceModel s = star_model(germ, w);
    DivisorClass gamma = star_gamma_class(germ, w, s, t.phi());
    GammaTilde r;
    r.a_plus_one = a_plus_one(t);
    r.adjunction_dot = intersect(s, adjunction_class(s), gamma);
    r.gamma_sq = intersect(s, gamma, gamma);
    r.value = r.adjunction_dot / r.a_plus_one - r.gamma_sq;
    return r;
}

GammaTilde gamma_tilde_sq(const ContractionType& t) {
    if (t.family == ContractionType::Family::OdpA) return gamma_tilde_sq_star(t);
    auto beta = t.weights();
    std::array<long long, 3> b{beta[0], beta[1], beta[2]};
    SurfaceModel s = wpp_model(b);
    auto dec = weights_decomposition(b);
    MonomialDivisorSpec phi{{{Rational(1), t.phi()}}};
    Rational phi_degree = weight_multiplicity(phi, RationalVector{beta[0], beta[1], beta[2]});
    GammaTilde r;
    r.gamma_degree = phi_degree / Rational(dec.d[0] * dec.d[1] * dec.d[2]);
    r.a_plus_one = a_plus_one(t);
    r.adjunction_dot = wpp_intersection(adjunction_degree(s), *r.gamma_degree, s.wpp_weights);
    r.gamma_sq = wpp_intersection(*r.gamma_degree, *r.gamma_degree, s.wpp_weights);
    r.value = r.adjunction_dot / r.a_plus_one - r.gamma_sq;
    return r;
}

}  // namespace toricdiv
