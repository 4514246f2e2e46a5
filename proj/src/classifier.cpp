#include "toricdiv/classifier.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace toricdiv {

namespace {

using Exps = std::vector<std::vector<long long>>;

const LatticeVector E1{1, 0, 0}, E2{0, 1, 0}, E3{0, 0, 1};

const LatticeVector& basis(int i) { return i == 1 ? E1 : (i == 2 ? E2 : E3); }

std::set<std::vector<long long>> as_set(const Exps& e) { return {e.begin(), e.end()}; }

// exponent patterns up to permutation of the three variables
bool matches(const Exps& got, const Exps& pattern) {
    if (got.size() != pattern.size()) return false;
    for (const auto& l : got)
        if (l.size() != 3) return false;
    auto target = as_set(got);
    std::array<int, 3> p{0, 1, 2};
    do {
        std::set<std::vector<long long>> permuted;
        for (const auto& l : pattern) permuted.insert({l[p[0]], l[p[1]], l[p[2]]});
        if (permuted == target) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

ChartSite fixed_site(std::string tag, const LatticeVector& rho, const LatticeVector& g, const LatticeVector& h) {
    return {std::move(tag), rho, g, h, rho + g, false};
}

ChartSite curve_site(std::string tag, const LatticeVector& rho, int i) {
    LatticeVector t = complement_vector(IntegerMatrix::from_rows({rho, basis(i)}));
    return {std::move(tag), rho, t, basis(i), rho + t, true};
}

void add_curve_sites(std::vector<ChartSite>& out, const LatticeVector& rho, int i, int count) {
    for (int c = 1; c <= count; ++c) {
        std::string tag = "C" + std::to_string(i);
        if (count > 1) tag += "#" + std::to_string(c);
        out.push_back(curve_site(tag, rho, i));
    }
}

std::string point_label(const CyclicQuotientType& t) {
    if (t.order == 1) return "smooth";
    if (t.weights.size() == 2 && t.weights[0] == 1 && t.weights[1] == 1) return "curve -" + std::to_string(t.order);
    return t.str();
}

std::string odp_curve_name(const LatticeVector& g) {
    if (g == LatticeVector{0, 0, 1}) return "x2=x3=0";
    if (g == LatticeVector{1, 0, 1}) return "x2=x4=0";
    if (g == LatticeVector{1, 1, 1}) return "x1=x4=0";
    if (g == LatticeVector{0, 1, 1}) return "x1=x3=0";
    return g.str();
}

const char* kFixtureText = "A1 x 1/2(1,1) non-normal fiber";

}  // namespace

std::vector<ContractionType> enumerate_types(const GermSpec& germ, long long bound) {
    if (bound < 1) throw Error("bound must be at least 1");
    std::vector<ContractionType> out;
    switch (germ.kind) {
        case GermSpec::Kind::Cyclic: return out;
        case GermSpec::Kind::OrdinaryDoublePoint:
            for (long long b2 = 1; b2 <= bound; ++b2)
                for (long long b4 = 1; 2 * b4 <= b2 + 1; ++b4)
                    out.push_back(ContractionType::odp_type(b2, b2 + 1 - b4, b4));
            return out;
        case GermSpec::Kind::SmoothPoint:
            if (germ.dim != 3) return out;
            for (long long a2 = 1; a2 <= bound; ++a2)
                for (long long a3 = a2; a3 <= bound; ++a3) {
                    if (std::gcd(a2, a3) != 1) continue;
                    for (long long d1 = 1; d1 <= bound; ++d1) out.push_back(ContractionType::a_type(a2, a3, d1));
                }
            if (bound >= 2) out.push_back(ContractionType::a_type(1, 1, 2, true));
            for (long long k = 1; k <= bound; ++k)
                for (bool special : {false, true}) out.push_back(ContractionType::d_type(2 * k + 2, special));
            for (long long k = 2; k <= bound; ++k)
                for (bool special : {false, true}) out.push_back(ContractionType::d_type(2 * k + 1, special));
            for (int e : {6, 7, 8}) out.push_back(ContractionType::e_type(e));
            return out;
    }
    return out;
}

std::string DuValClass::str() const {
    switch (kind) {
        case Kind::A: return "A" + std::to_string(n);
        case Kind::D: return "D" + std::to_string(n);
        case Kind::E6: return "E6";
        case Kind::E7: return "E7";
        case Kind::E8: return "E8";
        case Kind::SpecialX1X2sqX3sq: return "x1*x2^2+x3^2";
        case Kind::NotDuVal: return "not Du Val";
    }
    return "?";
}

DuValClass du_val_recognize(const std::vector<long long>& weights, const MonomialBranch& phi) {
    if (phi.exponents.empty()) throw Error("empty polynomial");
    std::set<long long> degrees;
    for (const auto& l : phi.exponents) {
        if (l.size() != weights.size()) throw Error("monomial and weights have different lengths");
        long long d = 0;
        for (std::size_t i = 0; i < l.size(); ++i) d += l[i] * weights[i];
        degrees.insert(d);
    }
    if (degrees.size() != 1) throw Error("condition B fails: polynomial is not quasihomogeneous for these weights");

    const Exps& ex = phi.exponents;
    DuValClass r;
    if (weights.size() != 3) return r;
    // A: xy + z^(n+1) or x^2 + y^2 + z^(n+1)
    if (ex.size() == 2) {
        for (const auto& l : ex) {
            long long m = *std::max_element(l.begin(), l.end());
            if (m >= 2 && matches(ex, {{1, 1, 0}, {0, 0, m}})) return {DuValClass::Kind::A, m - 1};
        }
        if (matches(ex, {{2, 0, 0}, {0, 2, 1}})) return {DuValClass::Kind::SpecialX1X2sqX3sq, 0};
    }
    if (ex.size() == 3) {
        for (const auto& l : ex) {
            long long m = *std::max_element(l.begin(), l.end());
            if (m >= 2 && matches(ex, {{2, 0, 0}, {0, 2, 0}, {0, 0, m}})) return {DuValClass::Kind::A, m - 1};
            if (m >= 3 && matches(ex, {{2, 0, 0}, {0, 2, 1}, {0, 0, m}})) return {DuValClass::Kind::D, m + 1};
        }
        if (matches(ex, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})) return {DuValClass::Kind::E6, 6};
        if (matches(ex, {{2, 0, 0}, {0, 3, 0}, {0, 1, 3}})) return {DuValClass::Kind::E7, 7};
        if (matches(ex, {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) return {DuValClass::Kind::E8, 8};
    }
    return r;
}

MonomialBranch with_generic_term(const MonomialBranch& phi, const std::vector<long long>& weights) {
    MonomialBranch b = phi;
    long long n = std::accumulate(weights.begin(), weights.end(), 0LL);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        std::vector<long long> l(weights.size(), 0);
        l[i] = n;
        b.exponents.push_back(l);
    }
    b.label = phi.label + " + psi";
    return b;
}

ConditionReport check_conditions(const GermSpec& germ, const std::vector<long long>& weights, const MonomialBranch& phi) {
    ConditionReport r;
    std::set<Rational> degrees;
    for (const auto& l : phi.exponents) {
        Rational d = 0;
        for (std::size_t i = 0; i < l.size(); ++i) d += Rational(l[i] * weights[i]);
        r.degrees.push_back(d);
        degrees.insert(d);
    }
    r.B = degrees.size() == 1;

    MonomialDivisorSpec bare{{{Rational(1), phi}}};
    r.c_value = toric_discrepancy(germ, weights, bare).value;
    r.C = r.c_value.is_zero();

    auto only = is_canonical_pair_toric(germ, bare);
    r.A_without_generic_term = only.canonical;
    r.a_witness_without_generic_term = only.witness;
    // generic extra monomials only lower toric multiplicities
    if (only.canonical) {
        r.A = true;
        return r;
    }
    auto full = is_canonical_pair_toric(germ, MonomialDivisorSpec{{{Rational(1), with_generic_term(phi, weights)}}});
    r.A = full.canonical;
    r.a_witness = full.witness;
    return r;
}

ConditionReport check_conditions(const ContractionType& t) { return check_conditions(t.germ(), t.weights(), t.phi()); }

std::vector<ChartSite> chart_sites(const ContractionType& t) {
    const LatticeVector rho = t.ray();
    std::vector<ChartSite> out;
    using F = ContractionType::Family;
    switch (t.family) {
        case F::A:
            if (t.special) return out;  // tangency chart is not toric
            out.push_back(fixed_site("P1", rho, E2, E1));
            out.push_back(fixed_site("P2", rho, E3, E1));
            break;
        case F::D:
            out.push_back(fixed_site("P1", rho, E1, E3));
            if (!t.special) add_curve_sites(out, rho, t.params[0] % 2 == 0 ? 3 : 2, 2);
            break;
        case F::E6:
            add_curve_sites(out, rho, 1, 1);
            add_curve_sites(out, rho, 2, 2);
            break;
        case F::E7:
            add_curve_sites(out, rho, 1, 1);
            add_curve_sites(out, rho, 3, 1);
            out.push_back(fixed_site("P1", rho, E2, E3));
            break;
        case F::E8:
            add_curve_sites(out, rho, 1, 1);
            add_curve_sites(out, rho, 2, 1);
            add_curve_sites(out, rho, 3, 1);
            break;
        case F::OdpA: {
            const LatticeVector g1{0, 0, 1}, g2{1, 0, 1}, g3{1, 1, 1}, g4{0, 1, 1};
            out.push_back(fixed_site("P3", rho, g2, g3));
            out.push_back(fixed_site("P4", rho, g1, g4));
            break;
        }
    }
    return out;
}

CyclicQuotientType surface_label(const LatticeVector& e4, const LatticeVector& h, const LatticeVector& x) {
    LatticeVector a = primitive(quotient_image(e4, h)), b = primitive(quotient_image(e4, x));
    CyclicQuotientType t = cone_to_quotient(Cone{{a, b}});
    const long long r = t.order;
    if (r == 1) return CyclicQuotientType{1, {0, 0}, false};
    for (long long u = 1; u < r; ++u)
        if ((u * t.weights[0]) % r == 1) return CyclicQuotientType{r, {1, (u * t.weights[1]) % r}, false};
    throw Error("internal: surface quotient weights are not units");
}

ContractionReport build_report(const ContractionType& t) {
    ContractionReport rep;
    rep.type = t;
    rep.weights = t.weights();
    const GermSpec germ = t.germ();
    const LatticeVector rho = t.ray();
    using F = ContractionType::Family;

    if (t.family == F::OdpA) {
        rep.surface = star_model(germ, rho);
        for (std::size_t j = 0; j < rep.surface.boundary_count(); ++j)
            if (!rep.surface.diff_coeffs[j].is_zero())
                rep.diff.emplace_back(odp_curve_name(rep.surface.star.lifts[j]), rep.surface.diff_coeffs[j]);
        const auto& b = t.params;
        rep.gamma_class = "O_P(1," + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) +
                          ")(" + std::to_string(b[0]) + ")|_S";
    } else {
        rep.surface = wpp_model({rep.weights[0], rep.weights[1], rep.weights[2]});
        for (int i = 0; i < 3; ++i)
            if (!rep.surface.diff_coeffs[i].is_zero())
                rep.diff.emplace_back("x" + std::to_string(i + 1) + "=0", rep.surface.diff_coeffs[i]);
    }
    GammaTilde gt = gamma_tilde_sq(t);
    rep.gamma_tilde_sq = gt.value;
    if (gt.gamma_degree) rep.gamma_class = "O_" + rep.surface.kind_name() + "(" + gt.gamma_degree->str() + ")";

    rep.log_surface_toric = (t.family == F::A && !t.special) || t.family == F::OdpA;
    rep.plt_blowup = !t.special;
    rep.non_normal_E = t.special;

    rep.nodes.push_back({"gamma", "gamma", "Γ̃"});
    rep.charts = chart_sites(t);
    for (const auto& site : rep.charts) {
        CyclicQuotientType outside = cone_to_quotient(Cone{{site.e4, site.g, site.h}});
        if (outside.order > 1) {
            SingularityEntry e;
            e.location = site.tag;
            e.type = outside.normalize();
            e.description = outside.str();
            e.cls = reid_tai_classify(outside);
            rep.singularities.push_back(std::move(e));
        }
        if (cone_to_quotient(Cone{{site.rho, site.g, site.h}}).order == 1) continue;
        CyclicQuotientType near = surface_label(site.e4, site.h, site.rho);
        CyclicQuotientType far = surface_label(site.e4, site.h, site.g);
        std::string id = site.tag;
        rep.nodes.push_back({id + ".near", near.weights == std::vector<long long>{1, 1} ? "curve" : "point", point_label(near)});
        rep.nodes.push_back({id + ".fiber", "fiber", "fiber"});
        rep.nodes.push_back({id + ".far", far.weights == std::vector<long long>{1, 1} ? "curve" : "point", point_label(far)});
        rep.edges.emplace_back("gamma", id + ".near");
        rep.edges.emplace_back(id + ".near", id + ".fiber");
        rep.edges.emplace_back(id + ".fiber", id + ".far");
    }
    if (t.special) {
        const std::string tag = t.family == F::A ? "f" : "f1";
        SingularityEntry e;
        e.location = tag;
        e.description = kFixtureText;
        e.cls = SingularityClass::CanonicalNotTerminal;
        e.fixture = true;
        rep.singularities.push_back(e);
        rep.nodes.push_back({tag, "fiber", "fiber (E~ non-normal, Y~ = " + std::string("A1 x 1/2(1,1) off Γ̃)")});
        rep.edges.emplace_back("gamma", tag);
        rep.fixtures.push_back(tag + ": " + kFixtureText + "; K+E~ log canonical, not plt");
    }

    rep.notes.push_back("phi = " + t.phi().label + "; psi taken general of degree " +
                        std::to_string(std::accumulate(rep.weights.begin(), rep.weights.end(), 0LL)));
    if (t.family == F::D && !t.special) {
        long long n = t.params[0];
        rep.notes.push_back(std::string("singular points of Y~ on the P1 fibers: ") +
                            ((n - 2) % 3 == 0 ? "possible (3 | n-2)" : "none (3 does not divide n-2)"));
    }
    if (rep.log_surface_toric) rep.notes.push_back("(E, Diff_E(0)) is toric");
    return rep;
}

nlohmann::ordered_json report_to_json(const ContractionReport& r, bool dump_fan) {
    using J = nlohmann::ordered_json;
    J j;
    j["family"] = r.type.name();
    J params;
    params["type"] = r.type.spelling();
    switch (r.type.family) {
        case ContractionType::Family::A:
            params["a2"] = r.type.params[0];
            params["a3"] = r.type.params[1];
            params["d1"] = r.type.params[2];
            break;
        case ContractionType::Family::D: params["n"] = r.type.params[0]; break;
        case ContractionType::Family::OdpA:
            params["b2"] = r.type.params[0];
            params["b3"] = r.type.params[1];
            params["b4"] = r.type.params[2];
            break;
        default: break;
    }
    params["special"] = r.type.special;
    j["params"] = params;
    j["weights"] = r.weights;
    J diff = J::array();
    for (const auto& [curve, c] : r.diff) diff.push_back(J{{"curve", curve}, {"coeff", c.str()}});
    j["surface"] = J{{"kind", r.surface.kind == SurfaceModel::Kind::WPP ? r.surface.kind_name() : std::string("QuadricStar")},
                     {"diff", diff}};
    j["gamma_class"] = r.gamma_class;
    j["gamma_tilde_sq"] = r.gamma_tilde_sq.str();
    J sing = J::array();
    for (const auto& s : r.singularities) {
        J e;
        e["location"] = s.location;
        e["type"] = s.type ? J(s.type->str()) : J(nullptr);
        e["computed"] = s.description;
        e["class"] = to_string(s.cls);
        e["fixture"] = s.fixture;
        sing.push_back(e);
    }
    j["singularities"] = sing;
    J nodes = J::array(), edges = J::array();
    for (const auto& n : r.nodes) nodes.push_back(J{{"id", n.id}, {"kind", n.kind}, {"label", n.label}});
    for (const auto& [a, b] : r.edges) edges.push_back(J::array({a, b}));
    j["diagram"] = J{{"nodes", nodes}, {"edges", edges}};
    j["flags"] = J{{"log_surface_toric", r.log_surface_toric}, {"plt_blowup", r.plt_blowup}, {"non_normal_E", r.non_normal_E}};
    J fixtures = J::array();
    for (const auto& f : r.fixtures) fixtures.push_back(J{{"text", f}, {"source", "fixture"}});
    j["fixtures"] = fixtures;
    J charts = J::array();
    auto vec = [](const LatticeVector& v) {
        J a = J::array();
        for (const auto& x : v.coords()) a.push_back(integer_to_json(x));
        return a;
    };
    for (const auto& c : r.charts) {
        J e;
        e["site"] = c.tag;
        e["on_curve"] = c.on_curve;
        e["rho"] = vec(c.rho);
        e["g"] = vec(c.g);
        e["h"] = vec(c.h);
        e["e4"] = vec(c.e4);
        CyclicQuotientType off = cone_to_quotient(Cone{{c.e4, c.g, c.h}});
        CyclicQuotientType on = cone_to_quotient(Cone{{c.e4, c.rho, c.h}});
        e["off_gamma"] = off.str();
        e["on_gamma"] = on.str();
        e["on_gamma_class"] = to_string(reid_tai_classify(on));
        charts.push_back(e);
    }
    j["charts"] = charts;
    j["notes"] = r.notes;
    if (dump_fan) j["fan"] = fan_to_json(star_subdivide(germ_fan(r.type.germ()), r.type.ray()));
    return j;
}

std::string report_to_text(const ContractionReport& r) {
    std::ostringstream os;
    os << "type " << r.type.name() << " (" << r.type.spelling() << ")\n";
    os << "weights (";
    for (std::size_t i = 0; i < r.weights.size(); ++i) os << (i ? "," : "") << r.weights[i];
    os << ")\n";
    os << "surface " << (r.surface.kind == SurfaceModel::Kind::WPP ? r.surface.kind_name() : "QuadricStar");
    for (const auto& [curve, c] : r.diff) os << "  " << c << "{" << curve << "}";
    os << "\n";
    os << "gamma_class " << r.gamma_class << "\n";
    os << "gamma_tilde_sq " << r.gamma_tilde_sq << "  (~" << r.gamma_tilde_sq.to_double() << ")\n";
    os << "singularities\n";
    for (const auto& s : r.singularities) {
        os << "  " << s.location << "  ";
        if (s.type) os << s.type->str() << "  [" << s.description << ", " << to_string(s.cls) << "]";
        else os << s.description << "  [fixture]";
        os << "\n";
    }
    os << "diagram\n";
    for (const auto& [a, b] : r.edges) {
        auto label = [&](const std::string& id) {
            for (const auto& n : r.nodes)
                if (n.id == id) return n.label;
            return id;
        };
        os << "  " << a << " [" << label(a) << "] -- " << b << " [" << label(b) << "]\n";
    }
    os << "flags log_surface_toric=" << r.log_surface_toric << " plt_blowup=" << r.plt_blowup
       << " non_normal_E=" << r.non_normal_E << "\n";
    for (const auto& f : r.fixtures) os << "fixture " << f << "\n";
    for (const auto& n : r.notes) os << "note " << n << "\n";
    return os.str();
}

CyclicObstruction cyclic_obstruction(const GermSpec& germ) {
    if (germ.kind != GermSpec::Kind::Cyclic) throw Error("obstruction witness is defined for cyclic germs");
    CyclicObstruction o;
    o.germ = germ;
    const long long r = germ.r, q = germ.q;
    o.weights = {Rational(Integer(1), Integer(r)), Rational(Integer(r - q), Integer(r)), Rational(Integer(q), Integer(r))};
    o.valuation = blowup_ray(germ, o.weights);
    o.boundary.branches.push_back(
        {Rational(1), MonomialBranch::parse("x1^2+x2^2+x3^2+x1*x2+x1*x3+x2*x3", 3)});
    o.discrepancy = toric_discrepancy(germ, o.weights, o.boundary).value;
    return o;
}

}  // namespace toricdiv
