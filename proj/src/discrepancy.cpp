#include "toricdiv/discrepancy.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace toricdiv {

namespace {

using Vec = std::vector<long long>;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long parse_count(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw Error("expected a number in '" + s + "'");
    if (pos - start > 9) throw Error("exponent too large in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
}

Vec parse_monomial(const std::string& term, std::size_t variables) {
    Vec e(variables, 0);
    std::size_t pos = 0;
    bool any = false;
    while (pos < term.size()) {
        char c = term[pos];
        if (c == '*' || c == ' ') {
            ++pos;
            continue;
        }
        std::size_t var = 0;
        if (c == 'x' && pos + 1 < term.size() && std::isdigit(static_cast<unsigned char>(term[pos + 1]))) {
            ++pos;
            var = static_cast<std::size_t>(parse_count(term, pos));
        } else if (c == 'x' || c == 'y' || c == 'z') {
            var = static_cast<std::size_t>(c - 'x') + 1;
            ++pos;
        } else {
            throw Error("unexpected '" + std::string(1, c) + "' in monomial '" + term + "'");
        }
        if (var < 1 || var > variables)
            throw Error("variable index out of range in '" + term + "' (germ has " + std::to_string(variables) +
                        " coordinates)");
        long long power = 1;
        if (pos < term.size() && term[pos] == '^') {
            ++pos;
            power = parse_count(term, pos);
        }
        e[var - 1] += power;
        any = true;
    }
    if (!any) throw Error("empty monomial");
    return e;
}

RationalVector monomial_form(const ToricGerm& g, const Vec& l) {
    RationalVector f(g.rank, Rational(0));
    for (std::size_t j = 0; j < l.size(); ++j)
        for (std::size_t k = 0; k < g.rank; ++k) f[k] += Rational(l[j]) * g.coordinate_forms[j][k];
    return f;
}

Rational branch_min(const MonomialBranch& b, const RationalVector& weights) {
    Rational best;
    bool first = true;
    for (const auto& l : b.exponents) {
        Rational v = 0;
        for (std::size_t i = 0; i < l.size(); ++i) v += Rational(l[i]) * weights[i];
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

// ---- small exact integer geometry for the normal fan ----

long long dotv(const Vec& a, const Vec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec prim(Vec v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

Vec sign_normal(Vec v) {
    for (long long x : v) {
        if (x > 0) return v;
        if (x < 0) {
            for (auto& y : v) y = -y;
            return v;
        }
    }
    return v;
}

long long det3(const Vec& a, const Vec& b, const Vec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::size_t rank_of(const std::vector<Vec>& vs, std::size_t n) {
    if (vs.empty()) return 0;
    IntegerMatrix m(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
    auto s = smith_normal_form_general(m);
    return static_cast<std::size_t>(std::count_if(s.diagonal.begin(), s.diagonal.end(), [](const Integer& d) { return d != 0; }));
}

// Visits every lattice point sum (k_i / D) g_i, 0 <= k_i < D, of the half-open parallelepiped
// of the rows g_i, where D = |det g|; f receives the numerators k.
template <class F>
void walk_parallelepiped(const IntegerMatrix& g, F&& f) {
    const std::size_t n = g.rows();
    Integer det = determinant(g);
    if (det == 0) throw Error("degenerate cone");
    if (det < 0) det = -det;
    if (det > 50'000'000) throw Error("cone index too large for the canonicity test");
    const long long D = static_cast<long long>(det);
    SmithForm snf = smith_normal_form(g);
    IntegerMatrix rinv = unimodular_inverse(snf.right);
    std::vector<Vec> step(n, Vec(n));
    std::vector<long long> order(n);
    for (std::size_t k = 0; k < n; ++k) {
        order[k] = static_cast<long long>(snf.diagonal[k]);
        RationalVector c = solve_row_combination(g, rinv.row(k));
        for (std::size_t i = 0; i < n; ++i) {
            Rational scaled = c[i] * Rational(det);
            Integer m = scaled.num() % det;
            if (m < 0) m += det;
            step[k][i] = static_cast<long long>(m);
        }
    }
    Vec y(n, 0), acc(n, 0);
    for (;;) {
        f(static_cast<const Vec&>(acc));
        std::size_t k = 0;
        for (; k < n; ++k) {
            ++y[k];
            for (std::size_t i = 0; i < n; ++i) acc[i] = (acc[i] + step[k][i]) % D;
            if (y[k] < order[k]) break;
            y[k] = 0;
            // step[k] has order dividing order[k], so acc is back where it started
        }
        if (k == n) break;
    }
}

LatticeVector to_lattice(const Vec& v) {
    std::vector<Integer> c(v.begin(), v.end());
    return LatticeVector(std::move(c));
}

struct NormalFan {
    std::vector<std::vector<Vec>> cones;  ///< simplicial, generators primitive
};

// Simplicial refinement of the normal fan of conv(points) + cone(recession).
NormalFan normal_fan(const std::vector<Vec>& points, const std::vector<Vec>& recession, std::size_t n) {
    std::set<Vec> dirs;
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            Vec d = sub(points[a], points[b]);
            if (!is_zero(d)) dirs.insert(sign_normal(prim(d)));
        }
    for (const auto& r : recession) dirs.insert(sign_normal(prim(r)));
    std::vector<Vec> dv(dirs.begin(), dirs.end());

    std::set<Vec> candidates;
    if (n == 2) {
        for (const auto& d : dv) candidates.insert(prim(Vec{-d[1], d[0]}));
    } else {
        for (std::size_t a = 0; a < dv.size(); ++a)
            for (std::size_t b = a + 1; b < dv.size(); ++b) {
                Vec c = cross3(dv[a], dv[b]);
                if (!is_zero(c)) candidates.insert(sign_normal(prim(c)));
            }
    }

    std::vector<Vec> normals;
    for (const auto& c0 : candidates) {
        for (int s : {1, -1}) {
            Vec c = c0;
            if (s < 0)
                for (auto& x : c) x = -x;
            bool inside = std::all_of(recession.begin(), recession.end(), [&](const Vec& r) { return dotv(r, c) >= 0; });
            if (!inside) continue;
            long long mu = dotv(points[0], c);
            for (const auto& p : points) mu = std::min(mu, dotv(p, c));
            std::vector<Vec> span;
            const Vec* base = nullptr;
            for (const auto& p : points) {
                if (dotv(p, c) != mu) continue;
                if (!base) base = &p;
                else span.push_back(sub(p, *base));
            }
            for (const auto& r : recession)
                if (dotv(r, c) == 0) span.push_back(r);
            if (rank_of(span, n) == n - 1) normals.push_back(c);
        }
    }

    NormalFan fan;
    std::set<std::vector<Vec>> seen;
    for (const auto& p : points) {
        std::vector<Vec> rays;
        for (const auto& c : normals) {
            long long mu = dotv(p, c);
            bool tight = std::all_of(points.begin(), points.end(), [&](const Vec& q) { return dotv(q, c) >= mu; });
            if (tight) rays.push_back(c);
        }
        if (rank_of(rays, n) != n) continue;
        std::sort(rays.begin(), rays.end());
        if (!seen.insert(rays).second) continue;
        if (rays.size() == n) {
            fan.cones.push_back(rays);
            continue;
        }
        if (n == 2) throw Error("internal: two-dimensional normal cone with extra rays");
        Vec axis(3, 0);
        for (const auto& r : rays)
            for (int k = 0; k < 3; ++k) axis[k] += r[k];
        const Vec ref = rays[0];
        auto half = [&](const Vec& a) {
            if (a == ref) return 0;
            return det3(axis, ref, a) > 0 ? 0 : 1;
        };
        std::sort(rays.begin(), rays.end(), [&](const Vec& a, const Vec& b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb;
            if (a == ref) return b != ref;
            if (b == ref) return false;
            return det3(axis, a, b) > 0;
        });
        for (std::size_t i = 1; i + 1 < rays.size(); ++i) fan.cones.push_back({rays[0], rays[i], rays[i + 1]});
    }
    return fan;
}

}  // namespace

MonomialBranch MonomialBranch::parse(const std::string& text, std::size_t variables) {
    MonomialBranch b;
    b.label = trim(text);
    std::stringstream ss(b.label);
    std::string term;
    while (std::getline(ss, term, '+')) {
        term = trim(term);
        if (term.empty()) throw Error("empty term in '" + text + "'");
        b.exponents.push_back(parse_monomial(term, variables));
    }
    if (b.exponents.empty()) throw Error("branch '" + text + "' has no monomials");
    return b;
}

MonomialDivisorSpec MonomialDivisorSpec::parse(const std::string& text, std::size_t variables) {
    MonomialDivisorSpec spec;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto semi = line.find(';');
        if (semi == std::string::npos)
            throw Error("line " + std::to_string(lineno) + ": expected 'coeff; monomial+monomial'");
        Rational theta = Rational::parse(trim(line.substr(0, semi)));
        if (theta.sign() <= 0) throw Error("line " + std::to_string(lineno) + ": coefficient must be positive");
        spec.branches.push_back({theta, MonomialBranch::parse(line.substr(semi + 1), variables)});
    }
    return spec;
}

Rational weight_multiplicity(const MonomialDivisorSpec& spec, const RationalVector& weights) {
    Rational total = 0;
    for (const auto& t : spec.branches) {
        for (const auto& l : t.branch.exponents)
            if (l.size() != weights.size()) throw Error("monomial and weight vector have different lengths");
        total += t.coefficient * branch_min(t.branch, weights);
    }
    return total;
}

DiscrepancyResult toric_discrepancy(const ToricGerm& germ, const LatticeVector& w, const MonomialDivisorSpec& spec) {
    DiscrepancyResult r;
    r.valuation = w;
    r.canonical_part = dot(germ.canonical_form, w) - Rational(1);
    r.multiplicity = weight_multiplicity(spec, coordinate_weights(germ, w));
    r.value = r.canonical_part - r.multiplicity;
    return r;
}

DiscrepancyResult toric_discrepancy(const GermSpec& germ, const RationalVector& weights,
                                    const MonomialDivisorSpec& spec) {
    return toric_discrepancy(toric_germ(germ), blowup_ray(germ, weights), spec);
}

DiscrepancyResult toric_discrepancy(const GermSpec& germ, const std::vector<long long>& weights,
                                    const MonomialDivisorSpec& spec) {
    RationalVector w;
    for (long long x : weights) w.emplace_back(x);
    return toric_discrepancy(germ, w, spec);
}

CanonicityResult is_canonical_pair_toric(const GermSpec& spec_germ, const MonomialDivisorSpec& spec) {
    const ToricGerm germ = toric_germ(spec_germ);
    const std::size_t n = germ.rank;

    // integral models of the exponent forms; a common positive scale leaves the normal fan unchanged
    Integer scale = 1;
    for (const auto& f : germ.coordinate_forms)
        for (const auto& x : f) scale = lcm(scale, x.den());
    auto integral = [&](const RationalVector& f) {
        Vec v;
        for (const auto& x : f) {
            Rational s = x * Rational(scale);
            if (s.num() > 1'000'000 || s.num() < -1'000'000) throw Error("exponents too large for the canonicity test");
            v.push_back(static_cast<long long>(s.num()));
        }
        return v;
    };

    std::vector<Vec> points{Vec(n, 0)};
    for (const auto& t : spec.branches) {
        std::set<Vec> summand;
        for (const auto& l : t.branch.exponents) {
            if (l.size() != germ.coordinate_forms.size()) throw Error("monomial has the wrong number of variables");
            summand.insert(integral(monomial_form(germ, l)));
        }
        std::set<Vec> next;
        for (const auto& p : points)
            for (const auto& q : summand) {
                Vec s(n);
                for (std::size_t k = 0; k < n; ++k) s[k] = p[k] + q[k];
                next.insert(s);
            }
        if (next.size() > 4000) throw Error("boundary too large for the canonicity test");
        points.assign(next.begin(), next.end());
    }
    std::vector<Vec> recession;
    for (const auto& f : germ.coordinate_forms) recession.push_back(integral(f));

    NormalFan nf = normal_fan(points, recession, n);

    std::set<LatticeVector> germ_rays(germ.rays.begin(), germ.rays.end());
    auto log_disc = [&](const LatticeVector& v) {
        return dot(germ.canonical_form, v) - weight_multiplicity(spec, coordinate_weights(germ, v));
    };

    CanonicityResult res;
    res.log_canonical = true;
    res.klt = true;
    res.cones_examined = nf.cones.size();
    std::optional<Rational> best;
    LatticeVector best_at;
    std::optional<LatticeVector> unbounded_witness;

    auto consider = [&](const LatticeVector& v, const Rational& value) {
        if (!best || value < *best || (value == *best && v < best_at)) {
            best = value;
            best_at = v;
        }
    };

    for (const auto& cone : nf.cones) {
        std::vector<LatticeVector> gens;
        for (const auto& g : cone) gens.push_back(to_lattice(g));
        std::vector<Rational> L;
        for (const auto& g : gens) L.push_back(log_disc(g));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (L[i].sign() < 0) res.log_canonical = false;
            if (L[i].sign() <= 0) res.klt = false;
        }
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (L[i].sign() >= 0) continue;
            if (!germ_rays.count(gens[i])) continue;
            // theta > 1 along a boundary divisor: k v_i + v_j is exceptional with a -> -infinity
            std::size_t j = (i + 1) % gens.size();
            Rational k = (L[j] - Rational(1)) / (-L[i]);
            Integer kk = k.floor() + 1;
            if (kk < 1) kk = 1;
            LatticeVector w = primitive(kk * gens[i] + gens[j]);
            if (!unbounded_witness || w < *unbounded_witness) unbounded_witness = w;
        }
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (!germ_rays.count(gens[i])) consider(gens[i], L[i] - Rational(1));
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                LatticeVector s = gens[i] + gens[j];
                consider(primitive(s), log_disc(primitive(s)) - Rational(1));
            }
        }
        // L is linear on the cone: L(sum k_i g_i / D) = sum k_i l_i / (D M) with l_i = M L_i
        Integer M = 1;
        for (const auto& x : L) M = lcm(M, x.den());
        std::vector<__int128> l;
        for (const auto& x : L) {
            Integer li = x.num() * (M / x.den());
            if (abs(li) > Integer(1'000'000'000'000LL)) throw Error("discrepancies too large for the canonicity test");
            l.push_back(static_cast<long long>(li));
        }
        std::optional<__int128> cone_min;
        std::vector<Vec> at_min;
        IntegerMatrix gm = IntegerMatrix::from_rows(gens);
        walk_parallelepiped(gm, [&](const Vec& k) {
            __int128 v = 0;
            bool zero = true;
            for (std::size_t i = 0; i < k.size(); ++i) {
                v += l[i] * k[i];
                zero &= k[i] == 0;
            }
            if (zero) return;
            if (!cone_min || v < *cone_min) {
                cone_min = v;
                at_min.assign(1, k);
            } else if (v == *cone_min) {
                at_min.push_back(k);
            }
        });
        if (cone_min) {
            Integer D = abs(determinant(gm));
            for (const auto& k : at_min) {
                LatticeVector p(gens.size());
                for (std::size_t i = 0; i < k.size(); ++i)
                    for (std::size_t j = 0; j < gens.size(); ++j) p[j] += Integer(k[i]) * gens[i][j];
                for (std::size_t j = 0; j < gens.size(); ++j) p[j] /= D;
                consider(p, log_disc(p) - Rational(1));
            }
        }
    }

    if (unbounded_witness) {
        res.canonical = false;
        res.witness = unbounded_witness;
        if (best) res.minimizer = best_at;
        return res;
    }
    if (best) {
        res.min_exceptional = best;
        res.minimizer = best_at;
        res.canonical = best->sign() >= 0;
        if (!res.canonical) res.witness = best_at;
    } else {
        res.canonical = true;
    }
    return res;
}

NonpltBound nonplt_bound(long long r, long long q, const Rational& alpha, const Rational& mult) {
    if (std::gcd(r, q) != 1) throw Error("nonplt_bound needs gcd(r, q) = 1");
    if (!((1 <= q && q < r) || (r == 1 && q == 1))) throw Error("nonplt_bound needs 1 <= q < r or r = q = 1");
    if (alpha.sign() < 0 || mult.sign() < 0) throw Error("alpha and mult must be nonnegative");
    NonpltBound b;
    b.discrepancy_T = Rational(Integer(q + 1 - r), Integer(r)) + alpha * Rational(Integer(q), Integer(r)) - mult;
    b.bound = -(Rational(1) - Rational(Integer(1), Integer(r))) * (Rational(1) + Rational(Integer(1), Integer(q)));
    return b;
}

Decomposition2D lc_decompose_2d(const MonomialDivisorSpec& spec) {
    Decomposition2D d;
    for (const auto& t : spec.branches) {
        const auto& ex = t.branch.exponents;
        for (const auto& l : ex)
            if (l.size() != 2) throw Error("lc_decompose_2d needs a two-variable boundary");
        if (ex.size() == 1 && ex[0] == Vec{1, 0}) {
            d.theta1 += t.coefficient;
            continue;
        }
        if (ex.size() == 1 && ex[0] == Vec{0, 1}) {
            d.theta2 += t.coefficient;
            continue;
        }
        long long dx = -1, dy = -1;
        for (const auto& l : ex) {
            if (l[0] == 0 && l[1] == 0) throw Error("branch '" + t.branch.label + "' is a unit");
            if (l[1] == 0 && (dx < 0 || l[0] < dx)) dx = l[0];
            if (l[0] == 0 && (dy < 0 || l[1] < dy)) dy = l[1];
        }
        if (dy < 0) throw Error("branch '" + t.branch.label + "' is divisible by x");
        if (dx < 0) throw Error("branch '" + t.branch.label + "' is divisible by y");
        d.thetas.push_back(t.coefficient);
        d.d_x.push_back(dx);
        d.d_y.push_back(dy);
    }

    const Rational one(1);
    auto y_side = [&](std::size_t from, const Rational& split_part) {
        Rational s = d.theta2 + split_part;
        for (std::size_t i = from; i < d.thetas.size(); ++i) s += d.thetas[i] * Rational(d.d_y[i]);
        return s;
    };

    if (d.theta1 >= one) {
        d.exists = true;
        d.at_axis = true;
        d.theta_prime = 0;
        d.theta_double_prime = 0;
        d.d0_x = d.theta1;
        d.d0_y = y_side(0, 0);
    }
    Rational running = d.theta1;
    for (std::size_t j = 0; j < d.thetas.size(); ++j) {
        Rational reach = running + d.thetas[j] * Rational(d.d_x[j]);
        if (running <= one && reach >= one)
            d.admissible_j.push_back(j);
        if (!d.exists && reach >= one) {
            d.exists = true;
            d.j = j;
            d.theta_prime = (one - running) / Rational(d.d_x[j]);
            d.theta_double_prime = d.thetas[j] - d.theta_prime;
            d.d0_x = running + d.theta_prime * Rational(d.d_x[j]);
            d.d0_y = y_side(j + 1, d.theta_double_prime * Rational(d.d_y[j]));
        }
        running = reach;
    }
    d.inequality_holds = d.exists && d.d0_y >= one;
    return d;
}

}  // namespace toricdiv
