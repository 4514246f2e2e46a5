#include "toricdiv/fan.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace toricdiv {

namespace {

// Normal vector to n-1 vectors in Z^n (cofactor expansion).
LatticeVector hyperplane_normal(const std::vector<LatticeVector>& vs, std::size_t n) {
    LatticeVector normal(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntegerMatrix minor(n - 1, n - 1);
        for (std::size_t r = 0; r + 1 < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r, cc++) = vs[r][c];
            }
        }
        Integer d = determinant(minor);
        normal[j] = (j % 2 == 0) ? d : Integer(-d);
    }
    return normal;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

bool Cone::has_generator(const LatticeVector& v) const {
    return std::find(generators.begin(), generators.end(), v) != generators.end();
}

std::vector<Facet> facets(const Cone& c) {
    const std::size_t n = c.rank();
    const std::size_t k = c.generators.size();
    if (k < n) throw Error("cone is not full-dimensional");
    std::vector<std::vector<std::size_t>> subs;
    std::vector<std::size_t> cur;
    subsets(k, n - 1, 0, cur, subs);

    std::vector<Facet> out;
    std::set<LatticeVector> seen;
    for (const auto& s : subs) {
        std::vector<LatticeVector> vs;
        for (auto i : s) vs.push_back(c.generators[i]);
        LatticeVector normal = hyperplane_normal(vs, n);
        if (normal.is_zero()) continue;
        bool pos = false, neg = false;
        for (const auto& g : c.generators) {
            int sg = dot(normal, g).sign();
            pos |= sg > 0;
            neg |= sg < 0;
        }
        if (pos && neg) continue;
        if (neg) normal = -normal;
        normal = primitive(normal);
        if (!seen.insert(normal).second) continue;
        Facet f{normal, {}};
        for (std::size_t i = 0; i < k; ++i)
            if (dot(normal, c.generators[i]) == 0) f.members.push_back(i);
        out.push_back(std::move(f));
    }
    return out;
}

bool contains(const Cone& c, const LatticeVector& v) {
    for (const auto& f : facets(c))
        if (dot(f.normal, v) < 0) return false;
    return true;
}

std::vector<LatticeVector> Fan::rays() const {
    std::set<LatticeVector> s;
    for (const auto& c : maximal_cones)
        for (const auto& g : c.generators) s.insert(g);
    return {s.begin(), s.end()};
}

bool Fan::has_ray(const LatticeVector& v) const {
    for (const auto& c : maximal_cones)
        if (c.has_generator(v)) return true;
    return false;
}

Fan germ_fan(const GermSpec& germ) {
    ToricGerm g = toric_germ(germ);
    return Fan{g.rank, {Cone{g.rays}}};
}

LatticeVector blowup_ray(const GermSpec& germ, const std::vector<long long>& weights) {
    RationalVector w;
    for (long long x : weights) w.emplace_back(x);
    return blowup_ray(germ, w);
}

LatticeVector blowup_ray(const GermSpec& germ, const RationalVector& weights) {
    if (weights.size() != germ.coordinate_count())
        throw Error("expected " + std::to_string(germ.coordinate_count()) + " weights for germ " + germ.str());
    for (const auto& w : weights)
        if (w.sign() <= 0) throw Error("weights must be positive");

    auto require_integral = [&] {
        for (const auto& w : weights)
            if (!w.is_integer()) throw Error("weights must be integers for germ " + germ.str());
    };

    switch (germ.kind) {
        case GermSpec::Kind::SmoothPoint: {
            require_integral();
            LatticeVector v(weights.size());
            for (std::size_t i = 0; i < weights.size(); ++i) v[i] = weights[i].num();
            if (v.content() != 1)
                throw Error("weights " + v.str() + " have common divisor " + v.content().str() +
                            "; the valuation ray is not primitive");
            return v;
        }
        case GermSpec::Kind::Cyclic: {
            const Rational r(germ.r), q(germ.q);
            RationalVector c{r * weights[0], weights[1] + q * weights[0], weights[2] - q * weights[0]};
            LatticeVector v(3);
            for (std::size_t i = 0; i < 3; ++i) {
                if (!c[i].is_integer())
                    throw Error("weights do not define a point of the lattice Z^3 + Z(1,-q,q)/r");
                v[i] = c[i].num();
            }
            if (v.content() != 1) throw Error("weights define a non-primitive lattice point");
            return v;
        }
        case GermSpec::Kind::OrdinaryDoublePoint: {
            require_integral();
            const Integer b1 = weights[0].num(), b2 = weights[1].num(), b3 = weights[2].num(),
                          b4 = weights[3].num();
            if (b1 + b2 != b3 + b4) throw Error("ODP weights must satisfy b1 + b2 = b3 + b4");
            const Integer b[4] = {b1, b2, b3, b4};
            for (int skip = 0; skip < 4; ++skip) {
                Integer g = 0;
                for (int i = 0; i < 4; ++i)
                    if (i != skip) g = gcd(g, b[i]);
                if (g != 1) throw Error("ODP weights need gcd 1 for every three of them");
            }
            return LatticeVector(std::vector<Integer>{b4, b1, b1 + b2});
        }
    }
    throw Error("unknown germ kind");
}

Fan star_subdivide(const Fan& f, const LatticeVector& w) {
    if (w.rank() != f.rank) throw Error("subdivision vector has the wrong rank");
    if (w.content() != 1) throw Error("subdivision vector must be primitive");
    Fan out{f.rank, {}};
    bool inside = false;
    for (const auto& c : f.maximal_cones) {
        if (!contains(c, w)) {
            out.maximal_cones.push_back(c);
            continue;
        }
        inside = true;
        if (c.has_generator(w)) {
            out.maximal_cones.push_back(c);
            continue;
        }
        for (const auto& facet : facets(c)) {
            if (dot(facet.normal, w) <= 0) continue;
            Cone nc;
            nc.generators.push_back(w);
            for (auto i : facet.members) nc.generators.push_back(c.generators[i]);
            out.maximal_cones.push_back(std::move(nc));
        }
    }
    if (!inside) throw Error("vector " + w.str() + " lies outside the support of the fan");
    return out;
}

LatticeVector quotient_image(const LatticeVector& rho, const LatticeVector& v) {
    IntegerMatrix basis = complete_to_basis(rho);
    IntegerMatrix inv = unimodular_inverse(basis);
    LatticeVector c = v * inv;  // coordinates of v in the basis; c[0] is along rho
    LatticeVector q(v.rank() - 1);
    for (std::size_t i = 1; i < v.rank(); ++i) q[i - 1] = c[i];
    return q;
}

namespace {

int half_plane(const LatticeVector& v) {
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
}

Integer det2(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

StarSurface star_surface(const Fan& f, const LatticeVector& rho) {
    if (f.rank != 3) throw Error("star surfaces are defined for rank-3 fans");
    if (!f.has_ray(rho)) throw Error("vector " + rho.str() + " is not a ray of the fan");

    std::set<LatticeVector> neighbours;
    std::size_t cones_at_rho = 0;
    for (const auto& c : f.maximal_cones) {
        if (!c.has_generator(rho)) continue;
        if (!c.simplicial()) throw Error("star surface needs simplicial cones at the ray");
        ++cones_at_rho;
        for (const auto& g : c.generators)
            if (g != rho) neighbours.insert(g);
    }

    struct Item {
        LatticeVector ray, lift;
        Integer mult;
    };
    std::vector<Item> items;
    for (const auto& n : neighbours) {
        LatticeVector img = quotient_image(rho, n);
        Integer m = img.content();
        items.push_back({primitive(img), n, m});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        int ha = half_plane(a.ray), hb = half_plane(b.ray);
        if (ha != hb) return ha < hb;
        return det2(a.ray, b.ray) > 0;
    });

    StarSurface s;
    for (auto& it : items) {
        s.rays.push_back(it.ray);
        s.lifts.push_back(it.lift);
        s.diff_indices.push_back(it.mult);
    }
    s.boundary_curve_count = s.rays.size();
    if (s.rays.size() < 3 || cones_at_rho != s.rays.size())
        throw Error("the star of " + rho.str() + " is not a complete surface fan");
    for (std::size_t i = 0; i < s.rays.size(); ++i) {
        const auto& a = s.rays[i];
        const auto& b = s.rays[(i + 1) % s.rays.size()];
        Integer d = det2(a, b);
        if (d <= 0) throw Error("the star of " + rho.str() + " is not a complete surface fan");
        s.edge_indices.push_back(d);
    }
    return s;
}

nlohmann::ordered_json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

nlohmann::ordered_json fan_to_json(const Fan& f) {
    nlohmann::ordered_json j;
    j["rank"] = f.rank;
    auto cones = nlohmann::ordered_json::array();
    for (const auto& c : f.maximal_cones) {
        auto cone = nlohmann::ordered_json::array();
        for (const auto& g : c.generators) {
            auto vec = nlohmann::ordered_json::array();
            for (const auto& x : g.coords()) vec.push_back(integer_to_json(x));
            cone.push_back(vec);
        }
        cones.push_back(cone);
    }
    j["cones"] = cones;
    return j;
}

}  // namespace toricdiv
