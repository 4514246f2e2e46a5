#include "toricdiv/germ.hpp"

#include <numeric>

namespace toricdiv {

GermSpec GermSpec::cyclic(long long r, long long q) {
    if (r < 2) throw Error("cyclic germ needs r >= 2");
    if (q < 1 || q >= r) throw Error("cyclic germ needs 1 <= q < r");
    if (std::gcd(r, q) != 1) throw Error("cyclic germ needs gcd(r, q) = 1");
    return {Kind::Cyclic, 3, r, q};
}

GermSpec GermSpec::parse(const std::string& text) {
    if (text == "smooth" || text == "smooth3") return smooth(3);
    if (text == "smooth2") return smooth(2);
    if (text == "odp") return odp();
    const std::string prefix = "cyclic:";
    if (text.rfind(prefix, 0) == 0) {
        auto body = text.substr(prefix.size());
        auto comma = body.find(',');
        if (comma == std::string::npos) throw Error("germ syntax is cyclic:R,Q");
        try {
            std::size_t used = 0;
            long long r = std::stoll(body.substr(0, comma), &used);
            if (used != comma) throw Error("germ syntax is cyclic:R,Q");
            std::string qs = body.substr(comma + 1);
            long long q = std::stoll(qs, &used);
            if (used != qs.size()) throw Error("germ syntax is cyclic:R,Q");
            return cyclic(r, q);
        } catch (const std::logic_error&) {
            throw Error("germ syntax is cyclic:R,Q");
        }
    }
    throw Error("unknown germ '" + text + "' (expected smooth, smooth2, cyclic:R,Q or odp)");
}

std::string GermSpec::str() const {
    switch (kind) {
        case Kind::SmoothPoint: return dim == 3 ? "smooth" : "smooth" + std::to_string(dim);
        case Kind::Cyclic: return "cyclic:" + std::to_string(r) + "," + std::to_string(q);
        case Kind::OrdinaryDoublePoint: return "odp";
    }
    return "?";
}

ToricGerm toric_germ(const GermSpec& germ) {
    ToricGerm g;
    g.spec = germ;
    switch (germ.kind) {
        case GermSpec::Kind::SmoothPoint: {
            if (germ.dim != 2 && germ.dim != 3) throw Error("smooth germs have dimension 2 or 3");
            g.rank = static_cast<std::size_t>(germ.dim);
            for (std::size_t i = 0; i < g.rank; ++i) {
                LatticeVector e(g.rank);
                e[i] = 1;
                g.rays.push_back(e);
                RationalVector form(g.rank);
                form[i] = 1;
                g.coordinate_forms.push_back(form);
            }
            g.canonical_form.assign(g.rank, Rational(1));
            break;
        }
        case GermSpec::Kind::Cyclic: {
            const long long r = germ.r, q = germ.q;
            g.rank = 3;
            g.rays = {LatticeVector{r, q, -q}, LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1}};
            // w = c v + b e2 + d e3 has standard coordinates (c/r, b - cq/r, d + cq/r)
            g.coordinate_forms = {
                RationalVector{Rational(1, r), 0, 0},
                RationalVector{Rational(-q, r), 1, 0},
                RationalVector{Rational(q, r), 0, 1},
            };
            g.canonical_form = {Rational(1, r), 1, 1};
            break;
        }
        case GermSpec::Kind::OrdinaryDoublePoint: {
            g.rank = 3;
            g.rays = {LatticeVector{0, 0, 1}, LatticeVector{1, 0, 1}, LatticeVector{1, 1, 1},
                      LatticeVector{0, 1, 1}};
            // facet normals of the square; x1 x2 = x3 x4 on the dual side
            g.coordinate_forms = {
                RationalVector{0, 1, 0},
                RationalVector{0, -1, 1},
                RationalVector{-1, 0, 1},
                RationalVector{1, 0, 0},
            };
            g.canonical_form = {0, 0, 1};
            break;
        }
    }
    return g;
}

RationalVector coordinate_weights(const ToricGerm& germ, const LatticeVector& w) {
    RationalVector out;
    out.reserve(germ.coordinate_forms.size());
    for (const auto& f : germ.coordinate_forms) out.push_back(dot(f, w));
    return out;
}

}  // namespace toricdiv
