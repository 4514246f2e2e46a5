#pragma once

#include "toricdiv/lattice.hpp"

#include <string>

namespace toricdiv {

/// A toric terminal germ: smooth point, cyclic quotient 1/r(1,-q,q), or the ordinary double point.
struct GermSpec {
    enum class Kind { SmoothPoint, Cyclic, OrdinaryDoublePoint };

    Kind kind = Kind::SmoothPoint;
    int dim = 3;  ///< 2 or 3 for smooth germs, 3 otherwise
    long long r = 1;
    long long q = 0;

    static GermSpec smooth(int dim = 3) { return {Kind::SmoothPoint, dim, 1, 0}; }
    static GermSpec cyclic(long long r, long long q);
    static GermSpec odp() { return {Kind::OrdinaryDoublePoint, 3, 1, 0}; }

    /// "smooth", "smooth2", "cyclic:R,Q" or "odp"
    static GermSpec parse(const std::string& text);
    std::string str() const;

    /// Number of monomial coordinates x_i (4 for the ODP, else dim).
    std::size_t coordinate_count() const { return kind == Kind::OrdinaryDoublePoint ? 4 : static_cast<std::size_t>(dim); }

    friend bool operator==(const GermSpec&, const GermSpec&) = default;
};

/// Cone data of a germ in a fixed integral basis of its lattice N.
///
/// Smooth: N = Z^n, the octant. Cyclic 1/r(1,-q,q): N = Z^3 + Z(1,-q,q)/r written in the basis
/// (v, e2, e3) with v = (1,-q,q)/r, so e1 = (r, q, -q). ODP: the cone over the unit square at
/// height one. coordinate_forms[i] is the valuation of x_i as a linear form on N, canonical_form
/// takes the value 1 on every ray.
struct ToricGerm {
    GermSpec spec;
    std::size_t rank = 3;
    std::vector<LatticeVector> rays;
    std::vector<RationalVector> coordinate_forms;
    RationalVector canonical_form;
};

ToricGerm toric_germ(const GermSpec& germ);

/// Valuations of the coordinates x_i at the lattice point w.
RationalVector coordinate_weights(const ToricGerm& germ, const LatticeVector& w);

}  // namespace toricdiv
