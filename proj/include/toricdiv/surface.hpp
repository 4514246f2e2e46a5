#pragma once

#include "toricdiv/contraction.hpp"

#include <array>
#include <optional>
#include <vector>

namespace toricdiv {

struct WeightsDecomposition {
    std::array<long long, 3> a;
    std::array<long long, 3> d;
};

/// d_i = gcd(b_j, b_k), a_i = b_i / (d_j d_k).
WeightsDecomposition weights_decomposition(const std::array<long long, 3>& beta);

/// O(m) . O(m') on P(a1,a2,a3).
Rational wpp_intersection(const Rational& m, const Rational& m2, const std::array<long long, 3>& a);

/// The exceptional surface with its boundary curves.
///
/// WPP: P(a1,a2,a3) with boundary {x_i = 0} of degree a_i. Star kinds: the toric surface of a
/// star fan, boundary curves in counterclockwise order with their intersection matrix.
struct SurfaceModel {
    enum class Kind { WPP, QuadricStar, GeneralStar };

    Kind kind = Kind::WPP;
    std::array<long long, 3> wpp_weights{1, 1, 1};
    std::vector<Rational> diff_coeffs;      ///< per boundary curve
    StarSurface star;                        ///< star kinds
    std::vector<std::vector<Rational>> intersection;  ///< star kinds

    std::size_t boundary_count() const { return diff_coeffs.size(); }
    std::string kind_name() const;
};

/// Divisor class: O(1)-multiple on WPP, boundary combination on star kinds.
struct DivisorClass {
    Rational degree;
    std::vector<Rational> coeffs;
};

SurfaceModel wpp_model(const std::array<long long, 3>& beta);
/// Star model of the exceptional divisor of the weighted blow-up of a germ at w.
SurfaceModel star_model(const GermSpec& germ, const LatticeVector& w);

Rational intersect(const SurfaceModel& s, const DivisorClass& x, const DivisorClass& y);

/// K_S + Diff_S(0).
DivisorClass adjunction_class(const SurfaceModel& s);
/// O(1)-coefficient of K_S + Diff on WPP models: -sum a_i + sum (d_i - 1)/d_i a_i.
Rational adjunction_degree(const SurfaceModel& s);

struct NefResult {
    bool nef = false;
    bool ample = false;
    std::optional<std::size_t> witness;  ///< boundary curve with negative degree
};

NefResult nef_test(const SurfaceModel& s, const DivisorClass& c);

/// a2 + a3 - a2 a3 - (d3 - 1)/d3 a3
Rational point_case_inequality(long long a2, long long a3, long long d3);

/// Class of Gamma = (strict transform of {phi = 0}) restricted to S, on a star model.
DivisorClass star_gamma_class(const GermSpec& germ, const LatticeVector& w, const SurfaceModel& s,
                              const MonomialBranch& phi);
/// S|_S on a star model.
DivisorClass star_self_restriction(const GermSpec& germ, const LatticeVector& w, const SurfaceModel& s);

struct GammaTilde {
    Rational value;           ///< (K_S + Diff).Gamma / (a(S,0) + 1) - Gamma^2
    Rational adjunction_dot;  ///< (K_S + Diff).Gamma
    Rational gamma_sq;
    Rational a_plus_one;      ///< a(S,0) + 1
    std::optional<Rational> gamma_degree;  ///< WPP route: Gamma ~ O(gamma)
};

/// Closed-form route on P(a1,a2,a3) for smooth-point types, star route for ODP types.
GammaTilde gamma_tilde_sq(const ContractionType& t);
/// Star-fan route for any type.
GammaTilde gamma_tilde_sq_star(const ContractionType& t);

}  // namespace toricdiv
