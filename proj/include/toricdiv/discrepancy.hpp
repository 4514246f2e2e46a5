#pragma once

#include "toricdiv/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricdiv {

/// One polynomial branch, remembered only through its monomial exponents in germ coordinates.
struct MonomialBranch {
    std::vector<std::vector<long long>> exponents;
    std::string label;

    /// Parses "x1^5+x2^3+x3^2", "x1*x2^2+x3^2", "x^2+y^3" (x,y,z stand for x1,x2,x3).
    static MonomialBranch parse(const std::string& text, std::size_t variables);
};

struct MonomialDivisorSpec {
    struct Term {
        Rational coefficient;
        MonomialBranch branch;
    };
    std::vector<Term> branches;
    bool newton_nondegenerate = true;

    /// One branch per line, "coeff; monomial+monomial". Blank lines and '#' comments are skipped.
    static MonomialDivisorSpec parse(const std::string& text, std::size_t variables);
};

/// sum_i theta_i * min over exponents l of branch i of <l, weights>
Rational weight_multiplicity(const MonomialDivisorSpec& spec, const RationalVector& weights);

struct DiscrepancyResult {
    Rational value;           ///< canonical_part - multiplicity
    LatticeVector valuation;  ///< w in N
    Rational canonical_part;  ///< <m_K, w> - 1
    Rational multiplicity;
};

/// a(E_w, spec) for the toric valuation with the given coordinate weights.
DiscrepancyResult toric_discrepancy(const GermSpec& germ, const RationalVector& weights,
                                    const MonomialDivisorSpec& spec);
DiscrepancyResult toric_discrepancy(const GermSpec& germ, const std::vector<long long>& weights,
                                    const MonomialDivisorSpec& spec);
/// Same for a lattice point of the germ cone.
DiscrepancyResult toric_discrepancy(const ToricGerm& germ, const LatticeVector& w, const MonomialDivisorSpec& spec);

struct CanonicityResult {
    bool canonical = false;
    std::optional<LatticeVector> witness;   ///< primitive w with a(E_w) < 0
    std::optional<Rational> min_exceptional;  ///< exact minimum of a over exceptional toric valuations, if bounded
    LatticeVector minimizer;                 ///< where that minimum is attained
    bool log_canonical = false;              ///< log discrepancy >= 0 on all of the germ cone
    bool klt = false;                        ///< log discrepancy > 0 on all of the germ cone
    std::size_t cones_examined = 0;
};

/// Canonicity of (X, spec) over toric valuations, computed exactly from the normal fan of the
/// Newton polyhedron. For degenerate boundaries the answer is a necessary condition only.
CanonicityResult is_canonical_pair_toric(const GermSpec& germ, const MonomialDivisorSpec& spec);

struct NonpltBound {
    Rational discrepancy_T;
    Rational bound;
};

NonpltBound nonplt_bound(long long r, long long q, const Rational& alpha, const Rational& mult);

/// Decomposition of a 2-D boundary theta1 {x=0} + theta2 {y=0} + sum theta_i {f_i=0}.
struct Decomposition2D {
    Rational theta1, theta2;
    std::vector<Rational> thetas;  ///< coefficients of the non-axis branches, in order
    std::vector<long long> d_x, d_y;
    bool exists = false;
    bool at_axis = false;            ///< theta1 alone reaches 1
    std::size_t j = 0;               ///< split branch (0-based into thetas), when !at_axis
    std::vector<std::size_t> admissible_j;
    Rational theta_prime, theta_double_prime;
    Rational d0_x;                   ///< coefficient of {x=0} in D_0, equal to 1 when exists
    Rational d0_y;                   ///< left side of the y-inequality
    bool inequality_holds = false;   ///< d0_y >= 1
};

/// Branches equal to the single monomial x or y are read as the axes.
Decomposition2D lc_decompose_2d(const MonomialDivisorSpec& spec);

}  // namespace toricdiv
