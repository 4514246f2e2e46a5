#pragma once

#include "toricdiv/quotient.hpp"
#include "toricdiv/surface.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace toricdiv {

/// Non-toric contraction types over the germ, with the infinite families capped by bound.
/// Cyclic germs give an empty list.
std::vector<ContractionType> enumerate_types(const GermSpec& germ, long long bound);

struct DuValClass {
    enum class Kind { A, D, E6, E7, E8, SpecialX1X2sqX3sq, NotDuVal };
    Kind kind = Kind::NotDuVal;
    long long n = 0;  ///< index for A and D

    std::string str() const;
};

/// Throws unless every monomial has the same weighted degree.
DuValClass du_val_recognize(const std::vector<long long>& weights, const MonomialBranch& phi);

/// phi plus pure powers x_i^N, N = sum(weights): the toric shadow of phi + (general psi of large degree).
MonomialBranch with_generic_term(const MonomialBranch& phi, const std::vector<long long>& weights);

struct ConditionReport {
    bool A = false;
    bool B = false;
    bool C = false;
    bool A_without_generic_term = false;
    Rational c_value;                  ///< a(S, D); C holds iff this is 0
    std::optional<LatticeVector> a_witness;
    std::optional<LatticeVector> a_witness_without_generic_term;
    std::vector<Rational> degrees;     ///< weighted degree of each monomial of phi

    bool all() const { return A && B && C; }
};

ConditionReport check_conditions(const GermSpec& germ, const std::vector<long long>& weights, const MonomialBranch& phi);
ConditionReport check_conditions(const ContractionType& t);

/// A point of Z on S met by Gamma where the secondary blow-up is computed torically.
struct ChartSite {
    std::string tag;    ///< "P1", "C2#1", ...
    LatticeVector rho, g, h, e4;
    bool on_curve = false;  ///< general point of a boundary curve (true) or torus-fixed point (false)
};

struct SingularityEntry {
    std::string location;
    std::optional<CyclicQuotientType> type;  ///< normalized; empty for fixtures
    std::string description;                 ///< "1/3(1,1,-1)" as computed, or the fixture text
    SingularityClass cls = SingularityClass::Smooth;
    bool fixture = false;
};

struct DiagramNode {
    std::string id;
    std::string kind;   ///< "gamma", "fiber", "point", "curve"
    std::string label;  ///< e.g. "Γ̃", "fiber", "1/5(1,4)", "curve -5"
};

struct ContractionReport {
    ContractionType type;
    std::vector<long long> weights;
    SurfaceModel surface;
    std::vector<std::pair<std::string, Rational>> diff;  ///< boundary curve name, coefficient (nonzero only)
    std::string gamma_class;
    Rational gamma_tilde_sq;
    std::vector<SingularityEntry> singularities;
    std::vector<DiagramNode> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    bool log_surface_toric = false;
    bool plt_blowup = true;
    bool non_normal_E = false;
    std::vector<std::string> fixtures;
    std::vector<ChartSite> charts;
    std::vector<std::string> notes;
};

/// Chart sites of a type (hard-coded per family).
std::vector<ChartSite> chart_sites(const ContractionType& t);

/// Surface label 1/gamma(1,b) of E~ = V(e4) at the point V(e4, h, x).
CyclicQuotientType surface_label(const LatticeVector& e4, const LatticeVector& h, const LatticeVector& x);

ContractionReport build_report(const ContractionType& t);

nlohmann::ordered_json report_to_json(const ContractionReport& r, bool dump_fan = false);
std::string report_to_text(const ContractionReport& r);

/// Valuation of the maximal-ideal blow-up of 1/r(1,-q,q) and a boundary of multiplicity 2 with
/// negative discrepancy there.
struct CyclicObstruction {
    GermSpec germ;
    RationalVector weights;  ///< (1/r, (r-q)/r, q/r)
    LatticeVector valuation;
    MonomialDivisorSpec boundary;
    Rational discrepancy;
};

CyclicObstruction cyclic_obstruction(const GermSpec& germ);

}  // namespace toricdiv
