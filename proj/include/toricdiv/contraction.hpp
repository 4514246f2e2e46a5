#pragma once

#include "toricdiv/discrepancy.hpp"

#include <string>
#include <vector>

namespace toricdiv {

/// A non-toric divisorial contraction type: family, parameters and the designated polynomial phi.
struct ContractionType {
    enum class Family { A, D, E6, E7, E8, OdpA };

    Family family = Family::E8;
    /// A: (a2, a3, d1). D: (n). OdpA: (b2, b3, b4). E: empty.
    std::vector<long long> params;
    bool special = false;  ///< phi = x1 x2^2 + x3^2 (x1^2 x2 + x3^2 for the A3 case)

    static ContractionType a_type(long long a2, long long a3, long long d1, bool special = false);
    static ContractionType d_type(long long n, bool special = false);
    static ContractionType e_type(int n);
    static ContractionType odp_type(long long b2, long long b3, long long b4);

    /// "An:a2,a3,d1[,special]", "D:n[,special]", "E6", "E7", "E8", "odpA:b2,b3,b4"
    static ContractionType parse(const std::string& text);
    std::string spelling() const;  ///< inverse of parse
    std::string name() const;      ///< e.g. "A5", "D6", "E8", "ODP_A(2;2,1)"

    GermSpec germ() const;
    std::vector<long long> weights() const;  ///< beta
    LatticeVector ray() const;               ///< the blow-up ray in N
    MonomialBranch phi() const;
    long long du_val_index() const;  ///< n of A_n / D_n / E_n; 0 for ODP

    friend bool operator==(const ContractionType&, const ContractionType&) = default;
};

}  // namespace toricdiv
