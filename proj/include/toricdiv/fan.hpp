#pragma once

#include "toricdiv/germ.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace toricdiv {

/// Rational polyhedral cone given by primitive generators.
struct Cone {
    std::vector<LatticeVector> generators;

    std::size_t rank() const { return generators.empty() ? 0 : generators.front().rank(); }
    bool simplicial() const { return generators.size() == rank(); }
    bool has_generator(const LatticeVector& v) const;
    IntegerMatrix matrix() const { return IntegerMatrix::from_rows(generators); }

    friend bool operator==(const Cone&, const Cone&) = default;
};

struct Facet {
    LatticeVector normal;              ///< primitive inward normal
    std::vector<std::size_t> members;  ///< generator indices on the facet
};

/// Facets of a full-dimensional cone.
std::vector<Facet> facets(const Cone& c);

bool contains(const Cone& c, const LatticeVector& v);

/// Fan given by its maximal cones; faces are implicit generator subsets.
struct Fan {
    std::size_t rank = 3;
    std::vector<Cone> maximal_cones;

    std::vector<LatticeVector> rays() const;  ///< sorted, unique
    bool has_ray(const LatticeVector& v) const;
};

/// The one-cone fan of a germ.
Fan germ_fan(const GermSpec& germ);

/// Lattice point of the germ cone whose coordinate valuations are the given weights.
/// Smooth and ODP germs take integer weights; cyclic germs take weights in (1/r)Z.
LatticeVector blowup_ray(const GermSpec& germ, const RationalVector& weights);
LatticeVector blowup_ray(const GermSpec& germ, const std::vector<long long>& weights);

/// Star subdivision at the primitive vector w.
Fan star_subdivide(const Fan& f, const LatticeVector& w);

/// The toric surface V(rho): its fan in N / Z rho.
struct StarSurface {
    std::vector<LatticeVector> rays;        ///< primitive 2-D rays, counterclockwise
    std::vector<LatticeVector> lifts;       ///< the fan rays mapping onto them
    std::vector<Integer> diff_indices;      ///< index of the 2-cone <rho, lift_i> in its saturation
    std::vector<Integer> edge_indices;      ///< |det(rays_i, rays_{i+1})|, cyclically
    std::size_t boundary_curve_count = 0;
};

StarSurface star_surface(const Fan& f, const LatticeVector& rho);

/// Coordinates in N / Z rho of a lattice vector, using a basis completing rho.
LatticeVector quotient_image(const LatticeVector& rho, const LatticeVector& v);

nlohmann::ordered_json fan_to_json(const Fan& f);

/// JSON number when it fits in 64 bits, otherwise a decimal string.
nlohmann::ordered_json integer_to_json(const Integer& v);

}  // namespace toricdiv
