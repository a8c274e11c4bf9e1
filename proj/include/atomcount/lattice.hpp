#ifndef ATOMCOUNT_LATTICE_HPP
#define ATOMCOUNT_LATTICE_HPP

#include <variant>

#include "atomcount/common.hpp"

namespace atomcount {

// Physical constants of the trapped cloud. Defaults correspond to Rb-87 in a
// deep optical lattice; every field can be overridden per scenario.
struct PhysicalParams {
    double mass_kg = 1.443e-25;
    double hbar = 1.0546e-34;
    double g = 9.81;
    double wannier_width = 41.3e-9;  // on-site Gaussian width (m)

    void validate() const;
};

// Rectangular lattice centered on the coordinate origin. Site index runs
// x-fastest: index = ix + nx*(iy + ny*iz).
struct LatticeGeometry {
    std::array<int, 3> dims{1, 1, 1};
    double spacing = 7.0e-6;  // m

    int num_sites() const { return dims[0] * dims[1] * dims[2]; }
    void validate() const;
    // Checks the non-overlap assumption wannier_width < spacing/4 in addition
    // to the individual field invariants.
    void validate_with(const PhysicalParams& params) const;
};

std::vector<Vec3> site_positions(const LatticeGeometry& geometry);

// Product of on-site coherent states |alpha_i>.
struct CoherentProduct {
    std::vector<cdouble> amplitudes;
};

// Hard-core occupation pattern, n_i in {0,1}.
struct FockPattern {
    std::vector<int> occupations;
    int particles() const;
};

// Equal-weight superposition of all C(n_sites, n_particles) hard-core
// patterns.
struct SymmetricSuperposition {
    int n_particles = 0;
    int n_sites = 0;
};

using ManyBodyState = std::variant<CoherentProduct, FockPattern, SymmetricSuperposition>;

void validate_state(const ManyBodyState& state, int n_sites);

enum class PatternKind { unit, checkerboard, striped, block };

PatternKind pattern_kind_from_string(const std::string& name);

// Builds the named occupation pattern:
//   unit         - all sites occupied
//   checkerboard - alternating sites (3D parity of the index sum)
//   striped      - alternating lines along x (y-index parity); in 1D falls
//                  back to alternating pairs [1,1,0,0,...]
//   block        - first half of the chain occupied (1D, even site count)
FockPattern make_pattern(PatternKind kind, const LatticeGeometry& geometry);

// Alternating coherent amplitudes: gamma on sites with even x-fastest index,
// beta on odd ones (1-based site 2i carries beta, site 2i-1 carries gamma).
// beta == gamma reduces to the homogeneous superfluid product.
CoherentProduct make_supersolid(const LatticeGeometry& geometry, cdouble beta, cdouble gamma);

// Axis-aligned detector box below the lattice; kappa is the combined
// efficiency/exposure factor in [0,1].
struct DetectorBox {
    Vec3 center{0.0, 0.0, 0.01};
    double dx = 0.01;
    double dy = 0.01;
    double dz = 0.002;
    double kappa = 1.0;

    void validate() const;
};

}  // namespace atomcount

#endif
