#include "atomcount/lattice.hpp"

#include <cmath>
#include <numeric>

namespace atomcount {

void PhysicalParams::validate() const {
    if (!(mass_kg > 0.0) || !(hbar > 0.0) || !(g > 0.0) || !(wannier_width > 0.0))
        throw ConfigError("physical parameters must be strictly positive");
}

void LatticeGeometry::validate() const {
    for (int d : dims)
        if (d < 1) throw ConfigError("lattice dims must be positive integers");
    if (!(spacing > 0.0)) throw ConfigError("lattice spacing must be positive");
}

void LatticeGeometry::validate_with(const PhysicalParams& params) const {
    validate();
    params.validate();
    if (!(params.wannier_width < spacing / 4.0))
        throw ConfigError("wannier width must satisfy w < spacing/4 (non-overlapping sites)");
}

std::vector<Vec3> site_positions(const LatticeGeometry& geometry) {
    geometry.validate();
    const auto [nx, ny, nz] = geometry.dims;
    const double d = geometry.spacing;
    std::vector<Vec3> r;
    r.reserve(static_cast<std::size_t>(geometry.num_sites()));
    for (int iz = 0; iz < nz; ++iz)
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix)
                r.push_back({(ix - 0.5 * (nx - 1)) * d, (iy - 0.5 * (ny - 1)) * d,
                             (iz - 0.5 * (nz - 1)) * d});
    return r;
}

int FockPattern::particles() const {
    return std::accumulate(occupations.begin(), occupations.end(), 0);
}

void validate_state(const ManyBodyState& state, int n_sites) {
    if (const auto* c = std::get_if<CoherentProduct>(&state)) {
        if (static_cast<int>(c->amplitudes.size()) != n_sites)
            throw ConfigError("coherent amplitude count does not match lattice size");
        for (cdouble a : c->amplitudes)
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw ConfigError("coherent amplitudes must be finite");
    } else if (const auto* f = std::get_if<FockPattern>(&state)) {
        if (static_cast<int>(f->occupations.size()) != n_sites)
            throw ConfigError("occupation pattern does not match lattice size");
        for (int n : f->occupations)
            if (n != 0 && n != 1) throw ConfigError("occupations must be 0 or 1");
    } else if (const auto* s = std::get_if<SymmetricSuperposition>(&state)) {
        if (s->n_sites != n_sites)
            throw ConfigError("superposition site count does not match lattice size");
        if (s->n_particles <= 0 || s->n_particles > s->n_sites)
            throw ConfigError("superposition requires 0 < n_particles <= n_sites");
    }
}

PatternKind pattern_kind_from_string(const std::string& name) {
    if (name == "unit") return PatternKind::unit;
    if (name == "checkerboard") return PatternKind::checkerboard;
    if (name == "striped") return PatternKind::striped;
    if (name == "block") return PatternKind::block;
    throw ConfigError("unknown pattern kind: " + name);
}

FockPattern make_pattern(PatternKind kind, const LatticeGeometry& geometry) {
    geometry.validate();
    const auto [nx, ny, nz] = geometry.dims;
    const int n = geometry.num_sites();
    const bool one_dim = (nx == 1) + (ny == 1) + (nz == 1) >= 2;
    FockPattern pat;
    pat.occupations.assign(static_cast<std::size_t>(n), 0);
    std::size_t s = 0;
    switch (kind) {
        case PatternKind::unit:
            pat.occupations.assign(static_cast<std::size_t>(n), 1);
            break;
        case PatternKind::checkerboard:
            for (int iz = 0; iz < nz; ++iz)
                for (int iy = 0; iy < ny; ++iy)
                    for (int ix = 0; ix < nx; ++ix) pat.occupations[s++] = (ix + iy + iz) % 2 == 0;
            break;
        case PatternKind::striped:
            if (one_dim) {
                // 1D fallback: alternating pairs of sites.
                for (int i = 0; i < n; ++i) pat.occupations[static_cast<std::size_t>(i)] = (i / 2) % 2 == 0;
            } else {
                for (int iz = 0; iz < nz; ++iz)
                    for (int iy = 0; iy < ny; ++iy)
                        for (int ix = 0; ix < nx; ++ix) pat.occupations[s++] = iy % 2 == 0;
            }
            break;
        case PatternKind::block:
            if (!one_dim) throw ConfigError("block pattern is defined for 1D chains");
            if (n % 2 != 0) throw ConfigError("block pattern requires an even number of sites");
            for (int i = 0; i < n / 2; ++i) pat.occupations[static_cast<std::size_t>(i)] = 1;
            break;
    }
    return pat;
}

CoherentProduct make_supersolid(const LatticeGeometry& geometry, cdouble beta, cdouble gamma) {
    geometry.validate();
    const int n = geometry.num_sites();
    CoherentProduct state;
    state.amplitudes.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) state.amplitudes[static_cast<std::size_t>(i)] = (i % 2 == 0) ? gamma : beta;
    return state;
}

void DetectorBox::validate() const {
    if (!(dx > 0.0) || !(dy > 0.0) || !(dz > 0.0))
        throw ConfigError("detector edge lengths must be positive");
    if (!(kappa >= 0.0) || !(kappa <= 1.0)) throw ConfigError("kappa must lie in [0,1]");
    for (double c : center)
        if (!std::isfinite(c)) throw ConfigError("detector center must be finite");
}

}  // namespace atomcount
