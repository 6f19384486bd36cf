#pragma once

#include <array>
#include <cstdint>

#include "relspin/minkowski.hpp"
#include "relspin/poincare_rep.hpp"

namespace relspin {

/**
 * Deterministic pseudo-random stream. Wraps a 64-bit generator but derives
 * uniform doubles by hand so sequences are identical across standard
 * libraries; all sampled sweeps in the library and CLI go through this.
 */
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);
    std::array<double, 3> unit_vector();

    LorentzMatrix random_rotation();
    LorentzMatrix random_boost(double max_rapidity);
    /// rotation * boost * rotation; generic proper orthochronous element.
    LorentzMatrix random_lorentz(double max_rapidity);
    OnShellMomentum random_momentum(double mass, double max_spatial_norm);

private:
    std::uint64_t next_word();
    std::uint64_t state_[4];
};

/**
 * Halton low-discrepancy point in the given base (2, 3, 5, ...) at a given
 * index; used for the deterministic classical sampling grids.
 */
double halton(std::uint64_t index, std::uint32_t base);

}  // namespace relspin
