#include "relspin/sampling.hpp"

#include <cmath>
#include <numbers>

namespace relspin {

namespace {
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

// xoshiro256**
std::uint64_t RandomStream::next_word() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomStream::uniform() {
    return static_cast<double>(next_word() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::array<double, 3> RandomStream::unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

LorentzMatrix RandomStream::random_rotation() {
    const auto axis = unit_vector();
    const double angle = uniform(0.0, std::numbers::pi);
    return LorentzMatrix::rotation(axis, angle);
}

LorentzMatrix RandomStream::random_boost(double max_rapidity) {
    const auto axis = unit_vector();
    const double chi = uniform(-max_rapidity, max_rapidity);
    return LorentzMatrix::boost(axis, chi);
}

LorentzMatrix RandomStream::random_lorentz(double max_rapidity) {
    return random_rotation() * random_boost(max_rapidity) * random_rotation();
}

OnShellMomentum RandomStream::random_momentum(double mass, double max_spatial_norm) {
    const auto dir = unit_vector();
    const double pn = uniform(0.0, max_spatial_norm);
    return OnShellMomentum(mass, {pn * dir[0], pn * dir[1], pn * dir[2]});
}

double halton(std::uint64_t index, std::uint32_t base) {
    double f = 1.0;
    double r = 0.0;
    std::uint64_t i = index;
    while (i > 0) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

}  // namespace relspin
