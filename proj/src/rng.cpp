// SPDX-License-Identifier: Apache-2.0
#include "plcsim/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plcsim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

std::uint64_t derive_state(std::uint64_t master, std::uint64_t id) {
    std::uint64_t h = mix64(master + kGolden);
    h = mix64(h ^ mix64(id + 0x5851F42D4C957F2Dull));
    return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_(master_seed), id_(stream_id), state_(derive_state(master_seed, stream_id)) {}

std::uint64_t RngStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double RngStream::next_unit() {
    // 53-bit mantissa, shifted into (0, 1]
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::next_unit_co() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::next_bit() { return (next_u64() >> 63) != 0; }

std::pair<double, double> RngStream::next_normal_pair() {
    const double u1 = next_unit();
    const double u2 = next_unit_co();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(th), r * std::sin(th)};
}

cplx RngStream::next_std_complex_normal() {
    auto [a, b] = next_normal_pair();
    return {a * std::numbers::sqrt2 / 2.0, b * std::numbers::sqrt2 / 2.0};
}

RngStream RngStream::substream(std::uint64_t tag) const {
    return RngStream(master_, mix64(id_ + kGolden * (tag + 1)));
}

SampledSignal complex_gaussian(std::size_t n, double variance, RngStream& rng, double rate) {
    if (n == 0) throw std::invalid_argument("complex_gaussian: n must be > 0");
    if (variance < 0.0) throw std::invalid_argument("complex_gaussian: negative variance");
    SampledSignal out;
    out.rate = rate;
    out.samples.resize(n);
    const double s = std::sqrt(variance);
    for (std::size_t i = 0; i < n; ++i) out.samples[i] = s * rng.next_std_complex_normal();
    return out;
}

}  // namespace plcsim
