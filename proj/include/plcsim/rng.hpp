// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

#include "plcsim/signal.hpp"

namespace plcsim {

/// Counter-based deterministic random stream.
///
/// A stream is addressed by (master seed, stream id). The generator is
/// splitmix64 running on a state derived by mixing both values, so any
/// (seed, id) pair reproduces the same sequence bit-for-bit regardless of
/// what other streams were drawn from, and distinct ids give statistically
/// independent streams. Monte Carlo code derives one stream per
/// (trial, component) and may split further with substream().
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t master_seed() const { return master_; }
    std::uint64_t stream_id() const { return id_; }

    std::uint64_t next_u64();

    /// Uniform on (0, 1] (safe as a log() argument).
    double next_unit();

    /// Uniform on [0, 1).
    double next_unit_co();

    bool next_bit();

    /// One standard normal pair via Box-Muller.
    std::pair<double, double> next_normal_pair();

    /// Standard complex normal: E[Re^2] = E[Im^2] = 1/2, so E|z|^2 = 1.
    cplx next_std_complex_normal();

    /// Independent stream derived from this stream's identity and a tag.
    /// Derivation only involves (master seed, id, tag), never the current
    /// position, so substreams are reproducible out of order.
    RngStream substream(std::uint64_t tag) const;

  private:
    std::uint64_t master_;
    std::uint64_t id_;
    std::uint64_t state_;
};

/// n i.i.d. zero-mean complex Gaussian samples with E|x|^2 = variance
/// (variance/2 per quadrature), stamped with the given sample rate.
SampledSignal complex_gaussian(std::size_t n, double variance, RngStream& rng, double rate);

}  // namespace plcsim
