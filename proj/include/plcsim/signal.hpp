// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace plcsim {

using cplx = std::complex<double>;

/// Complex baseband sample buffer with an explicit sample rate. This is the
/// unit of exchange between every processing stage.
struct SampledSignal {
    std::vector<cplx> samples;
    double rate = 0.0;  // Hz

    SampledSignal() = default;
    SampledSignal(std::vector<cplx> s, double r) : samples(std::move(s)), rate(r) {}

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
    double duration() const { return static_cast<double>(samples.size()) / rate; }

    /// Throws std::invalid_argument if the rate is non-positive, the buffer is
    /// empty, or any sample is non-finite.
    void validate() const;
};

/// (1/n) * sum |x_k|^2. Throws std::invalid_argument on an empty signal.
double mean_power(const SampledSignal& signal);

/// Rescale so that mean_power(result) == target, preserving the waveform up
/// to a positive real factor. target == 0 yields the all-zero signal.
/// Throws std::runtime_error when asked to scale a zero-power signal to a
/// nonzero target.
SampledSignal scale_to_power(const SampledSignal& signal, double target);

/// Elementwise r = s + w + i_cs + i_as. All four must share length and rate.
SampledSignal compose_received(const SampledSignal& s, const SampledSignal& w,
                               const SampledSignal& i_cs, const SampledSignal& i_as);

}  // namespace plcsim
