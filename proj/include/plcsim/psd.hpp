// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "plcsim/signal.hpp"

namespace plcsim {

/// Two-sided Welch estimate, frequencies ascending over [-rate/2, rate/2).
/// psd is a density in power/Hz: sum(psd) * rate/segment_len recovers the
/// mean power up to windowing bias.
struct PsdEstimate {
    std::vector<double> frequencies;  // Hz
    std::vector<double> psd;          // power / Hz

    double bin_width() const {
        return frequencies.size() >= 2 ? frequencies[1] - frequencies[0] : 0.0;
    }
    /// Integrated power over [f_lo, f_hi].
    double band_power(double f_lo, double f_hi) const;
    /// Integrated power over all frequencies.
    double total_power() const;
};

/// Welch PSD with a Hann window. overlap is the fractional segment overlap
/// in [0, 1); segment_len must not exceed the signal length.
PsdEstimate welch_psd(const SampledSignal& signal, std::size_t segment_len, double overlap = 0.5);

}  // namespace plcsim
