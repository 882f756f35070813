// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "plcsim/signal.hpp"

namespace plcsim::fft {

// Thin wrapper over FFTW with per-thread plan caching. Forward is the
// unnormalized DFT; inverse carries the 1/n factor, so inverse(forward(x))
// round-trips.

void forward_inplace(std::vector<cplx>& data);
void inverse_inplace(std::vector<cplx>& data);

std::vector<cplx> forward(std::vector<cplx> data);
std::vector<cplx> inverse(std::vector<cplx> data);

/// Signed bin frequency in Hz for bin m of an n-point DFT at the given rate:
/// m <= n/2-1 maps to m*rate/n, the rest to negative frequencies.
double bin_frequency(std::size_t m, std::size_t n, double rate);

}  // namespace plcsim::fft
