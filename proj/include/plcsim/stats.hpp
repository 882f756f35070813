// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

namespace plcsim {

/// Inverse error function, accurate to machine precision (Newton refinement
/// of a log-based seed). Domain (-1, 1).
double erf_inv(double y);

/// Wilson score interval for a binomial proportion at the given z quantile.
/// Default z is the two-sided 99% normal quantile.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double z = 2.5758293035489004);

/// 0.5 * erfc(sqrt(gamma)): hard-decision BPSK error rate at per-carrier SNR
/// gamma (linear).
double bpsk_awgn_ber(double gamma);

}  // namespace plcsim
