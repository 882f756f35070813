// SPDX-License-Identifier: Apache-2.0
#include "plcsim/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace plcsim {

void SampledSignal::validate() const {
    if (rate <= 0.0) throw std::invalid_argument("SampledSignal: rate must be > 0");
    if (samples.empty()) throw std::invalid_argument("SampledSignal: empty buffer");
    for (const cplx& x : samples) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw std::invalid_argument("SampledSignal: non-finite sample");
    }
}

double mean_power(const SampledSignal& signal) {
    if (signal.empty()) throw std::invalid_argument("mean_power: empty signal");
    double acc = 0.0;
    for (const cplx& x : signal.samples) acc += std::norm(x);
    return acc / static_cast<double>(signal.size());
}

SampledSignal scale_to_power(const SampledSignal& signal, double target) {
    if (target < 0.0) throw std::invalid_argument("scale_to_power: negative target");
    SampledSignal out = signal;
    if (target == 0.0) {
        for (cplx& x : out.samples) x = 0.0;
        return out;
    }
    const double current = mean_power(signal);
    if (current <= 0.0)
        throw std::runtime_error("scale_to_power: zero-power input, nonzero target");
    const double g = std::sqrt(target / current);
    for (cplx& x : out.samples) x *= g;
    return out;
}

SampledSignal compose_received(const SampledSignal& s, const SampledSignal& w,
                               const SampledSignal& i_cs, const SampledSignal& i_as) {
    const SampledSignal* parts[] = {&w, &i_cs, &i_as};
    for (const SampledSignal* p : parts) {
        if (p->size() != s.size())
            throw std::invalid_argument("compose_received: length mismatch");
        if (p->rate != s.rate)
            throw std::invalid_argument("compose_received: rate mismatch");
    }
    SampledSignal r = s;
    for (std::size_t i = 0; i < r.size(); ++i)
        r.samples[i] += w.samples[i] + i_cs.samples[i] + i_as.samples[i];
    return r;
}

}  // namespace plcsim
