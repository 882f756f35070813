// SPDX-License-Identifier: Apache-2.0
#include "plcsim/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace plcsim::fft {

namespace {

// FFTW planning is not thread-safe; execution on distinct plans is. Plans
// and their buffers are cached per thread, planning guarded by one mutex.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

struct CachedPlan {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
    std::size_t n = 0;

    CachedPlan(std::size_t size, int sign) : n(size) {
        buf = fftw_alloc_complex(size);
        if (!buf) throw std::bad_alloc();
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(size), buf, buf, sign, FFTW_ESTIMATE);
        if (!plan) {
            fftw_free(buf);
            throw std::runtime_error("fft: planning failed");
        }
    }
    CachedPlan(const CachedPlan&) = delete;
    CachedPlan& operator=(const CachedPlan&) = delete;
    ~CachedPlan() {
        if (plan) {
            std::lock_guard<std::mutex> lock(plan_mutex());
            fftw_destroy_plan(plan);
        }
        if (buf) fftw_free(buf);
    }
};

void execute(std::vector<cplx>& data, int sign) {
    if (data.empty()) throw std::invalid_argument("fft: empty input");
    thread_local std::map<std::pair<std::size_t, int>, std::unique_ptr<CachedPlan>> cache;
    auto key = std::make_pair(data.size(), sign);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<CachedPlan>(data.size(), sign)).first;
    CachedPlan& cp = *it->second;
    static_assert(sizeof(cplx) == sizeof(fftw_complex));
    std::memcpy(cp.buf, data.data(), data.size() * sizeof(cplx));
    fftw_execute(cp.plan);
    std::memcpy(data.data(), cp.buf, data.size() * sizeof(cplx));
}

}  // namespace

void forward_inplace(std::vector<cplx>& data) { execute(data, FFTW_FORWARD); }

void inverse_inplace(std::vector<cplx>& data) {
    execute(data, FFTW_BACKWARD);
    const double inv = 1.0 / static_cast<double>(data.size());
    for (cplx& x : data) x *= inv;
}

std::vector<cplx> forward(std::vector<cplx> data) {
    forward_inplace(data);
    return data;
}

std::vector<cplx> inverse(std::vector<cplx> data) {
    inverse_inplace(data);
    return data;
}

double bin_frequency(std::size_t m, std::size_t n, double rate) {
    const double f = static_cast<double>(m) * rate / static_cast<double>(n);
    return (m < (n + 1) / 2) ? f : f - rate;
}

}  // namespace plcsim::fft
