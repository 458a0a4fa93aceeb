// SPDX-License-Identifier: Apache-2.0
#include "gmr/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace gmr::kernels {

namespace {

void exp_batch_scalar(const double* in, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double x = in[i];
        if (x > 708.0) x = 708.0;
        if (x < -708.0) x = -708.0;
        out[i] = std::exp(x);
    }
}

std::size_t em_advance_scalar(const EmParams& p, std::span<double> y,
                              std::span<double> integ, const double* normals,
                              std::size_t n_steps) {
    const std::size_t n = y.size();
    const double half_s2 = 0.5 * p.sigma * p.sigma;
    const double sdt = p.sigma * std::sqrt(p.dt);
    std::size_t blown = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double yi = y[i];
        double acc = integ[i];
        double x = std::exp(yi);
        double g = p.lambda * x * x;
        bool bad = false;
        for (std::size_t s = 0; s < n_steps; ++s) {
            const double drift = p.k * (p.alpha - x) - half_s2;
            yi += drift * p.dt + sdt * normals[s * n + i];
            x = std::exp(yi);
            const double gn = p.lambda * x * x;
            acc += 0.5 * p.dt * (g + gn);
            g = gn;
            bad = bad || !(std::abs(yi) <= 50.0);
        }
        y[i] = yi;
        integ[i] = acc;
        blown += bad ? 1 : 0;
    }
    return blown;
}

void tridiag_apply_scalar(std::span<const double> lo, std::span<const double> d,
                          std::span<const double> up, std::span<const double> x,
                          std::span<double> out) {
    const std::size_t n = d.size();
    if (n == 0) return;
    if (n == 1) {
        out[0] = d[0] * x[0];
        return;
    }
    out[0] = d[0] * x[0] + up[0] * x[1];
    for (std::size_t i = 1; i + 1 < n; ++i)
        out[i] = lo[i] * x[i - 1] + d[i] * x[i] + up[i] * x[i + 1];
    out[n - 1] = lo[n - 1] * x[n - 2] + d[n - 1] * x[n - 1];
}

const KernelTable kScalar{"scalar", exp_batch_scalar, em_advance_scalar,
                          tridiag_apply_scalar};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
#else
    return false;
#endif
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#ifdef GMR_HAVE_AVX2_TU
    extern const KernelTable* avx2_kernels_impl();
    if (cpu_has_avx2()) return avx2_kernels_impl();
#endif
    return nullptr;
}

const KernelTable& active_kernels() {
    static const KernelTable* chosen = [] {
        const char* force = std::getenv("GMR_KERNELS");
        const KernelTable* avx2 = avx2_kernels();
        if (force && std::strcmp(force, "scalar") == 0) return &kScalar;
        if (force && std::strcmp(force, "avx2") == 0) return avx2 ? avx2 : &kScalar;
        return avx2 ? avx2 : &kScalar;
    }();
    return *chosen;
}

}  // namespace gmr::kernels
