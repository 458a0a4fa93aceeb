// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

namespace gmr::kernels {

/// Coefficients of one Euler-Maruyama batch advance in log coordinates:
///   dY = (k (alpha - e^Y) - sigma^2/2) dt + sigma dW,
/// accumulating the trapezoid of lambda e^{2Y} into integ.
struct EmParams {
    double k;
    double alpha;
    double sigma;
    double lambda;
    double dt;
};

/// Advance y[i], integ[i] (i < y.size()) by n_steps. normals is step-major:
/// normals[s * y.size() + i] is the unit normal for path i at step s.
/// Returns the number of paths whose |y| ever exceeded 50 (blow-up guard).
using em_advance_fn = std::size_t (*)(const EmParams&, std::span<double> y,
                                      std::span<double> integ,
                                      const double* normals, std::size_t n_steps);

/// out[i] = exp(in[i]); arguments are clamped to +-708 before scaling.
using exp_batch_fn = void (*)(const double* in, double* out, std::size_t n);

/// Tridiagonal apply, out_i = lo_i x_{i-1} + d_i x_i + up_i x_{i+1} with
/// lo_0 and up_{n-1} ignored.
using tridiag_apply_fn = void (*)(std::span<const double> lo, std::span<const double> d,
                                  std::span<const double> up, std::span<const double> x,
                                  std::span<double> out);

/// A kernel variant: the scalar reference or a SIMD implementation.
struct KernelTable {
    const char* name;
    exp_batch_fn exp_batch;
    em_advance_fn em_advance;
    tridiag_apply_fn tridiag_apply;
};

/// The scalar reference kernels (always available).
const KernelTable& scalar_kernels();

/// The AVX2 kernels, or nullptr when unsupported by the build or the CPU.
const KernelTable* avx2_kernels();

/// Runtime-selected table: AVX2 when the CPU supports it, else scalar.
/// GMR_KERNELS=scalar|avx2 in the environment forces a variant (falls back
/// to scalar when the forced variant is unavailable).
const KernelTable& active_kernels();

}  // namespace gmr::kernels
