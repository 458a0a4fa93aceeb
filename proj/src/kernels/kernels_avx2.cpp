// SPDX-License-Identifier: Apache-2.0
// AVX2 variants of the batch kernels. This translation unit is compiled with
// -mavx2 -mfma and is only entered after a runtime CPU check.
#include "gmr/kernels.hpp"

#ifdef GMR_HAVE_AVX2_TU

#include <immintrin.h>

#include <cmath>

namespace gmr::kernels {

namespace {

// exp(x) for 4 lanes: Cody-Waite range reduction against ln 2, degree-13
// Taylor polynomial on |r| <= ln(2)/2, exponent reassembled through the
// IEEE-754 bit layout. Arguments are clamped to +-708.
inline __m256d exp4(__m256d x) {
    const __m256d kMax = _mm256_set1_pd(708.0);
    const __m256d kMin = _mm256_set1_pd(-708.0);
    x = _mm256_min_pd(_mm256_max_pd(x, kMin), kMax);

    const __m256d kInvLn2 = _mm256_set1_pd(1.4426950408889634074);
    const __m256d kLn2Hi = _mm256_set1_pd(6.93147180369123816490e-01);
    const __m256d kLn2Lo = _mm256_set1_pd(1.90821492927058770002e-10);

    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, kInvLn2),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, kLn2Hi, x);
    r = _mm256_fnmadd_pd(n, kLn2Lo, r);

    // Horner for 1 + r + r^2/2! + ... + r^13/13!
    const double c[] = {1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0,
                        1.0 / 3628800.0,    1.0 / 362880.0,    1.0 / 40320.0,
                        1.0 / 5040.0,       1.0 / 720.0,       1.0 / 120.0,
                        1.0 / 24.0,         1.0 / 6.0,         0.5};
    __m256d p = _mm256_set1_pd(c[0]);
    for (int i = 1; i < 12; ++i)
        p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(c[i]));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

    // 2^n via the exponent field (|n| <= 1023 after clamping).
    const __m128i ni = _mm256_cvtpd_epi32(n);
    const __m256i nl = _mm256_cvtepi32_epi64(ni);
    const __m256i bias = _mm256_set1_epi64x(1023);
    const __m256i pow2 = _mm256_slli_epi64(_mm256_add_epi64(nl, bias), 52);
    return _mm256_mul_pd(p, _mm256_castsi256_pd(pow2));
}

void exp_batch_avx2(const double* in, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, exp4(_mm256_loadu_pd(in + i)));
    for (; i < n; ++i) {
        double x = in[i];
        if (x > 708.0) x = 708.0;
        if (x < -708.0) x = -708.0;
        out[i] = std::exp(x);
    }
}

std::size_t em_advance_avx2(const EmParams& p, std::span<double> y,
                            std::span<double> integ, const double* normals,
                            std::size_t n_steps) {
    const std::size_t n = y.size();
    const double sdt_s = p.sigma * std::sqrt(p.dt);
    const __m256d dt = _mm256_set1_pd(p.dt);
    const __m256d half_dt = _mm256_set1_pd(0.5 * p.dt);
    const __m256d sdt = _mm256_set1_pd(sdt_s);
    const __m256d kk = _mm256_set1_pd(p.k);
    const __m256d alpha = _mm256_set1_pd(p.alpha);
    const __m256d lambda = _mm256_set1_pd(p.lambda);
    const __m256d half_s2 = _mm256_set1_pd(0.5 * p.sigma * p.sigma);
    const __m256d cap = _mm256_set1_pd(50.0);
    const __m256d sign_mask = _mm256_set1_pd(-0.0);

    std::size_t blown = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d yi = _mm256_loadu_pd(y.data() + i);
        __m256d acc = _mm256_loadu_pd(integ.data() + i);
        __m256d x = exp4(yi);
        __m256d g = _mm256_mul_pd(lambda, _mm256_mul_pd(x, x));
        __m256d bad = _mm256_setzero_pd();
        for (std::size_t s = 0; s < n_steps; ++s) {
            const __m256d z = _mm256_loadu_pd(normals + s * n + i);
            const __m256d drift =
                _mm256_sub_pd(_mm256_mul_pd(kk, _mm256_sub_pd(alpha, x)), half_s2);
            yi = _mm256_add_pd(yi, _mm256_fmadd_pd(drift, dt, _mm256_mul_pd(sdt, z)));
            x = exp4(yi);
            const __m256d gn = _mm256_mul_pd(lambda, _mm256_mul_pd(x, x));
            acc = _mm256_fmadd_pd(half_dt, _mm256_add_pd(g, gn), acc);
            g = gn;
            const __m256d ay = _mm256_andnot_pd(sign_mask, yi);
            bad = _mm256_or_pd(bad, _mm256_cmp_pd(ay, cap, _CMP_GT_OQ));
        }
        _mm256_storeu_pd(y.data() + i, yi);
        _mm256_storeu_pd(integ.data() + i, acc);
        blown += static_cast<std::size_t>(
            __builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(bad))));
    }
    if (i < n) {
        // Remainder lanes go through the scalar reference.
        std::span<double> ty = y.subspan(i);
        std::span<double> ti = integ.subspan(i);
        const std::size_t m = n - i;
        const double half_s2s = 0.5 * p.sigma * p.sigma;
        for (std::size_t j = 0; j < m; ++j) {
            double yj = ty[j];
            double acc = ti[j];
            double xx = std::exp(yj);
            double gg = p.lambda * xx * xx;
            bool bad = false;
            for (std::size_t s = 0; s < n_steps; ++s) {
                const double drift = p.k * (p.alpha - xx) - half_s2s;
                yj += drift * p.dt + sdt_s * normals[s * n + i + j];
                xx = std::exp(yj);
                const double gn = p.lambda * xx * xx;
                acc += 0.5 * p.dt * (gg + gn);
                gg = gn;
                bad = bad || !(std::abs(yj) <= 50.0);
            }
            ty[j] = yj;
            ti[j] = acc;
            blown += bad ? 1 : 0;
        }
    }
    return blown;
}

void tridiag_apply_avx2(std::span<const double> lo, std::span<const double> d,
                        std::span<const double> up, std::span<const double> x,
                        std::span<double> out) {
    const std::size_t n = d.size();
    if (n == 0) return;
    if (n == 1) {
        out[0] = d[0] * x[0];
        return;
    }
    out[0] = d[0] * x[0] + up[0] * x[1];
    std::size_t i = 1;
    for (; i + 5 <= n; i += 4) {
        const __m256d xm = _mm256_loadu_pd(x.data() + i - 1);
        const __m256d xc = _mm256_loadu_pd(x.data() + i);
        const __m256d xp = _mm256_loadu_pd(x.data() + i + 1);
        __m256d r = _mm256_mul_pd(_mm256_loadu_pd(lo.data() + i), xm);
        r = _mm256_fmadd_pd(_mm256_loadu_pd(d.data() + i), xc, r);
        r = _mm256_fmadd_pd(_mm256_loadu_pd(up.data() + i), xp, r);
        _mm256_storeu_pd(out.data() + i, r);
    }
    for (; i + 1 < n; ++i)
        out[i] = lo[i] * x[i - 1] + d[i] * x[i] + up[i] * x[i + 1];
    out[n - 1] = lo[n - 1] * x[n - 2] + d[n - 1] * x[n - 1];
}

const KernelTable kAvx2{"avx2", exp_batch_avx2, em_advance_avx2, tridiag_apply_avx2};

}  // namespace

const KernelTable* avx2_kernels_impl() { return &kAvx2; }

}  // namespace gmr::kernels

#endif  // GMR_HAVE_AVX2_TU
