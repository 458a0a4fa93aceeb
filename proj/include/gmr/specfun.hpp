// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gmr/errors.hpp"

namespace gmr::specfun {

/// Value plus an a-posteriori error estimate (propagated truncation bound;
/// an estimate, not a rigorous enclosure).
struct SpecFunResult {
    double value;
    double est_error;
};

/// Euler Gamma via a Lanczos approximation (g = 7, 9 terms) with reflection
/// for z < 1/2. Relative error is well below 1e-12 on [0.1, 30].
/// Throws domain_error at the poles z = 0, -1, -2, ...
double gamma(double z);

/// Reciprocal gamma, 1/Gamma(z). Finite for every real z (zero at the poles
/// of Gamma), computed pole-free via the reflection formula.
double rgamma(double z);

/// Antiderivative of exp(-s^2 / (2 sigma^2)) vanishing at 0:
///   integral_0^y exp(-s^2/(2 sigma^2)) ds = sigma sqrt(pi/2) erf(y/(sigma sqrt 2)).
/// Odd in y. Requires sigma > 0.
double gauss_integral(double y, double sigma);

/// Airy pair on |x| <= 30. Solutions of f'' = x f pinned by
///   Ai(0) = 3^{-2/3}/Gamma(2/3),  Ai'(0) = -3^{-1/3}/Gamma(1/3),
///   Bi(0) = 3^{-1/6}/Gamma(2/3),  Bi'(0) =  3^{1/6}/Gamma(1/3).
/// Maclaurin series inside |x| <= 1, high-order Taylor ODE continuation
/// outward. The decaying branch Ai on x > 5 is continued backward from a
/// seed at x = 34 (its standard large-argument expansion); outward stepping
/// cannot hold a subdominant solution to relative accuracy. Out-of-window
/// arguments throw (accuracy not guaranteed there).
struct AiryResult {
    double ai;
    double dai;
    double bi;
    double dbi;
    double est_error;
};
AiryResult airy(double x);

/// Parabolic cylinder pair U(a, x), V(a, x) solving f'' = (x^2/4 + a) f,
/// DLMF 12.2 normalization:
///   U(a,0)  =  sqrt(pi) 2^{-a/2-1/4} / Gamma(a/2 + 3/4)
///   U'(a,0) = -sqrt(pi) 2^{-a/2+1/4} / Gamma(a/2 + 1/4)
/// and V pinned through V(a,x) = Gamma(a+1/2)/pi [sin(pi a) U(a,x) + U(a,-x)]
/// evaluated at 0. Wronskian U V' - U' V = sqrt(2/pi).
///
/// Window a in [-10, 10], |x| <= 30. The V normalization constants lose
/// precision within ~3e-5 of half-integer a (0*inf limit points of the
/// prefactor); exact half-integers are evaluated by their limits.
struct PcfUvResult {
    double u;
    double du;
    double v;
    double dv;
    double est_error;
};
PcfUvResult pcf_u_v(double a, double x);

/// Oscillatory parabolic cylinder pair W(a, x), W(a, -x) solving
/// f'' = -(x^2/4 - a) f, DLMF 12.14 normalization:
///   W(a,0)  =  2^{-3/4} |Gamma(1/4 + ia/2) / Gamma(3/4 + ia/2)|^{1/2}
///   W'(a,0) = -2^{-1/4} |Gamma(3/4 + ia/2) / Gamma(1/4 + ia/2)|^{1/2}.
/// Wronskian of the pair is 1. Window a in [-10, 10], |x| <= 30.
struct PcfWResult {
    double w_plus;    ///< W(a, x)
    double dw_plus;   ///< d/dx W(a, x)
    double w_minus;   ///< W(a, -x)
    double dw_minus;  ///< d/dx evaluated at -x, i.e. W'(a, -x)
    double est_error;
};
PcfWResult pcf_w(double a, double x);

namespace detail {

/// sin(pi z) / cos(pi z) with argument reduction; exact zeros/ones at
/// (half-)integers.
double sinpi(double z);
double cospi(double z);

/// |Gamma(re + i*im)| via the complex Lanczos sum (requires re > 0).
double gamma_abs(double re, double im);

/// f'' = (q0 + q1 s + q2 s^2) f.
struct OdeQuad {
    double q0, q1, q2;
    double operator()(double s) const { return q0 + s * (q1 + s * q2); }
};

struct OdePair {
    double f;
    double fp;
};

/// Propagate (f, f') of f'' = q(s) f from s = from to s = to by repeated
/// local Taylor expansion (order up to 40, truncation-controlled). max_h
/// caps the step; pass a small value to force multi-step continuation
/// (used by the series/continuation overlap test). Accumulates a truncation
/// estimate into *err_acc when non-null.
OdePair taylor_propagate(const OdeQuad& q, double from, OdePair y, double to,
                         double max_h, double* err_acc);

}  // namespace detail

}  // namespace gmr::specfun
