// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gmr/errors.hpp"

namespace gmr {

/// Coefficients of the geometric mean-reversion model.
///
/// The state process follows dX = k(alpha - X)X dt + sigma X dW and the
/// associated value function solves
///
///   u_t = (1/2) sigma^2 x^2 u_xx + k x (alpha - x) u_x + lambda x^2 u
///
/// with potential c(x) = lambda x^2. All parameters are plain doubles; the
/// struct is an immutable value. Every operation taking a ModelParams is pure.
struct ModelParams {
    double k;       ///< reversion speed (1/time), k > 0
    double alpha;   ///< long-run level (price units), alpha >= 0
    double sigma;   ///< volatility (1/sqrt(time)), sigma > 0
    double lambda;  ///< potential coefficient (1/(time*price^2))

    /// Throws domain_error naming the violated constraint.
    void validate() const;

    /// True iff alpha = 0 and lambda = k^2/(2 sigma^2) to 1e-12 relative.
    /// The lie/transform/solutions modules require this to hold.
    bool symmetric_case() const noexcept;

    /// The lambda that closes the symmetric case for this (k, sigma).
    double symmetric_lambda() const noexcept { return k * k / (2.0 * sigma * sigma); }

    /// Convenience: the symmetric-case parameter set for a given (k, sigma).
    static ModelParams symmetric(double k, double sigma);
};

/// A point of the extended (t, x, u) space. x > 0 strictly (ln x appears
/// throughout); t > 0 is required by families singular at t = 0.
struct PdePoint {
    double t;
    double x;
    double u;
};

/// Residual of the governing equation at (t, x) given u and its partials:
///   (1/2) sigma^2 x^2 u_xx + k x (alpha - x) u_x + lambda x^2 u - u_t.
/// Zero for exact solutions. Throws domain_error on x <= 0 or non-finite
/// inputs.
double pde_operator(const ModelParams& p, double u, double u_t, double u_x,
                    double u_xx, double t, double x);

/// Coefficients of the log-coordinate form u_t = a u_yy + b(y) u_y + c(y) u
/// with y = ln x, evaluated at y. Used by the finite-difference solver.
struct LogCoeffs {
    double a;  ///< (1/2) sigma^2
    double b;  ///< k(alpha - e^y) - (1/2) sigma^2
    double c;  ///< lambda e^{2y}
};

LogCoeffs to_log_coords(const ModelParams& p, double y);

}  // namespace gmr
