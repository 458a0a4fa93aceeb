// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gmr/model.hpp"
#include "gmr/solutions.hpp"

namespace gmr::verify {

/// Rectangular grid in (t, y) with y = ln x.
struct Grid {
    double t_min, t_max;
    double y_min, y_max;
    int n_t, n_y;

    void validate() const;
    double t(int i) const { return t_min + (t_max - t_min) * i / (n_t - 1.0); }
    double y(int j) const { return y_min + (y_max - y_min) * j / (n_y - 1.0); }
    double dt() const { return (t_max - t_min) / (n_t - 1.0); }
    double dy() const { return (y_max - y_min) / (n_y - 1.0); }
};

/// Normalized PDE residual over a grid: |operator| / (1 + |u|), with the
/// worst offending node.
struct ResidualReport {
    Grid grid;
    double max_residual;
    double mean_residual;
    double worst_t;
    double worst_y;
    long n_checked;   ///< nodes inside the solution's domain
    long n_skipped;   ///< nodes excluded by the domain predicate
};

/// Residual check of a solution surface. Uses closed-form derivatives when
/// the Solution carries them, else 4th-order central differences with
/// relative steps h_t = 5e-3 t, h_x = 1e-3 x (the finite-difference mode is
/// documented to hold 1e-4 rather than the closed-form 1e-7). Nodes outside
/// the domain predicate (or whose FD stencil leaves it) are skipped and
/// counted; a grid with no checkable node throws.
ResidualReport residual_grid(const Solution& f, const ModelParams& p, const Grid& g);

/// Dense solution surface on a grid, row-major by time index.
struct Surface {
    Grid grid;
    std::vector<double> u;  ///< u[i * n_y + j]

    double at(int i, int j) const { return u[static_cast<std::size_t>(i) * grid.n_y + j]; }
};

/// Crank-Nicolson (theta = 1/2) solve of u_t = a u_yy + b(y) u_y + c(y) u on
/// the grid, second order in dt and dy. `initial` supplies u(t_min, y_j)
/// (size n_y); the boundary callables supply the manufactured y_min / y_max
/// rows as functions of t.
Surface cn_solve(const ModelParams& p, const Grid& g, const std::vector<double>& initial,
                 const std::function<double(double)>& boundary_lo,
                 const std::function<double(double)>& boundary_hi);

/// Write a surface as CSV with header "t,y,u", sorted by (t, y).
void write_surface_csv(const Surface& s, const std::string& path);

/// Monte Carlo configuration for the Feynman-Kac semigroup check.
struct McConfig {
    long n_paths = 100000;   ///< >= 1000
    int n_steps = 200;       ///< >= 50
    double horizon = 0.05;   ///< propagation interval
    std::uint64_t seed = 0;
    bool antithetic = false;

    void validate() const;
};

struct McEstimate {
    double value;
    double std_error;
    long n_effective;
};

struct SemigroupReport {
    double closed_form;
    McEstimate mc;
    double z;  ///< (mc - closed_form) / std_error
};

/// Checks the Markov/Feynman-Kac semigroup identity for the equation:
///   f(t0 + D, x0) = E[ exp(int_0^D lambda X_s^2 ds) * f(t0, X_D) ],
/// simulating Y = ln X by Euler-Maruyama with the trapezoid rule for the
/// exponent. Path blow-up (|Y| > 50) throws "functional divergence".
/// Identical (seed, config) gives a bit-identical estimate.
SemigroupReport mc_semigroup_check(const ModelParams& p, const Solution& f, double t0,
                                   double horizon, double x0, const McConfig& cfg);

}  // namespace gmr::verify
