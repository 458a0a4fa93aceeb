// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

#include "gmr/errors.hpp"
#include "gmr/model.hpp"

namespace gmr {

/// The closed-form invariant solution families of the symmetric-case
/// equation. Each id names one variant; the three ExpAt ids are the
/// branches of the same exponential-in-time family split on the sign
/// of sigma^2 + 8a.
enum class FamilyId {
    Inv1,       ///< (c1 + c2 x) e^{kx/sigma^2}, steady
    Inv2,       ///< error-function family in y = t^{-1/2} ln x
    Inv3,       ///< t^{-1/2} family in z = t^{-1} ln x
    Inv4Exp,    ///< c e^{kx/sigma^2} (redundant with Inv1, c2 = 0)
    Inv5,       ///< c t^{-1/2} x^{1/2} e^{...} single-constant family
    PcfUV,      ///< parabolic cylinder U/V family, parameter a
    PcfW,       ///< oscillatory parabolic cylinder W pair, parameter a
    AiryPlus,   ///< Airy family with similarity variable ln x - t^2/2
    AiryMinus,  ///< Airy family with similarity variable ln x + t^2/2
    ExpAtPos,   ///< e^{at} branch, sigma^2 + 8a > 0
    ExpAtZero,  ///< e^{at} branch, sigma^2 + 8a = 0
    ExpAtNeg,   ///< e^{at} branch, sigma^2 + 8a < 0
};

const char* family_name(FamilyId id);
FamilyId family_from_name(const std::string& name);

/// u and its closed-form partial derivatives at a point.
struct PdeDerivs {
    double u;
    double u_t;
    double u_x;
    double u_xx;
};

/// A tagged closed-form solution: family id, free constants, model
/// parameters (which must satisfy symmetric_case()). Families with a single
/// free constant c store it in c1. The parameter a is read by PcfUV, PcfW
/// and the ExpAt branches only.
struct SolutionFamily {
    FamilyId family;
    double c1 = 1.0;
    double c2 = 0.0;
    double a = 0.0;
    ModelParams params;

    bool uses_a() const;
    bool single_constant() const;
    /// Least admissible t (1e-6 for families singular at t = 0, else -inf).
    double t_min() const;
    /// Throws domain_error naming the violated constraint.
    void validate() const;
    /// True when (t, x) lies in the family's domain.
    bool in_domain(double t, double x) const noexcept;
};

/// Closed-form value. Throws domain_error naming the violated constraint
/// when (t, x) leaves the family domain.
double eval(const SolutionFamily& f, double t, double x);

/// Hand-derived closed-form derivatives; the u component matches eval
/// exactly (same code path).
PdeDerivs eval_derivs(const SolutionFamily& f, double t, double x);

/// Residual of the family's reduced ODE on its own profile function at the
/// given similarity-variable value. Near zero for a correct catalog entry;
/// identically zero for Inv4Exp (no one-dimensional reduction).
double reduced_ode_residual(const SolutionFamily& f, double sim_var);

/// A solution surface as an evaluable bundle: value, optional closed-form
/// derivatives, and a domain predicate. Immutable closures; safe to share
/// across threads.
struct Solution {
    std::function<double(double t, double x)> value;
    std::function<PdeDerivs(double t, double x)> derivs;  // may be empty
    std::function<bool(double t, double x)> in_domain;    // never empty
};

/// Wrap a catalog family as a Solution.
Solution as_solution(const SolutionFamily& f);

}  // namespace gmr
