// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gmr/model.hpp"
#include "gmr/solutions.hpp"

namespace gmr {

/// One-parameter point symmetry map G_i with parameter epsilon, acting on
/// (t, x, u) space. Requires the symmetric case. G3 is a projective time map
/// defined only where 1 - eps*t > 0; G2 and the solution action require
/// x > 0 throughout.
struct PointMap {
    int generator;  ///< 1..6
    double epsilon;
    ModelParams params;

    void validate() const;
};

/// The transformed point per the closed-form group action. Throws
/// domain_error "finite-time singularity of projective map" when G3 leaves
/// its domain.
PdePoint apply_point(const PointMap& m, const PdePoint& p);

/// Preimage of the (t, x) part of the map (the closed-form inverse; for a
/// one-parameter group this is the map at -epsilon).
PdePoint invert_tx(const PointMap& m, double t, double x);

/// Pullback action on solution surfaces: (g.f)(T, X) = u-part of g applied
/// at the preimage of (T, X). Maps solutions of the equation into other
/// solutions. The returned Solution carries no closed-form derivatives.
Solution apply_to_solution(const PointMap& m, const Solution& f);

/// Superposition map G_phi restricted to catalog surfaces: f + eps * g.
Solution superpose(const Solution& f, const Solution& g, double eps);

/// Numerically integrated flow of the generating vector field V_i from the
/// given point, an independent oracle for the closed forms; agrees with
/// apply_point to ~1e-8 relative. Throws when the integration leaves the
/// domain (projective blow-up, x collapse).
PdePoint flow_point(int generator, double eps, const PdePoint& p, const ModelParams& params);

}  // namespace gmr
