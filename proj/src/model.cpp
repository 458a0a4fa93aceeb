// SPDX-License-Identifier: Apache-2.0
#include "gmr/model.hpp"

#include <cmath>

namespace gmr {

void ModelParams::validate() const {
    if (!(std::isfinite(k) && std::isfinite(alpha) && std::isfinite(sigma) && std::isfinite(lambda)))
        throw domain_error("model parameters must be finite");
    if (!(k > 0.0)) throw domain_error("k must be > 0");
    if (!(sigma > 0.0)) throw domain_error("sigma must be > 0");
    if (!(alpha >= 0.0)) throw domain_error("alpha must be >= 0");
}

bool ModelParams::symmetric_case() const noexcept {
    const double ref = k * k / (2.0 * sigma * sigma);
    return alpha == 0.0 && std::abs(lambda - ref) <= 1e-12 * ref;
}

ModelParams ModelParams::symmetric(double k, double sigma) {
    ModelParams p{k, 0.0, sigma, k * k / (2.0 * sigma * sigma)};
    p.validate();
    return p;
}

double pde_operator(const ModelParams& p, double u, double u_t, double u_x,
                    double u_xx, double t, double x) {
    (void)t;  // the operator has no explicit t dependence
    if (!(x > 0.0)) throw domain_error("x must be > 0");
    if (!(std::isfinite(u) && std::isfinite(u_t) && std::isfinite(u_x) && std::isfinite(u_xx)))
        throw domain_error("pde_operator inputs must be finite");
    return 0.5 * p.sigma * p.sigma * x * x * u_xx + p.k * x * (p.alpha - x) * u_x
         + p.lambda * x * x * u - u_t;
}

LogCoeffs to_log_coords(const ModelParams& p, double y) {
    const double ey = std::exp(y);
    return {0.5 * p.sigma * p.sigma,
            p.k * (p.alpha - ey) - 0.5 * p.sigma * p.sigma,
            p.lambda * ey * ey};
}

}  // namespace gmr
