// SPDX-License-Identifier: Apache-2.0
#include "gmr/transform.hpp"

#include <cmath>

namespace gmr {

namespace {

struct TxPair {
    double t;
    double x;
};

// (t, x) part of the group action. The u-factor is handled separately so the
// inverse map can reuse this with -eps.
TxPair map_tx(int gen, double eps, const ModelParams& p, double t, double x) {
    (void)p;
    if (!(x > 0.0)) throw domain_error("x must be > 0");
    const double L = std::log(x);
    switch (gen) {
        case 1: return {t + eps, x};
        case 2: return {std::exp(eps) * t, std::exp(std::exp(0.5 * eps) * L)};
        case 3: {
            const double d = 1.0 - eps * t;
            if (!(d > 0.0))
                throw domain_error("finite-time singularity of projective map");
            return {t / d, std::exp(L / d)};
        }
        case 4: return {t, std::exp(eps) * x};
        case 5: return {t, std::exp(eps * t) * x};
        case 6: return {t, x};
        default: throw domain_error("generator index must be in 1..6");
    }
}

// Multiplier applied to u when the point (t, x, u) is moved by G_eps.
double u_factor(int gen, double eps, const ModelParams& p, double t, double x) {
    const double sig = p.sigma;
    const double s2 = sig * sig;
    const double K = p.k / s2;
    const double L = std::log(x);
    switch (gen) {
        case 1: return 1.0;
        case 2: {
            const double xt = std::exp(std::exp(0.5 * eps) * L);
            return std::exp(K * (xt - x) + 0.5 * (std::exp(0.5 * eps) - 1.0) * L
                            - s2 / 8.0 * t * (std::exp(eps) - 1.0));
        }
        case 3: {
            const double d = 1.0 - eps * t;
            if (!(d > 0.0))
                throw domain_error("finite-time singularity of projective map");
            const double xt = std::exp(L / d);
            // Written with eps/(1-eps t) factored so the expression stays
            // regular at t = 0; the middle group enters with a minus sign
            // (fixed against the integrated V3 flow).
            return std::exp(K * (xt - x)
                            - eps / d * (L * L / (2.0 * s2) - 0.5 * t * L + s2 * t * t / 8.0)
                            + 0.5 * std::log(d));
        }
        case 4: return std::exp(K * x * (std::exp(eps) - 1.0));
        case 5:
            return std::exp(K * x * (std::exp(eps * t) - 1.0) - eps * eps * t / (2.0 * s2)
                            - eps / s2 * L + 0.5 * eps * t);
        case 6: return std::exp(eps);
        default: throw domain_error("generator index must be in 1..6");
    }
}

}  // namespace

void PointMap::validate() const {
    if (generator < 1 || generator > 6)
        throw domain_error("generator index must be in 1..6");
    if (!std::isfinite(epsilon)) throw domain_error("epsilon must be finite");
    params.validate();
    if (!params.symmetric_case())
        throw domain_error(
            "point maps require the symmetric case: alpha = 0 and lambda = k^2/(2 sigma^2)");
}

PdePoint apply_point(const PointMap& m, const PdePoint& p) {
    m.validate();
    if (!(std::isfinite(p.t) && std::isfinite(p.x) && std::isfinite(p.u)))
        throw domain_error("point coordinates must be finite");
    const TxPair tx = map_tx(m.generator, m.epsilon, m.params, p.t, p.x);
    const double f = u_factor(m.generator, m.epsilon, m.params, p.t, p.x);
    return {tx.t, tx.x, p.u * f};
}

PdePoint invert_tx(const PointMap& m, double t, double x) {
    m.validate();
    const TxPair tx = map_tx(m.generator, -m.epsilon, m.params, t, x);
    return {tx.t, tx.x, 0.0};
}

Solution apply_to_solution(const PointMap& m, const Solution& f) {
    m.validate();
    PointMap map = m;
    Solution g;
    g.value = [map, f](double t, double x) {
        const PdePoint pre = invert_tx(map, t, x);
        const PdePoint moved =
            apply_point(map, {pre.t, pre.x, f.value(pre.t, pre.x)});
        return moved.u;
    };
    auto value = g.value;
    g.in_domain = [map, f, value](double t, double x) {
        if (!(x > 0.0) || !std::isfinite(t)) return false;
        if (map.generator == 3 && !(1.0 + map.epsilon * t > 0.0)) return false;
        const PdePoint pre = invert_tx(map, t, x);
        if (!(std::isfinite(pre.t) && pre.x > 0.0 && std::isfinite(pre.x)
              && f.in_domain(pre.t, pre.x)))
            return false;
        // The image can leave double range (or a special-function window)
        // even where the preimage is fine; the numeric domain excludes that.
        try {
            return std::isfinite(value(t, x));
        } catch (const domain_error&) {
            return false;
        }
    };
    return g;
}

Solution superpose(const Solution& f, const Solution& g, double eps) {
    Solution r;
    r.value = [f, g, eps](double t, double x) {
        return f.value(t, x) + eps * g.value(t, x);
    };
    if (f.derivs && g.derivs) {
        auto fd = f.derivs;
        auto gd = g.derivs;
        r.derivs = [fd, gd, eps](double t, double x) {
            const PdeDerivs a = fd(t, x);
            const PdeDerivs b = gd(t, x);
            return PdeDerivs{a.u + eps * b.u, a.u_t + eps * b.u_t,
                             a.u_x + eps * b.u_x, a.u_xx + eps * b.u_xx};
        };
    }
    r.in_domain = [f, g](double t, double x) {
        return f.in_domain(t, x) && g.in_domain(t, x);
    };
    return r;
}

namespace {

// Infinitesimal generator components in (t, L = ln x, u) coordinates:
// dt/de = tau, dL/de = xi/x, du/de = phi.
struct FlowRhs {
    double dt;
    double dL;
    double du;
};

FlowRhs vector_field(int gen, const ModelParams& p, double t, double L, double u) {
    const double s2 = p.sigma * p.sigma;
    const double K = p.k / s2;
    const double x = std::exp(L);
    switch (gen) {
        case 1: return {1.0, 0.0, 0.0};
        case 2:
            return {t, 0.5 * L, (0.5 * K * x * L + 0.25 * L - s2 / 8.0 * t) * u};
        case 3:
            return {t * t, t * L,
                    (K * t * x * L - L * L / (2.0 * s2) + 0.5 * t * L
                     - s2 / 8.0 * t * t - 0.5 * t) * u};
        case 4: return {0.0, 1.0, K * x * u};
        case 5: return {0.0, t, (K * t * x - L / s2 + 0.5 * t) * u};
        case 6: return {0.0, 0.0, u};
        default: throw domain_error("generator index must be in 1..6");
    }
}

}  // namespace

PdePoint flow_point(int generator, double eps, const PdePoint& p, const ModelParams& params) {
    PointMap guard{generator, eps, params};
    guard.validate();
    if (!(p.x > 0.0)) throw domain_error("x must be > 0");

    // Integrate (t, ln x, w) where w accumulates the u-multiplier exponent;
    // the u coordinate enters its own equation linearly, so working with the
    // log-factor keeps the system non-stiff even where the factor is huge.
    const int n = std::max(2048, static_cast<int>(std::ceil(4096.0 * std::abs(eps))));
    const double h = eps / n;
    double t = p.t, L = std::log(p.x), w = 0.0;
    for (int i = 0; i < n; ++i) {
        auto f = [&](double tt, double ll, double ww) {
            (void)ww;
            const FlowRhs r = vector_field(generator, params, tt, ll, 1.0);
            return FlowRhs{r.dt, r.dL, r.du};  // du here is d(log-factor)/de
        };
        const FlowRhs k1 = f(t, L, w);
        const FlowRhs k2 = f(t + 0.5 * h * k1.dt, L + 0.5 * h * k1.dL, w + 0.5 * h * k1.du);
        const FlowRhs k3 = f(t + 0.5 * h * k2.dt, L + 0.5 * h * k2.dL, w + 0.5 * h * k2.du);
        const FlowRhs k4 = f(t + h * k3.dt, L + h * k3.dL, w + h * k3.du);
        t += h / 6.0 * (k1.dt + 2.0 * k2.dt + 2.0 * k3.dt + k4.dt);
        L += h / 6.0 * (k1.dL + 2.0 * k2.dL + 2.0 * k3.dL + k4.dL);
        w += h / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du);
        if (!(std::isfinite(t) && std::isfinite(L) && std::isfinite(w))
            || std::abs(t) > 1e8 || std::abs(L) > 1e4)
            throw domain_error("flow integration leaves the domain");
    }
    return {t, std::exp(L), p.u * std::exp(w)};
}

}  // namespace gmr
