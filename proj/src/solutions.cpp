// SPDX-License-Identifier: Apache-2.0
#include "gmr/solutions.hpp"

#include <cmath>
#include <limits>

#include "gmr/specfun.hpp"

namespace gmr {

namespace {

constexpr double kTMin = 1e-6;

struct FamilyMeta {
    FamilyId id;
    const char* name;
};

constexpr FamilyMeta kFamilies[] = {
    {FamilyId::Inv1, "Inv1"},         {FamilyId::Inv2, "Inv2"},
    {FamilyId::Inv3, "Inv3"},         {FamilyId::Inv4Exp, "Inv4_exp"},
    {FamilyId::Inv5, "Inv5"},         {FamilyId::PcfUV, "PcfUV"},
    {FamilyId::PcfW, "PcfW"},         {FamilyId::AiryPlus, "AiryPlus"},
    {FamilyId::AiryMinus, "AiryMinus"}, {FamilyId::ExpAtPos, "ExpAt_pos"},
    {FamilyId::ExpAtZero, "ExpAt_zero"}, {FamilyId::ExpAtNeg, "ExpAt_neg"},
};

}  // namespace

const char* family_name(FamilyId id) {
    for (const auto& m : kFamilies)
        if (m.id == id) return m.name;
    throw domain_error("unknown family id");
}

FamilyId family_from_name(const std::string& name) {
    for (const auto& m : kFamilies)
        if (name == m.name) return m.id;
    throw domain_error("unknown family name: " + name);
}

bool SolutionFamily::uses_a() const {
    switch (family) {
        case FamilyId::PcfUV:
        case FamilyId::PcfW:
        case FamilyId::ExpAtPos:
        case FamilyId::ExpAtZero:
        case FamilyId::ExpAtNeg:
            return true;
        default:
            return false;
    }
}

bool SolutionFamily::single_constant() const {
    return family == FamilyId::Inv4Exp || family == FamilyId::Inv5;
}

double SolutionFamily::t_min() const {
    switch (family) {
        case FamilyId::Inv2:
        case FamilyId::Inv3:
        case FamilyId::Inv5:
        case FamilyId::PcfUV:
            return kTMin;
        default:
            return -std::numeric_limits<double>::infinity();
    }
}

void SolutionFamily::validate() const {
    params.validate();
    if (!params.symmetric_case())
        throw domain_error(
            "family requires the symmetric case: alpha = 0 and lambda = k^2/(2 sigma^2)");
    if (!(std::isfinite(c1) && std::isfinite(c2) && std::isfinite(a)))
        throw domain_error("family constants must be finite");
    const double disc = params.sigma * params.sigma + 8.0 * a;
    switch (family) {
        case FamilyId::ExpAtPos:
            if (!(disc > 0.0)) throw domain_error("sigma^2 + 8a must be > 0 for ExpAt_pos");
            break;
        case FamilyId::ExpAtZero:
            if (!(std::abs(disc) <= 1e-10))
                throw domain_error("|sigma^2 + 8a| must be <= 1e-10 for ExpAt_zero");
            break;
        case FamilyId::ExpAtNeg:
            if (!(disc < 0.0)) throw domain_error("sigma^2 + 8a must be < 0 for ExpAt_neg");
            break;
        default:
            break;
    }
}

bool SolutionFamily::in_domain(double t, double x) const noexcept {
    return std::isfinite(t) && std::isfinite(x) && x > 0.0 && t >= t_min();
}

namespace {

void check_point(const SolutionFamily& f, double t, double x) {
    if (!(std::isfinite(t) && std::isfinite(x)))
        throw domain_error("(t, x) must be finite");
    if (!(x > 0.0)) throw domain_error("x must be > 0");
    if (t < f.t_min())
        throw domain_error(std::string("t must be >= 1e-6 for family ") +
                           family_name(f.family) + " (singular at t = 0)");
}

/// Every family is written as u = e^{E(t,x)} G(xi(t,x)) with G'' = Q G + R G'.
/// The prefactor partials and similarity-variable partials below are the only
/// hand-derived algebra; the assembly in eval_derivs is generic and the PDE
/// residual property tests adjudicate both.
struct Scheme {
    double E, Et, Ex, Exx;
    double xi, xit, xix, xixx;
    double G, Gp;
    double Q = 0.0, R = 0.0;
};

Scheme make_scheme(const SolutionFamily& f, double t, double x) {
    const double k = f.params.k;
    const double sig = f.params.sigma;
    const double s2 = sig * sig;
    const double K = k / s2;
    const double L = std::log(x);
    const double c1 = f.c1, c2 = f.c2;

    Scheme s{};
    switch (f.family) {
        case FamilyId::Inv1: {
            s.E = K * x;
            s.Et = 0.0;
            s.Ex = K;
            s.Exx = 0.0;
            s.xi = x;
            s.xit = 0.0;
            s.xix = 1.0;
            s.xixx = 0.0;
            s.G = c1 + c2 * s.xi;
            s.Gp = c2;
            break;
        }
        case FamilyId::Inv4Exp: {
            s.E = K * x;
            s.Ex = K;
            s.G = c1;
            s.Gp = 0.0;
            break;
        }
        case FamilyId::Inv2: {
            const double rt = std::sqrt(t);
            s.E = 0.5 * L + K * x - s2 * t / 8.0;
            s.Et = -s2 / 8.0;
            s.Ex = 0.5 / x + K;
            s.Exx = -0.5 / (x * x);
            s.xi = L / rt;
            s.xit = -0.5 * L / (t * rt);
            s.xix = 1.0 / (x * rt);
            s.xixx = -1.0 / (x * x * rt);
            s.G = c1 * specfun::gauss_integral(s.xi, sig) + c2;
            s.Gp = c1 * std::exp(-s.xi * s.xi / (2.0 * s2));
            s.R = -s.xi / s2;
            break;
        }
        case FamilyId::Inv3:
        case FamilyId::Inv5: {
            s.E = -0.5 * std::log(t) + 0.5 * L + K * x - s2 * t / 8.0
                - L * L / (2.0 * s2 * t);
            s.Et = -0.5 / t - s2 / 8.0 + L * L / (2.0 * s2 * t * t);
            s.Ex = 0.5 / x + K - L / (s2 * t * x);
            s.Exx = -0.5 / (x * x) - (1.0 - L) / (s2 * t * x * x);
            if (f.family == FamilyId::Inv3) {
                s.xi = L / t;
                s.xit = -L / (t * t);
                s.xix = 1.0 / (t * x);
                s.xixx = -1.0 / (t * x * x);
                s.G = c1 + c2 * s.xi;
                s.Gp = c2;
            } else {
                s.G = c1;
                s.Gp = 0.0;
            }
            break;
        }
        case FamilyId::PcfUV: {
            const double nu = 2.0 * f.a + 0.5;
            const double rt = std::sqrt(t);
            s.E = f.a * std::log(t) + 0.5 * L + K * x - s2 * t / 8.0
                - L * L / (4.0 * s2 * t);
            s.Et = f.a / t - s2 / 8.0 + L * L / (4.0 * s2 * t * t);
            s.Ex = 0.5 / x + K - L / (2.0 * s2 * t * x);
            s.Exx = -0.5 / (x * x) - (1.0 - L) / (2.0 * s2 * t * x * x);
            s.xi = L / (sig * rt);
            s.xit = -0.5 * L / (sig * t * rt);
            s.xix = 1.0 / (sig * rt * x);
            s.xixx = -1.0 / (sig * rt * x * x);
            const auto p = specfun::pcf_u_v(nu, s.xi);
            s.G = c1 * p.u + c2 * p.v;
            s.Gp = c1 * p.du + c2 * p.dv;
            s.Q = s.xi * s.xi / 4.0 + nu;
            break;
        }
        case FamilyId::PcfW: {
            const double b = (s2 + 8.0 * f.a) / 8.0;
            const double opt2 = 1.0 + t * t;
            const double rq = std::sqrt(opt2);
            const double sq2 = std::sqrt(2.0);
            s.E = -0.25 * std::log(opt2) + 0.5 * L + K * x - s2 * t / 8.0
                + b * std::atan(t) - t * L * L / (2.0 * s2 * opt2);
            s.Et = -0.5 * t / opt2 - s2 / 8.0 + b / opt2
                 - L * L * (1.0 - t * t) / (2.0 * s2 * opt2 * opt2);
            s.Ex = 0.5 / x + K - t * L / (s2 * opt2 * x);
            s.Exx = -0.5 / (x * x) - t * (1.0 - L) / (s2 * opt2 * x * x);
            s.xi = sq2 * L / (sig * rq);
            s.xit = -sq2 * L * t / (sig * opt2 * rq);
            s.xix = sq2 / (sig * rq * x);
            s.xixx = -sq2 / (sig * rq * x * x);
            const auto w = specfun::pcf_w(b, s.xi);
            s.G = c1 * w.w_plus + c2 * w.w_minus;
            s.Gp = c1 * w.dw_plus - c2 * w.dw_minus;
            s.Q = b - s.xi * s.xi / 4.0;
            break;
        }
        case FamilyId::AiryPlus:
        case FamilyId::AiryMinus: {
            const double sgn = (f.family == FamilyId::AiryPlus) ? 1.0 : -1.0;
            const double c4 = std::pow(4.0 * sig, -4.0 / 3.0);
            s.E = 0.5 * L + K * x + t * t * t / (3.0 * s2) - sgn * t * L / s2;
            s.Et = t * t / s2 - sgn * L / s2;
            s.Ex = 0.5 / x + K - sgn * t / (s2 * x);
            s.Exx = -0.5 / (x * x) + sgn * t / (s2 * x * x);
            s.xi = c4 * (s2 * s2 - sgn * 8.0 * L + 4.0 * t * t);
            s.xit = 8.0 * c4 * t;
            s.xix = -sgn * 8.0 * c4 / x;
            s.xixx = sgn * 8.0 * c4 / (x * x);
            const auto ar = specfun::airy(s.xi);
            s.G = c1 * ar.ai + c2 * ar.bi;
            s.Gp = c1 * ar.dai + c2 * ar.dbi;
            s.Q = s.xi;
            break;
        }
        case FamilyId::ExpAtPos:
        case FamilyId::ExpAtZero:
        case FamilyId::ExpAtNeg: {
            s.E = 0.5 * L + K * x + f.a * t;
            s.Et = f.a;
            s.Ex = 0.5 / x + K;
            s.Exx = -0.5 / (x * x);
            s.xi = L;
            s.xit = 0.0;
            s.xix = 1.0 / x;
            s.xixx = -1.0 / (x * x);
            const double disc = s2 + 8.0 * f.a;
            if (f.family == FamilyId::ExpAtPos) {
                const double p = std::sqrt(disc) / (2.0 * sig);
                const double ep = std::exp(p * s.xi), em = std::exp(-p * s.xi);
                s.G = c1 * ep + c2 * em;
                s.Gp = p * (c1 * ep - c2 * em);
                s.Q = p * p;
            } else if (f.family == FamilyId::ExpAtZero) {
                s.G = c1 + c2 * s.xi;
                s.Gp = c2;
            } else {
                const double w = std::sqrt(-disc) / (2.0 * sig);
                const double cw = std::cos(w * s.xi), sw = std::sin(w * s.xi);
                s.G = c1 * cw + c2 * sw;
                s.Gp = w * (-c1 * sw + c2 * cw);
                s.Q = -w * w;
            }
            break;
        }
    }
    return s;
}

}  // namespace

double eval(const SolutionFamily& f, double t, double x) {
    f.validate();
    check_point(f, t, x);
    const Scheme s = make_scheme(f, t, x);
    return std::exp(s.E) * s.G;
}

PdeDerivs eval_derivs(const SolutionFamily& f, double t, double x) {
    f.validate();
    check_point(f, t, x);
    const Scheme s = make_scheme(f, t, x);
    const double eE = std::exp(s.E);
    const double Gpp = s.Q * s.G + s.R * s.Gp;
    PdeDerivs d;
    d.u = eE * s.G;
    d.u_t = eE * (s.Et * s.G + s.Gp * s.xit);
    d.u_x = eE * (s.Ex * s.G + s.Gp * s.xix);
    d.u_xx = eE * ((s.Exx + s.Ex * s.Ex) * s.G
                   + (2.0 * s.Ex * s.xix + s.xixx) * s.Gp + s.xix * s.xix * Gpp);
    return d;
}

double reduced_ode_residual(const SolutionFamily& f, double sim_var) {
    f.validate();
    if (!std::isfinite(sim_var)) throw domain_error("similarity variable must be finite");
    const double k = f.params.k;
    const double sig = f.params.sigma;
    const double s2 = sig * sig;
    const double K = k / s2;
    const double c1 = f.c1, c2 = f.c2;

    switch (f.family) {
        case FamilyId::Inv1: {
            // sigma^2 f_xx - 2k f_x + (k^2/sigma^2) f = 0 on f = (c1 + c2 x) e^{Kx}
            const double x = sim_var;
            if (!(x > 0.0)) throw domain_error("similarity variable must be > 0 for Inv1");
            const double e = std::exp(K * x);
            const double fv = (c1 + c2 * x) * e;
            const double fp = (c2 + (c1 + c2 * x) * K) * e;
            const double fpp = (2.0 * c2 * K + (c1 + c2 * x) * K * K) * e;
            return s2 * fpp - 2.0 * k * fp + K * k * fv;
        }
        case FamilyId::Inv2: {
            // sigma^2 f_yy + y f_y = 0 on f = c1 G(y) + c2
            const double y = sim_var;
            const double gp = c1 * std::exp(-y * y / (2.0 * s2));
            const double gpp = -(y / s2) * gp;
            return s2 * gpp + y * gp;
        }
        case FamilyId::Inv3: {
            // z^2 f_zz - z f_z + (3/4) f = 0 on f = c1 z^{1/2} + c2 z^{3/2}
            const double z = sim_var;
            if (!(z > 0.0)) throw domain_error("similarity variable must be > 0 for Inv3");
            const double rz = std::sqrt(z);
            const double fv = c1 * rz + c2 * z * rz;
            const double fp = 0.5 * c1 / rz + 1.5 * c2 * rz;
            const double fpp = -0.25 * c1 / (z * rz) + 0.75 * c2 / rz;
            return z * z * fpp - z * fp + 0.75 * fv;
        }
        case FamilyId::Inv4Exp:
            return 0.0;  // no one-dimensional reduction; reduced equation is f_t = 0
        case FamilyId::Inv5: {
            // f_t + (sigma^2/8 + 1/(2t)) f = 0 on f = c1 t^{-1/2} e^{-sigma^2 t/8}
            const double t = sim_var;
            if (!(t > 0.0)) throw domain_error("similarity variable must be > 0 for Inv5");
            const double fv = c1 * std::exp(-s2 * t / 8.0) / std::sqrt(t);
            const double ft = fv * (-0.5 / t - s2 / 8.0);
            return ft + (s2 / 8.0 + 0.5 / t) * fv;
        }
        case FamilyId::PcfUV: {
            // sigma^2 f_yy + y f_y - 2a f = 0 on f = e^{-y^2/(4 sigma^2)} g(y/sigma)
            const double y = sim_var;
            const double nu = 2.0 * f.a + 0.5;
            const double xi = y / sig;
            const auto p = specfun::pcf_u_v(nu, xi);
            const double g = c1 * p.u + c2 * p.v;
            const double gp = c1 * p.du + c2 * p.dv;
            const double gpp = (xi * xi / 4.0 + nu) * g;
            const double e = std::exp(-y * y / (4.0 * s2));
            const double fv = e * g;
            const double fp = e * (-y / (2.0 * s2) * g + gp / sig);
            const double fpp = e * ((y * y / (4.0 * s2 * s2) - 0.5 / s2) * g
                                    - y / (s2 * sig) * gp + gpp / s2);
            return s2 * fpp + y * fp - 2.0 * f.a * fv;
        }
        case FamilyId::PcfW: {
            // sigma^2 f_ss + (s^2/sigma^2 - (sigma^2+8a)/4) f = 0
            const double sv = sim_var;
            const double b = (s2 + 8.0 * f.a) / 8.0;
            const double c = std::sqrt(2.0) / sig;
            const double xi = c * sv;
            const auto w = specfun::pcf_w(b, xi);
            const double fv = c1 * w.w_plus + c2 * w.w_minus;
            const double fpp = c * c * (b - xi * xi / 4.0) * fv;
            return s2 * fpp + (sv * sv / s2 - (s2 + 8.0 * f.a) / 4.0) * fv;
        }
        case FamilyId::AiryPlus: {
            // sigma^2 f_vv - sigma^2 f_v + (2/sigma^2) v f = 0 on f = e^{v/2} g(zeta)
            const double v = sim_var;
            const double c4 = std::pow(4.0 * sig, -4.0 / 3.0);
            const double zeta = c4 * (s2 * s2 - 8.0 * v);
            const double zp = -8.0 * c4;
            const auto ar = specfun::airy(zeta);
            const double g = c1 * ar.ai + c2 * ar.bi;
            const double gp = c1 * ar.dai + c2 * ar.dbi;
            const double gpp = zeta * g;
            const double e = std::exp(0.5 * v);
            const double fv = e * g;
            const double fp = e * (0.5 * g + gp * zp);
            const double fpp = e * (0.25 * g + gp * zp + gpp * zp * zp);
            return s2 * fpp - s2 * fp + 2.0 * v / s2 * fv;
        }
        case FamilyId::AiryMinus: {
            // sigma^2 f_vv - (2v/sigma^2 + sigma^2/4) f = 0 on f = g(zeta)
            const double v = sim_var;
            const double c4 = std::pow(4.0 * sig, -4.0 / 3.0);
            const double zeta = c4 * (s2 * s2 + 8.0 * v);
            const double zp = 8.0 * c4;
            const auto ar = specfun::airy(zeta);
            const double g = c1 * ar.ai + c2 * ar.bi;
            const double gpp = zeta * g;
            return s2 * gpp * zp * zp - (2.0 * v / s2 + s2 / 4.0) * g;
        }
        case FamilyId::ExpAtPos:
        case FamilyId::ExpAtZero:
        case FamilyId::ExpAtNeg: {
            // sigma^2 x^2 f_xx - 2k x^2 f_x + (k^2/sigma^2) x^2 f = 2a f
            // on f = x^{1/2} e^{Kx} g(ln x)
            const double x = sim_var;
            if (!(x > 0.0)) throw domain_error("similarity variable must be > 0 for ExpAt");
            const double L = std::log(x);
            const double disc = s2 + 8.0 * f.a;
            double g, gp, gpp;
            if (f.family == FamilyId::ExpAtPos) {
                const double p = std::sqrt(disc) / (2.0 * sig);
                g = c1 * std::exp(p * L) + c2 * std::exp(-p * L);
                gp = p * (c1 * std::exp(p * L) - c2 * std::exp(-p * L));
                gpp = p * p * g;
            } else if (f.family == FamilyId::ExpAtZero) {
                g = c1 + c2 * L;
                gp = c2;
                gpp = 0.0;
            } else {
                const double w = std::sqrt(-disc) / (2.0 * sig);
                g = c1 * std::cos(w * L) + c2 * std::sin(w * L);
                gp = w * (-c1 * std::sin(w * L) + c2 * std::cos(w * L));
                gpp = -w * w * g;
            }
            const double e = std::exp(K * x);
            const double rx = std::sqrt(x);
            const double A = (0.5 + K * x) * g + gp;
            const double fv = rx * g * e;
            const double fp = e * A / rx;
            const double fpp = e / rx * (K * A - A / (2.0 * x)
                                         + K * g + ((0.5 + K * x) * gp + gpp) / x);
            return s2 * x * x * fpp - 2.0 * k * x * x * fp + K * k * x * x * fv
                 - 2.0 * f.a * fv;
        }
    }
    throw domain_error("unknown family id");
}

Solution as_solution(const SolutionFamily& f) {
    f.validate();
    return Solution{
        [f](double t, double x) { return eval(f, t, x); },
        [f](double t, double x) { return eval_derivs(f, t, x); },
        [f](double t, double x) { return f.in_domain(t, x); },
    };
}

}  // namespace gmr
