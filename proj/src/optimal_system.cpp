// SPDX-License-Identifier: Apache-2.0
#include "gmr/optimal_system.hpp"

#include <cmath>

namespace gmr::lie {

const char* rep_class_name(RepClass c) {
    switch (c) {
        case RepClass::V2_aV6: return "V2_aV6";
        case RepClass::V1pV3_aV6: return "V1pV3_aV6";
        case RepClass::V1pV5: return "V1pV5";
        case RepClass::V1mV5: return "V1mV5";
        case RepClass::V1_aV6: return "V1_aV6";
        case RepClass::V4: return "V4";
        case RepClass::V6: return "V6";
    }
    throw domain_error("unknown representative class");
}

RepClass rep_class_from_name(const std::string& name) {
    for (RepClass c : {RepClass::V2_aV6, RepClass::V1pV3_aV6, RepClass::V1pV5,
                       RepClass::V1mV5, RepClass::V1_aV6, RepClass::V4, RepClass::V6})
        if (name == rep_class_name(c)) return c;
    throw domain_error("unknown representative class name: " + name);
}

bool rep_class_has_a(RepClass c) {
    return c == RepClass::V2_aV6 || c == RepClass::V1pV3_aV6 || c == RepClass::V1_aV6;
}

AlgebraElement OptimalRep::representative(double sigma) const {
    AlgebraElement r;
    r.sigma = sigma;
    switch (rep_class) {
        case RepClass::V2_aV6: r.a = {0, 1, 0, 0, 0, a}; break;
        case RepClass::V1pV3_aV6: r.a = {1, 0, 1, 0, 0, a}; break;
        case RepClass::V1pV5: r.a = {1, 0, 0, 0, 1, 0}; break;
        case RepClass::V1mV5: r.a = {1, 0, 0, 0, -1, 0}; break;
        case RepClass::V1_aV6: r.a = {1, 0, 0, 0, 0, a}; break;
        case RepClass::V4: r.a = {0, 0, 0, 1, 0, 0}; break;
        case RepClass::V6: r.a = {0, 0, 0, 0, 0, 1}; break;
    }
    return r;
}

namespace {

/// Working state of the reduction: the element being simplified plus the
/// word of maps applied so far. Maps with eps = 0 are skipped.
struct Reduction {
    AlgebraElement v;
    GroupWord word;

    void apply(int gen, double eps) {
        if (eps == 0.0) return;
        v = adjoint(gen, eps, v);
        word.push_back({gen, eps});
    }
    double a(int i) const { return v.a[i - 1]; }
};

// Exact canonical patterns get an empty word so classification is idempotent.
bool canonical_fast_path(const AlgebraElement& x, OptimalRep& out) {
    const double tol = 1e-14 * (1.0 + x.norm_inf());
    auto zero = [&](int i) { return std::abs(x.a[i - 1]) <= tol; };
    const double a1 = x.a[0], a2 = x.a[1], a3 = x.a[2], a4 = x.a[3], a5 = x.a[4],
                 a6 = x.a[5];

    if (zero(1) && zero(3) && zero(4) && zero(5) && !zero(2)) {
        out = {RepClass::V2_aV6, a6 / a2, a2, {}};
        return true;
    }
    if (zero(2) && zero(4) && zero(5) && !zero(1) && std::abs(a1 - a3) <= tol) {
        out = {RepClass::V1pV3_aV6, a6 / a1, a1, {}};
        return true;
    }
    if (zero(2) && zero(3) && zero(4) && zero(6) && !zero(1)
        && std::abs(std::abs(a5) - std::abs(a1)) <= tol && !zero(5)) {
        out = {a5 / a1 > 0 ? RepClass::V1pV5 : RepClass::V1mV5, 0.0, a1, {}};
        return true;
    }
    if (zero(2) && zero(3) && zero(4) && zero(5) && !zero(1)) {
        out = {RepClass::V1_aV6, a6 / a1, a1, {}};
        return true;
    }
    if (zero(1) && zero(2) && zero(3) && zero(5) && zero(6) && !zero(4)) {
        out = {RepClass::V4, 0.0, a4, {}};
        return true;
    }
    if (zero(1) && zero(2) && zero(3) && zero(4) && zero(5)) {
        out = {RepClass::V6, 0.0, a6, {}};
        return true;
    }
    return false;
}

// eta = 0 with a1 usable: reduce to V1 +- V5 or V1 + a V6.
OptimalRep case_a1_nonzero(Reduction r, double s2, double zero_tol) {
    r.apply(3, -r.a(2) / (2.0 * r.a(1)));  // kill a2 (a3 collapses with eta)
    if (std::abs(r.a(5)) > zero_tol) {
        // Scale |a5| to |a1|: a1 -> e^d a1, a5 -> e^{-d/2} a5.
        r.apply(2, (2.0 / 3.0) * std::log(std::abs(r.a(5) / r.a(1))));
        r.apply(1, r.a(4) / r.a(5));         // kill a4
        r.apply(4, -s2 * r.a(6) / r.a(5));   // kill a6
        const bool plus = (r.a(5) / r.a(1)) > 0.0;
        return {plus ? RepClass::V1pV5 : RepClass::V1mV5, 0.0, r.a(1),
                std::move(r.word)};
    }
    r.apply(5, -r.a(4) / r.a(1));  // kill a4
    return {RepClass::V1_aV6, r.a(6) / r.a(1), r.a(1), std::move(r.word)};
}

// a1..a3 = 0 with a4 nonzero: reduce to V4.
OptimalRep case_a4_nonzero(Reduction r, double s2) {
    r.apply(3, -r.a(5) / r.a(4));       // kill a5
    r.apply(5, s2 * r.a(6) / r.a(4));   // kill a6
    return {RepClass::V4, 0.0, r.a(4), std::move(r.word)};
}

}  // namespace

OptimalRep classify(const AlgebraElement& x) {
    x.validate();
    const double nrm = x.norm_inf();
    if (nrm == 0.0) throw domain_error("cannot classify the zero element");

    OptimalRep fast;
    if (canonical_fast_path(x, fast)) return fast;

    // Classification is scale invariant; work on the normalized element and
    // restore the magnitude into the scale at the end.
    Reduction r{(1.0 / nrm) * x, {}};
    const double s2 = x.sigma * x.sigma;
    const double ev = eta(r.v);
    const double eta_tol = 1e-10 * (1.0 + r.v.norm2() * r.v.norm2());
    // Coefficients below this fraction of the (normalized) element are
    // treated as structural zeros in the eta = 0 case split.
    const double zero_tol = 1e-9;

    OptimalRep rep;
    if (ev > eta_tol) {
        // Case eta > 0: reduce to a multiple of V2 + a V6.
        if (std::abs(r.a(1)) < 0.01) {
            // The root formula divides by a1; make it order-one first.
            double best_g = 1.0, best_q = 0.0;
            for (double g : {1.0, -1.0, 2.0}) {
                const double q = r.a(1) - g * r.a(2) + g * g * r.a(3);
                if (std::abs(q) > std::abs(best_q)) { best_q = q; best_g = g; }
            }
            r.apply(1, best_g);
        }
        const double root = std::sqrt(eta(r.v));
        r.apply(3, (root - r.a(2)) / (2.0 * r.a(1)));  // a3 -> 0, a2 -> sqrt(eta)
        r.apply(1, r.a(1) / root);                     // a1 -> 0
        r.apply(4, 2.0 * r.a(4) / r.a(2));             // kill a4
        r.apply(5, -2.0 * r.a(5) / r.a(2));            // kill a5
        rep = {RepClass::V2_aV6, r.a(6) / r.a(2), r.a(2), std::move(r.word)};
    } else if (ev < -eta_tol) {
        // Case eta < 0: reduce to a multiple of V1 + V3 + a V6. Here
        // a1 a3 > a2^2/4 >= 0, so a3 != 0 and a1, a3 share a sign.
        r.apply(1, r.a(2) / (2.0 * r.a(3)));           // kill a2
        r.apply(2, 0.5 * std::log(r.a(3) / r.a(1)));   // equalize a1 and a3
        r.apply(5, -r.a(4) / r.a(1));                  // kill a4
        r.apply(4, r.a(5) / r.a(3));                   // kill a5
        rep = {RepClass::V1pV3_aV6, r.a(6) / r.a(1), r.a(1), std::move(r.word)};
    } else {
        // Case eta = 0, split on the leading nonzero coefficient.
        if (std::abs(r.a(1)) > zero_tol) {
            rep = case_a1_nonzero(std::move(r), s2, zero_tol);
        } else if (std::abs(r.a(3)) > zero_tol) {
            r.apply(1, 1.0);  // makes a1 ~ a3 nonzero
            rep = case_a1_nonzero(std::move(r), s2, zero_tol);
        } else if (std::abs(r.a(4)) > zero_tol) {
            rep = case_a4_nonzero(std::move(r), s2);
        } else if (std::abs(r.a(5)) > zero_tol) {
            r.apply(1, 1.0);  // makes a4 = -a5 nonzero
            rep = case_a4_nonzero(std::move(r), s2);
        } else if (std::abs(r.a(6)) > zero_tol) {
            rep = {RepClass::V6, 0.0, r.a(6), std::move(r.word)};
        } else {
            throw domain_error("cannot classify the zero element");
        }
    }
    rep.scale *= nrm;
    return rep;
}

double replay_residual(const AlgebraElement& x, const OptimalRep& rep) {
    const AlgebraElement got = apply_word(rep.word, x);
    const AlgebraElement want = rep.scale * rep.representative(x.sigma);
    return (got - want).norm_inf();
}

}  // namespace gmr::lie
