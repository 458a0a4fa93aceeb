// SPDX-License-Identifier: Apache-2.0
#include "gmr/lie.hpp"

#include <algorithm>
#include <cmath>

namespace gmr::lie {

void AlgebraElement::validate() const {
    for (double c : a)
        if (!std::isfinite(c)) throw domain_error("algebra coefficients must be finite");
    if (!(sigma > 0.0)) throw domain_error("sigma must be > 0");
}

double AlgebraElement::norm_inf() const noexcept {
    double m = 0.0;
    for (double c : a) m = std::max(m, std::abs(c));
    return m;
}

double AlgebraElement::norm2() const noexcept {
    double s = 0.0;
    for (double c : a) s += c * c;
    return std::sqrt(s);
}

AlgebraElement AlgebraElement::basis(int i, double sigma) {
    if (i < 1 || i > 6) throw domain_error("generator index must be in 1..6");
    AlgebraElement e;
    e.sigma = sigma;
    e.a[i - 1] = 1.0;
    return e;
}

namespace {

void check_same_sigma(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.sigma != y.sigma) throw domain_error("sigma mismatch between algebra elements");
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_sigma(x, y);
    AlgebraElement r = x;
    for (int i = 0; i < 6; ++i) r.a[i] += y.a[i];
    return r;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_sigma(x, y);
    AlgebraElement r = x;
    for (int i = 0; i < 6; ++i) r.a[i] -= y.a[i];
    return r;
}

AlgebraElement operator*(double c, const AlgebraElement& x) {
    AlgebraElement r = x;
    for (double& v : r.a) v *= c;
    return r;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_sigma(x, y);
    x.validate();
    y.validate();
    const double s2 = x.sigma * x.sigma;
    AlgebraElement r;
    r.sigma = x.sigma;

    // Nonzero brackets [V_i, V_j] for i < j; antisymmetric completion below.
    // Coefficient m = x_i y_j - x_j y_i multiplies each table entry.
    auto pair = [&](int i, int j) { return x.a[i - 1] * y.a[j - 1] - x.a[j - 1] * y.a[i - 1]; };

    double m;
    m = pair(1, 2);  // [V1,V2] = V1 - (sigma^2/8) V6
    r.a[0] += m;
    r.a[5] += -s2 / 8.0 * m;
    m = pair(1, 3);  // [V1,V3] = 2V2 - (1/2) V6
    r.a[1] += 2.0 * m;
    r.a[5] += -0.5 * m;
    m = pair(1, 5);  // [V1,V5] = V4 + (1/2) V6
    r.a[3] += m;
    r.a[5] += 0.5 * m;
    m = pair(2, 3);  // [V2,V3] = V3
    r.a[2] += m;
    m = pair(2, 4);  // [V2,V4] = -(1/2) V4 - (1/4) V6
    r.a[3] += -0.5 * m;
    r.a[5] += -0.25 * m;
    m = pair(2, 5);  // [V2,V5] = (1/2) V5
    r.a[4] += 0.5 * m;
    m = pair(3, 4);  // [V3,V4] = -V5
    r.a[4] += -m;
    m = pair(4, 5);  // [V4,V5] = -(1/sigma^2) V6
    r.a[5] += -m / s2;
    return r;
}

AlgebraElement adjoint(int i, double eps, const AlgebraElement& y) {
    if (i < 1 || i > 6) throw domain_error("generator index must be in 1..6");
    if (!std::isfinite(eps)) throw domain_error("eps must be finite");
    y.validate();
    const double s2 = y.sigma * y.sigma;
    const auto& a = y.a;
    AlgebraElement r = y;

    // Coefficient transport under Ad(exp(eps V_i)), the closed forms of the
    // adjoint table applied to sum a_j V_j.
    switch (i) {
        case 1: {
            const double g = eps;
            r.a[0] = a[0] - g * a[1] + g * g * a[2];
            r.a[1] = a[1] - 2.0 * g * a[2];
            r.a[2] = a[2];
            r.a[3] = a[3] - g * a[4];
            r.a[4] = a[4];
            r.a[5] = a[5] + s2 / 8.0 * g * a[1] + (4.0 * g - s2 * g * g) / 8.0 * a[2]
                   - 0.5 * g * a[4];
            break;
        }
        case 2: {
            const double ep = std::exp(eps);
            const double eh = std::exp(0.5 * eps);
            r.a[0] = ep * a[0];
            r.a[2] = a[2] / ep;
            r.a[3] = eh * a[3];
            r.a[4] = a[4] / eh;
            r.a[5] = a[5] + s2 / 8.0 * (1.0 - ep) * a[0] + 0.5 * (eh - 1.0) * a[3];
            break;
        }
        case 3: {
            const double b = eps;
            r.a[1] = 2.0 * b * a[0] + a[1];
            r.a[2] = b * b * a[0] + b * a[1] + a[2];
            r.a[4] = b * a[3] + a[4];
            r.a[5] = a[5] - 0.5 * b * a[0];
            break;
        }
        case 4: {
            const double e = eps;
            r.a[3] = a[3] - 0.5 * e * a[1];
            r.a[4] = a[4] - e * a[2];
            r.a[5] = a[5] - 0.25 * e * a[1] - e * e / (2.0 * s2) * a[2] + e / s2 * a[4];
            break;
        }
        case 5: {
            const double e = eps;
            r.a[3] = a[3] + e * a[0];
            r.a[4] = a[4] + 0.5 * e * a[1];
            r.a[5] = a[5] + (0.5 * e - e * e / (2.0 * s2)) * a[0] - e / s2 * a[3];
            break;
        }
        case 6:
            break;  // V6 is central; Ad acts trivially
    }
    return r;
}

double eta(const AlgebraElement& x) noexcept {
    return x.a[1] * x.a[1] - 4.0 * x.a[0] * x.a[2];
}

AlgebraElement apply_word(const GroupWord& w, AlgebraElement x) {
    for (const auto& s : w) x = adjoint(s.gen, s.eps, x);
    return x;
}

double jacobi_check(const std::vector<std::array<AlgebraElement, 3>>& sample) {
    if (sample.empty()) throw domain_error("jacobi_check requires a nonempty sample");
    double worst = 0.0;
    for (const auto& [x, y, z] : sample) {
        const AlgebraElement defect =
            commutator(x, commutator(y, z)) + commutator(y, commutator(z, x))
            + commutator(z, commutator(x, y));
        worst = std::max(worst, defect.norm_inf());
    }
    return worst;
}

}  // namespace gmr::lie
