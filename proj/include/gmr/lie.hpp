// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "gmr/errors.hpp"

namespace gmr::lie {

/// An element V = sum_i a_i V_i of the six-dimensional symmetry algebra of
/// the symmetric-case equation. The structure constants depend on sigma, so
/// the element carries it; operations on mixed-sigma elements throw.
struct AlgebraElement {
    std::array<double, 6> a{};  ///< coefficients a1..a6 (index 0 = a1)
    double sigma = 1.0;

    void validate() const;
    double norm_inf() const noexcept;
    double norm2() const noexcept;

    static AlgebraElement basis(int i, double sigma);  // V_i, i in 1..6
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(double c, const AlgebraElement& x);

/// Lie bracket [X, Y], bilinear extension of the commutator table. Exactly
/// antisymmetric by construction.
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

/// Ad(exp(eps V_i)) Y in closed form (the adjoint table extended linearly).
/// i in 1..6.
AlgebraElement adjoint(int i, double eps, const AlgebraElement& y);

/// eta(V) = a2^2 - 4 a1 a3, invariant of the full adjoint action.
double eta(const AlgebraElement& x) noexcept;

/// One adjoint map in a composed word.
struct AdStep {
    int gen;     ///< generator index 1..6
    double eps;  ///< group parameter
};

/// An ordered list of adjoint maps, applied left to right.
using GroupWord = std::vector<AdStep>;

AlgebraElement apply_word(const GroupWord& w, AlgebraElement x);

/// Max Jacobi defect ||[X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]]||_inf over the
/// sample of triples. Validates the commutator table as a Lie algebra.
double jacobi_check(
    const std::vector<std::array<AlgebraElement, 3>>& sample);

}  // namespace gmr::lie
