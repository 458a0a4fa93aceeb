// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "gmr/solutions.hpp"

namespace gmr {

/// One of the published surface plots: figure 1..7, subfigure a|b|c.
/// Figures 1-6 vary sigma = 1, 2, 3 across subfigures with the family
/// constants fixed per caption; figure 7 fixes sigma = 2 and varies the
/// branch parameter a = 1, -0.5, -2.8.
struct FigureSpec {
    int figure;
    char sub;

    void validate() const;
};

/// The solution family a figure displays, constants and model parameters
/// from its caption (lambda closes the symmetric case).
SolutionFamily figure_family(const FigureSpec& spec);

/// Evaluation window for figure data; defaults documented as
/// t in [0.1, 5] x x in [1, 5], 60 x 60 samples.
struct FigureGrid {
    double t_min = 0.1, t_max = 5.0;
    double x_min = 1.0, x_max = 5.0;
    int n_t = 60, n_x = 60;

    void validate() const;
    double t(int i) const { return t_min + (t_max - t_min) * i / (n_t - 1.0); }
    double x(int j) const { return x_min + (x_max - x_min) * j / (n_x - 1.0); }
};

/// Write "t,x,u" CSV rows sorted by (t, x); deterministic bytes for a given
/// family and grid.
void write_figure_csv(const SolutionFamily& f, const FigureGrid& g, const std::string& path);

/// The twelve canonical catalog instances, one per family variant, with
/// figure-caption constants where a figure exists.
std::vector<SolutionFamily> standard_catalog();

}  // namespace gmr
