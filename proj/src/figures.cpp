// SPDX-License-Identifier: Apache-2.0
#include "gmr/figures.hpp"

#include <cmath>
#include <cstdio>

namespace gmr {

void FigureSpec::validate() const {
    if (figure < 1 || figure > 7) throw domain_error("figure id must be in 1..7");
    if (sub != 'a' && sub != 'b' && sub != 'c')
        throw domain_error("subfigure must be a, b or c");
}

void FigureGrid::validate() const {
    if (!(n_t >= 2 && n_x >= 2)) throw domain_error("figure grid counts must be >= 2");
    if (!(t_max > t_min) || !(x_max > x_min))
        throw domain_error("figure grid bounds must be ordered");
    if (!(x_min > 0.0)) throw domain_error("x must be > 0");
}

SolutionFamily figure_family(const FigureSpec& spec) {
    spec.validate();
    const int sub_idx = spec.sub - 'a';
    const double sigma_of_sub = 1.0 + sub_idx;  // figures 1-6: sigma = 1, 2, 3

    SolutionFamily f;
    switch (spec.figure) {
        case 1:
            f.family = FamilyId::Inv2;
            f.params = ModelParams::symmetric(0.5, sigma_of_sub);
            f.c1 = 2.0;
            f.c2 = -1.0;
            break;
        case 2:
            f.family = FamilyId::Inv3;
            f.params = ModelParams::symmetric(1.0, sigma_of_sub);
            f.c1 = 2.0;
            f.c2 = -1.0;
            break;
        case 3:
            f.family = FamilyId::Inv5;
            f.params = ModelParams::symmetric(1.0, sigma_of_sub);
            f.c1 = 1.0;  // caption constant c
            break;
        case 4:
            f.family = FamilyId::PcfUV;
            f.params = ModelParams::symmetric(1.0, sigma_of_sub);
            f.a = 2.0;
            f.c1 = 2.0;
            f.c2 = 1.0;
            break;
        case 5:
            f.family = FamilyId::AiryPlus;
            f.params = ModelParams::symmetric(1.0, sigma_of_sub);
            f.c1 = -1.0;
            f.c2 = 1.0;
            break;
        case 6:
            f.family = FamilyId::AiryMinus;
            f.params = ModelParams::symmetric(1.0, sigma_of_sub);
            f.c1 = 2.0;
            f.c2 = 1.0;
            break;
        case 7: {
            f.params = ModelParams::symmetric(1.0, 2.0);
            f.c1 = 2.0;
            f.c2 = 2.0;
            const double as[3] = {1.0, -0.5, -2.8};
            f.a = as[sub_idx];
            f.family = sub_idx == 0 ? FamilyId::ExpAtPos
                     : sub_idx == 1 ? FamilyId::ExpAtZero : FamilyId::ExpAtNeg;
            break;
        }
    }
    f.validate();
    return f;
}

void write_figure_csv(const SolutionFamily& f, const FigureGrid& g, const std::string& path) {
    g.validate();
    f.validate();
    std::FILE* out = std::fopen(path.c_str(), "w");
    if (!out) throw io_error("cannot open for writing: " + path);
    std::fprintf(out, "t,x,u\n");
    for (int i = 0; i < g.n_t; ++i)
        for (int j = 0; j < g.n_x; ++j) {
            const double t = g.t(i), x = g.x(j);
            std::fprintf(out, "%.17g,%.17g,%.17g\n", t, x, eval(f, t, x));
        }
    if (std::fclose(out) != 0) throw io_error("write failed: " + path);
}

std::vector<SolutionFamily> standard_catalog() {
    std::vector<SolutionFamily> cat;
    auto add = [&](FamilyId id, double k, double sigma, double c1, double c2, double a) {
        SolutionFamily f;
        f.family = id;
        f.params = ModelParams::symmetric(k, sigma);
        f.c1 = c1;
        f.c2 = c2;
        f.a = a;
        f.validate();
        cat.push_back(f);
    };
    add(FamilyId::Inv1, 1.0, 1.0, 1.0, 1.0, 0.0);
    add(FamilyId::Inv2, 0.5, 1.0, 2.0, -1.0, 0.0);        // figure 1 constants
    add(FamilyId::Inv3, 1.0, 1.0, 2.0, -1.0, 0.0);        // figure 2 constants
    add(FamilyId::Inv4Exp, 1.0, 1.0, 1.0, 0.0, 0.0);
    add(FamilyId::Inv5, 1.0, 1.0, 1.0, 0.0, 0.0);         // figure 3 constants
    add(FamilyId::PcfUV, 1.0, 1.0, 2.0, 1.0, 2.0);        // figure 4 constants
    add(FamilyId::PcfW, 1.0, 1.0, 1.0, 0.5, 0.7);
    add(FamilyId::AiryPlus, 1.0, 1.0, -1.0, 1.0, 0.0);    // figure 5 constants
    add(FamilyId::AiryMinus, 1.0, 1.0, 2.0, 1.0, 0.0);    // figure 6 constants
    add(FamilyId::ExpAtPos, 1.0, 2.0, 2.0, 2.0, 1.0);     // figure 7a
    add(FamilyId::ExpAtZero, 1.0, 2.0, 2.0, 2.0, -0.5);   // figure 7b
    add(FamilyId::ExpAtNeg, 1.0, 2.0, 2.0, 2.0, -2.8);    // figure 7c
    return cat;
}

}  // namespace gmr
