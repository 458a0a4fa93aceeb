// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "gmr/lie.hpp"

namespace gmr::lie {

/// The seven representative classes of the optimal system of
/// one-dimensional subalgebras.
enum class RepClass {
    V2_aV6,      ///< V2 + a V6        (eta > 0)
    V1pV3_aV6,   ///< V1 + V3 + a V6   (eta < 0)
    V1pV5,       ///< V1 + V5          (eta = 0, a1 != 0, a5 != 0)
    V1mV5,       ///< V1 - V5
    V1_aV6,      ///< V1 + a V6        (eta = 0, a1 != 0, a5 = 0)
    V4,          ///< V4
    V6,          ///< V6
};

const char* rep_class_name(RepClass c);
RepClass rep_class_from_name(const std::string& name);
bool rep_class_has_a(RepClass c);

/// Result of reducing an element to its optimal-system representative:
/// applying `word` to the original element yields scale * representative().
struct OptimalRep {
    RepClass rep_class;
    double a = 0.0;      ///< free parameter, meaningful iff rep_class_has_a
    double scale = 1.0;  ///< nonzero multiple
    GroupWord word;      ///< adjoint maps applied, in order

    /// The canonical representative element (leading coefficient +1).
    AlgebraElement representative(double sigma) const;
};

/// Classify a nonzero element into the optimal system. Throws on the zero
/// element. The returned word replays to scale * representative to ~1e-9.
OptimalRep classify(const AlgebraElement& x);

/// Max |apply_word(rep.word, x) - rep.scale * rep.representative()| component.
double replay_residual(const AlgebraElement& x, const OptimalRep& rep);

}  // namespace gmr::lie
