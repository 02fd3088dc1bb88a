#pragma once

#include <array>

#include "aiskin/core/types.hpp"

namespace aiskin {

// Weights over the five diagnosis types, indexed by DiseaseType. Must sum
// to 1 within 1e-9.
using ScoreWeights = std::array<double, kDiseaseCount>;

inline constexpr ScoreWeights kEqualScoreWeights = {0.2, 0.2, 0.2, 0.2, 0.2};

// Overall skin score in [0,100]. Disease types contribute (1 - p_positive);
// CleanFace contributes p_positive directly, since a positive clean-face
// verdict means healthy skin.
double compute_overall_score(const std::array<Verdict, kDiseaseCount>& verdicts,
                             const ScoreWeights& weights = kEqualScoreWeights);

}  // namespace aiskin
