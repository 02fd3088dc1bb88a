#include "aiskin/core/score.hpp"

#include <cmath>

namespace aiskin {

double compute_overall_score(const std::array<Verdict, kDiseaseCount>& verdicts,
                             const ScoreWeights& weights) {
  double weight_sum = 0.0;
  for (double w : weights) weight_sum += w;
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    throw Error(Errc::config, "score weights sum to " + std::to_string(weight_sum) + ", not 1");
  }
  double score = 0.0;
  for (const Verdict& v : verdicts) {
    double w = weights[static_cast<size_t>(v.disease_type)];
    double healthy = v.disease_type == DiseaseType::CleanFace ? v.positive_probability
                                                              : 1.0 - v.positive_probability;
    score += w * healthy;
  }
  return 100.0 * score;
}

}  // namespace aiskin
