#include "aiskin/core/entropy.hpp"

#include <cmath>

namespace aiskin {

double shannon_entropy_bits(const PredictionDistribution& p) {
  p.validate(1e-6);
  double h = 0.0;
  for (double pj : p.probs) {
    if (pj > 0.0) h -= pj * std::log2(pj);
  }
  // Rounding can leave a tiny negative residue for near-one-hot inputs.
  return h < 0.0 ? 0.0 : h;
}

}  // namespace aiskin
