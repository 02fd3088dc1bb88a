#pragma once

#include "aiskin/core/types.hpp"

namespace aiskin {

// Shannon entropy of a prediction distribution, in bits. Uses the continuous
// extension 0*log2(0) = 0, so one-hot distributions are valid and score 0.
// Rejects distributions whose sum deviates from 1 by more than 1e-6; that
// signals corrupted upstream inference rather than an uncertain sample.
double shannon_entropy_bits(const PredictionDistribution& p);

}  // namespace aiskin
