#include "aiskin/core/types.hpp"

#include <cmath>

namespace aiskin {

const char* to_string(SkinColorClass c) {
  switch (c) {
    case SkinColorClass::Light: return "light";
    case SkinColorClass::Yellowish: return "yellowish";
    case SkinColorClass::Dark: return "dark";
  }
  return "?";
}

const char* to_string(DiseaseType d) {
  switch (d) {
    case DiseaseType::Acnes: return "acnes";
    case DiseaseType::Spots: return "spots";
    case DiseaseType::Blackheads: return "blackheads";
    case DiseaseType::DarkCircles: return "dark-circles";
    case DiseaseType::CleanFace: return "clean-face";
  }
  return "?";
}

std::optional<DiseaseType> disease_from_string(const std::string& name) {
  for (size_t i = 0; i < kDiseaseCount; ++i) {
    auto d = static_cast<DiseaseType>(i);
    if (name == to_string(d)) return d;
  }
  return std::nullopt;
}

void ImageSample::validate() const {
  if (width < 8 || height < 8) {
    throw Error(Errc::invalid_argument, "image below 8x8 minimum (" + std::to_string(width) +
                                            "x" + std::to_string(height) + ")");
  }
  if (pixels.size() != pixel_bytes()) {
    throw Error(Errc::invalid_argument,
                "pixel buffer size " + std::to_string(pixels.size()) + " does not match " +
                    std::to_string(width) + "x" + std::to_string(height) + "x3");
  }
}

void PredictionDistribution::validate(double sum_tolerance) const {
  if (probs.size() != kBinaryClassCount) {
    throw Error(Errc::contract, "distribution has " + std::to_string(probs.size()) +
                                    " classes, expected " + std::to_string(kBinaryClassCount));
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw Error(Errc::contract, "probability outside [0,1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > sum_tolerance) {
    throw Error(Errc::contract,
                "distribution sum " + std::to_string(sum) + " deviates from 1 beyond tolerance");
  }
}

size_t PredictionDistribution::argmax() const {
  size_t best = 0;
  for (size_t i = 1; i < probs.size(); ++i) {
    if (probs[i] > probs[best]) best = i;
  }
  return best;
}

}  // namespace aiskin
