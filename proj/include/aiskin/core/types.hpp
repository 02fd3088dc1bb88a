#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aiskin/common/error.hpp"

namespace aiskin {

// Coarse population-group label used to partition the cloud database.
enum class SkinColorClass : uint8_t { Light = 0, Yellowish = 1, Dark = 2 };
inline constexpr size_t kSkinColorCount = 3;

// The five binary diagnosis tasks. Each task is a positive/negative pair
// (e.g. skin acnes vs. no skin acne).
enum class DiseaseType : uint8_t {
  Acnes = 0,
  Spots = 1,
  Blackheads = 2,
  DarkCircles = 3,
  CleanFace = 4,
};
inline constexpr size_t kDiseaseCount = 5;

// Number of classes per binary diagnosis head.
inline constexpr size_t kBinaryClassCount = 2;

const char* to_string(SkinColorClass c);
const char* to_string(DiseaseType d);
std::optional<DiseaseType> disease_from_string(const std::string& name);

struct DiagnosisLabel {
  DiseaseType disease_type = DiseaseType::Acnes;
  bool positive = false;

  bool operator==(const DiagnosisLabel&) const = default;
};

// The unit flowing through the loop: an 8-bit RGB image plus identity and
// bookkeeping fields. Pixels are row-major, 3 bytes per pixel.
struct ImageSample {
  std::vector<uint8_t> pixels;
  uint16_t width = 0;
  uint16_t height = 0;
  uint64_t sample_id = 0;
  SkinColorClass skin_color = SkinColorClass::Light;
  std::optional<DiagnosisLabel> truth_label;

  size_t pixel_bytes() const { return static_cast<size_t>(width) * height * 3; }

  // Throws Errc::invalid_argument when the pixel buffer does not match the
  // dimensions or the image is below the 8x8 minimum.
  void validate() const;

  bool operator==(const ImageSample&) const = default;
};

// Probability vector over the classes of one binary head. Index 0 is the
// negative class, index 1 the positive class.
struct PredictionDistribution {
  std::vector<double> probs;
  uint64_t model_version = 0;

  // Throws Errc::contract on negative entries, entries above 1, wrong
  // length, or a sum deviating from 1 by more than the stated tolerance.
  void validate(double sum_tolerance = 1e-6) const;

  size_t argmax() const;  // ties resolve to the lowest index
};

struct FilterDecision {
  uint64_t sample_id = 0;
  double entropy_bits = 0.0;
  double threshold_bits = 0.0;
  bool accepted = false;
  std::optional<DiagnosisLabel> pseudo_label;
};

struct Verdict {
  DiseaseType disease_type = DiseaseType::Acnes;
  double positive_probability = 0.0;
  bool positive = false;
};

// Per-type verdicts plus the weighted overall score fed back to the user.
struct AnalysisReport {
  uint64_t sample_id = 0;
  std::array<Verdict, kDiseaseCount> verdicts{};
  double overall_score = 0.0;
  SkinColorClass skin_color = SkinColorClass::Light;
  uint64_t model_version = 0;
};

// Uniform inference contract shared by the filter, the edge service, and
// test stubs. Implementations must be safe to call concurrently.
class BinaryClassifier {
 public:
  virtual ~BinaryClassifier() = default;
  virtual DiseaseType task() const = 0;
  virtual uint64_t model_version() const = 0;
  virtual PredictionDistribution predict(const ImageSample& sample) const = 0;
};

}  // namespace aiskin
