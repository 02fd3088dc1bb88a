#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aiskin/common/error.hpp"

namespace aiskin::nn {

enum class LayerKind : uint8_t {
  Conv2D = 0,
  MaxPool2D = 1,
  Dense = 2,
  ReLU = 3,
  Dropout = 4,
  Softmax = 5,
};

const char* to_string(LayerKind kind);

struct LayerSpec {
  LayerKind kind = LayerKind::ReLU;
  uint32_t out_channels = 0;  // Conv2D
  uint32_t kernel = 0;        // Conv2D kernel edge
  uint32_t stride = 1;        // Conv2D / MaxPool2D
  uint32_t padding = 0;       // Conv2D
  uint32_t pool = 0;          // MaxPool2D window edge
  uint32_t units = 0;         // Dense
  float rate = 0.0f;          // Dropout, in [0,1)

  static LayerSpec conv2d(uint32_t out_channels, uint32_t kernel, uint32_t stride = 1,
                          uint32_t padding = 0);
  static LayerSpec maxpool2d(uint32_t pool, uint32_t stride = 0);  // stride 0 -> = pool
  static LayerSpec dense(uint32_t units);
  static LayerSpec relu();
  static LayerSpec dropout(float rate);
  static LayerSpec softmax();

  bool operator==(const LayerSpec&) const = default;
};

struct ModelConfig {
  std::string name;
  uint32_t input_width = 0;
  uint32_t input_height = 0;
  uint32_t input_channels = 0;
  std::vector<LayerSpec> layers;
  double learning_rate = 0.0;
  uint32_t iterations = 0;
  uint32_t train_batch = 0;
  uint32_t test_batch = 0;
  double dropout_rate = 0.0;

  size_t input_size() const {
    return static_cast<size_t>(input_width) * input_height * input_channels;
  }

  size_t count_layers(LayerKind kind) const;

  // Validates hyperparameters and the layer shape chain, and requires the
  // final layer pair to be a 2-unit Dense followed by Softmax. Throws
  // Errc::config naming the offending layer.
  void validate() const;

  bool operator==(const ModelConfig&) const = default;
};

// Stable 64-bit digest of a config; parameter bundles carry it so an edge
// never loads weights for a different architecture.
uint64_t config_hash(const ModelConfig& config);

// Per-layer geometry resolved from the config's shape chain.
struct LayerGeometry {
  LayerSpec spec;
  uint32_t in_c = 0, in_h = 0, in_w = 0;
  uint32_t out_c = 0, out_h = 0, out_w = 0;
  size_t in_size = 0;
  size_t out_size = 0;
};

std::vector<LayerGeometry> resolve_geometry(const ModelConfig& config);

}  // namespace aiskin::nn
