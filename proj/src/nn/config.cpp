#include "aiskin/nn/config.hpp"

#include <bit>

namespace aiskin::nn {

const char* to_string(LayerKind kind) {
  switch (kind) {
    case LayerKind::Conv2D: return "Conv2D";
    case LayerKind::MaxPool2D: return "MaxPool2D";
    case LayerKind::Dense: return "Dense";
    case LayerKind::ReLU: return "ReLU";
    case LayerKind::Dropout: return "Dropout";
    case LayerKind::Softmax: return "Softmax";
  }
  return "?";
}

LayerSpec LayerSpec::conv2d(uint32_t out_channels, uint32_t kernel, uint32_t stride,
                            uint32_t padding) {
  LayerSpec s;
  s.kind = LayerKind::Conv2D;
  s.out_channels = out_channels;
  s.kernel = kernel;
  s.stride = stride;
  s.padding = padding;
  return s;
}

LayerSpec LayerSpec::maxpool2d(uint32_t pool, uint32_t stride) {
  LayerSpec s;
  s.kind = LayerKind::MaxPool2D;
  s.pool = pool;
  s.stride = stride == 0 ? pool : stride;
  return s;
}

LayerSpec LayerSpec::dense(uint32_t units) {
  LayerSpec s;
  s.kind = LayerKind::Dense;
  s.units = units;
  return s;
}

LayerSpec LayerSpec::relu() {
  LayerSpec s;
  s.kind = LayerKind::ReLU;
  return s;
}

LayerSpec LayerSpec::dropout(float rate) {
  LayerSpec s;
  s.kind = LayerKind::Dropout;
  s.rate = rate;
  return s;
}

LayerSpec LayerSpec::softmax() {
  LayerSpec s;
  s.kind = LayerKind::Softmax;
  return s;
}

size_t ModelConfig::count_layers(LayerKind kind) const {
  size_t n = 0;
  for (const auto& l : layers) {
    if (l.kind == kind) ++n;
  }
  return n;
}

namespace {

[[noreturn]] void bad_layer(size_t index, const LayerSpec& spec, const std::string& why) {
  throw Error(Errc::config, "layer " + std::to_string(index) + " (" + to_string(spec.kind) +
                                "): " + why);
}

}  // namespace

std::vector<LayerGeometry> resolve_geometry(const ModelConfig& config) {
  if (config.input_width == 0 || config.input_height == 0 || config.input_channels == 0) {
    throw Error(Errc::config, "input dimensions must be positive");
  }
  std::vector<LayerGeometry> out;
  out.reserve(config.layers.size());
  uint32_t c = config.input_channels;
  uint32_t h = config.input_height;
  uint32_t w = config.input_width;
  bool flattened = false;
  for (size_t i = 0; i < config.layers.size(); ++i) {
    const LayerSpec& spec = config.layers[i];
    LayerGeometry g;
    g.spec = spec;
    g.in_c = c;
    g.in_h = h;
    g.in_w = w;
    g.in_size = static_cast<size_t>(c) * h * w;
    switch (spec.kind) {
      case LayerKind::Conv2D: {
        if (flattened) bad_layer(i, spec, "convolution after flattening dense layer");
        if (spec.out_channels == 0 || spec.kernel == 0 || spec.stride == 0) {
          bad_layer(i, spec, "channels, kernel and stride must be positive");
        }
        const uint32_t eff_h = h + 2 * spec.padding;
        const uint32_t eff_w = w + 2 * spec.padding;
        if (spec.kernel > eff_h || spec.kernel > eff_w) {
          bad_layer(i, spec, "kernel larger than padded input");
        }
        c = spec.out_channels;
        h = (eff_h - spec.kernel) / spec.stride + 1;
        w = (eff_w - spec.kernel) / spec.stride + 1;
        break;
      }
      case LayerKind::MaxPool2D: {
        if (flattened) bad_layer(i, spec, "pooling after flattening dense layer");
        if (spec.pool == 0 || spec.stride == 0) bad_layer(i, spec, "window and stride must be positive");
        if (spec.pool > h || spec.pool > w) bad_layer(i, spec, "window larger than input");
        h = (h - spec.pool) / spec.stride + 1;
        w = (w - spec.pool) / spec.stride + 1;
        break;
      }
      case LayerKind::Dense: {
        if (spec.units == 0) bad_layer(i, spec, "units must be positive");
        flattened = true;
        c = spec.units;
        h = 1;
        w = 1;
        break;
      }
      case LayerKind::ReLU:
      case LayerKind::Softmax:
        break;
      case LayerKind::Dropout: {
        if (spec.rate < 0.0f || spec.rate >= 1.0f) bad_layer(i, spec, "dropout rate must be in [0,1)");
        break;
      }
    }
    g.out_c = c;
    g.out_h = h;
    g.out_w = w;
    g.out_size = static_cast<size_t>(c) * h * w;
    out.push_back(g);
  }
  return out;
}

void ModelConfig::validate() const {
  if (learning_rate <= 0.0 || iterations == 0 || train_batch == 0 || test_batch == 0) {
    throw Error(Errc::config, "hyperparameters must be positive");
  }
  if (dropout_rate < 0.0 || dropout_rate >= 1.0) {
    throw Error(Errc::config, "dropout rate must be in [0,1)");
  }
  if (layers.empty()) throw Error(Errc::config, "no layers");
  auto geometry = resolve_geometry(*this);
  if (layers.back().kind != LayerKind::Softmax) {
    throw Error(Errc::config, "last layer must be Softmax");
  }
  if (geometry.back().out_size != 2) {
    throw Error(Errc::config, "softmax head must cover exactly 2 classes, got " +
                                  std::to_string(geometry.back().out_size));
  }
}

uint64_t config_hash(const ModelConfig& config) {
  // FNV-1a over a canonical byte encoding.
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](uint64_t v, size_t bytes) {
    for (size_t i = 0; i < bytes; ++i) {
      h ^= (v >> (8 * i)) & 0xFFu;
      h *= 0x100000001b3ull;
    }
  };
  for (char ch : config.name) mix(static_cast<uint8_t>(ch), 1);
  mix(config.input_width, 4);
  mix(config.input_height, 4);
  mix(config.input_channels, 4);
  mix(config.layers.size(), 4);
  for (const auto& l : config.layers) {
    mix(static_cast<uint8_t>(l.kind), 1);
    mix(l.out_channels, 4);
    mix(l.kernel, 4);
    mix(l.stride, 4);
    mix(l.padding, 4);
    mix(l.pool, 4);
    mix(l.units, 4);
    mix(std::bit_cast<uint32_t>(l.rate), 4);
  }
  mix(std::bit_cast<uint64_t>(config.learning_rate), 8);
  mix(config.iterations, 4);
  mix(config.train_batch, 4);
  mix(config.test_batch, 4);
  mix(std::bit_cast<uint64_t>(config.dropout_rate), 8);
  return h;
}

}  // namespace aiskin::nn
