#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "aiskin/common/rng.hpp"
#include "aiskin/kernels/kernels.hpp"
#include "aiskin/nn/config.hpp"
#include "aiskin/nn/tensor.hpp"

namespace aiskin::nn {

enum class DropoutMode { Stochastic, Disabled };

// Per-sample forward cache consumed by backward().
template <typename T>
struct ForwardCache {
  std::vector<std::vector<T>> activations;       // activations[0] = input, [i+1] = layer i output
  std::vector<std::vector<uint32_t>> pool_argmax;  // indexed by layer, empty for non-pool layers
  std::vector<std::vector<T>> dropout_scale;       // 0 or 1/(1-rate) per element
  std::vector<std::vector<T>> im2col;              // patch matrices for conv layers
};

template <typename T>
struct GradBuffers {
  std::vector<Tensor<T>> weight_grads;  // parallel to layers; empty for parameterless layers
  std::vector<Tensor<T>> bias_grads;

  void zero() {
    for (auto& t : weight_grads) std::fill(t.data.begin(), t.data.end(), T(0));
    for (auto& t : bias_grads) std::fill(t.data.begin(), t.data.end(), T(0));
  }
};

// Minimal sequential CNN: Conv2D / MaxPool2D / Dense / ReLU / Dropout /
// Softmax, cross-entropy loss, plain SGD. Instantiated with float for the
// production path and double for the finite-difference gradient oracle.
template <typename T>
class Net {
 public:
  explicit Net(const ModelConfig& config) : config_(config) {
    config_.validate();
    geometry_ = resolve_geometry(config_);
    weights_.resize(geometry_.size());
    biases_.resize(geometry_.size());
    for (size_t i = 0; i < geometry_.size(); ++i) {
      const auto& g = geometry_[i];
      if (g.spec.kind == LayerKind::Conv2D) {
        weights_[i] = Tensor<T>::zeros({g.spec.out_channels, g.in_c, g.spec.kernel, g.spec.kernel});
        biases_[i] = Tensor<T>::zeros({g.spec.out_channels});
      } else if (g.spec.kind == LayerKind::Dense) {
        weights_[i] = Tensor<T>::zeros({g.spec.units, static_cast<uint32_t>(g.in_size)});
        biases_[i] = Tensor<T>::zeros({g.spec.units});
      }
    }
  }

  const ModelConfig& config() const { return config_; }
  const std::vector<LayerGeometry>& geometry() const { return geometry_; }
  std::vector<Tensor<T>>& weights() { return weights_; }
  std::vector<Tensor<T>>& biases() { return biases_; }
  const std::vector<Tensor<T>>& weights() const { return weights_; }
  const std::vector<Tensor<T>>& biases() const { return biases_; }

  // Glorot-uniform weights, zero biases, fully determined by the seed.
  void init_glorot(uint64_t seed) {
    Rng rng(seed);
    for (size_t i = 0; i < geometry_.size(); ++i) {
      if (weights_[i].size() == 0) continue;
      const auto& g = geometry_[i];
      double fan_in, fan_out;
      if (g.spec.kind == LayerKind::Conv2D) {
        fan_in = static_cast<double>(g.in_c) * g.spec.kernel * g.spec.kernel;
        fan_out = static_cast<double>(g.spec.out_channels) * g.spec.kernel * g.spec.kernel;
      } else {
        fan_in = static_cast<double>(g.in_size);
        fan_out = static_cast<double>(g.spec.units);
      }
      const double limit = std::sqrt(6.0 / (fan_in + fan_out));
      for (auto& v : weights_[i].data) v = static_cast<T>(rng.uniform(-limit, limit));
      std::fill(biases_[i].data.begin(), biases_[i].data.end(), T(0));
    }
  }

  GradBuffers<T> make_grad_buffers() const {
    GradBuffers<T> g;
    g.weight_grads.reserve(weights_.size());
    g.bias_grads.reserve(biases_.size());
    for (size_t i = 0; i < weights_.size(); ++i) {
      g.weight_grads.push_back(weights_[i].size() ? Tensor<T>::zeros(weights_[i].shape)
                                                  : Tensor<T>());
      g.bias_grads.push_back(biases_[i].size() ? Tensor<T>::zeros(biases_[i].shape) : Tensor<T>());
    }
    return g;
  }

  // Forward one sample. `dropout_rng` is only consulted for stochastic
  // dropout; pass nullptr when mode is Disabled. Returns class
  // probabilities. Throws Errc::numeric_fault naming the first layer that
  // produced a non-finite activation.
  std::vector<T> forward(std::span<const T> input, DropoutMode mode, Rng* dropout_rng,
                         ForwardCache<T>* cache) const {
    if (input.size() != config_.input_size()) {
      throw Error(Errc::invalid_argument, "input size " + std::to_string(input.size()) +
                                              " does not match config input " +
                                              std::to_string(config_.input_size()));
    }
    if (cache) {
      cache->activations.assign(geometry_.size() + 1, {});
      cache->pool_argmax.assign(geometry_.size(), {});
      cache->dropout_scale.assign(geometry_.size(), {});
      cache->im2col.assign(geometry_.size(), {});
      cache->activations[0].assign(input.begin(), input.end());
    }
    std::vector<T> cur(input.begin(), input.end());
    for (size_t i = 0; i < geometry_.size(); ++i) {
      std::vector<T> next = apply_layer(i, cur, mode, dropout_rng, cache);
      check_finite(next, i);
      if (cache) cache->activations[i + 1] = next;
      cur = std::move(next);
    }
    return cur;
  }

  // Cross-entropy of the cached forward output against `label`.
  static T cross_entropy(const std::vector<T>& probs, size_t label) {
    const T p = std::max(probs[label], static_cast<T>(1e-12));
    return -std::log(p);
  }

  // Backward from softmax cross-entropy; accumulates parameter gradients.
  void backward(const ForwardCache<T>& cache, size_t label, GradBuffers<T>& grads) const {
    const std::vector<T>& probs = cache.activations.back();
    std::vector<T> delta(probs.size());
    for (size_t j = 0; j < probs.size(); ++j) {
      delta[j] = probs[j] - (j == label ? T(1) : T(0));
    }
    // The softmax layer itself is folded into the cross-entropy gradient.
    for (size_t i = geometry_.size(); i-- > 0;) {
      const auto& g = geometry_[i];
      switch (g.spec.kind) {
        case LayerKind::Softmax:
          break;  // handled jointly with the loss above
        case LayerKind::ReLU: {
          std::vector<T> dx(g.in_size);
          kernels::relu_backward_t<T>(cache.activations[i].data(), delta.data(), dx.data(),
                                      g.in_size);
          delta = std::move(dx);
          break;
        }
        case LayerKind::Dropout: {
          const auto& scale = cache.dropout_scale[i];
          std::vector<T> dx(g.in_size);
          for (size_t j = 0; j < g.in_size; ++j) dx[j] = delta[j] * scale[j];
          delta = std::move(dx);
          break;
        }
        case LayerKind::Dense: {
          const auto& x = cache.activations[i];
          // dW += delta * x^T (rank-1), db += delta, dx = W^T delta.
          kernels::gemm_nn_t<T>(delta.data(), x.data(), grads.weight_grads[i].data.data(),
                                g.spec.units, 1, g.in_size, true);
          for (size_t j = 0; j < g.spec.units; ++j) grads.bias_grads[i].data[j] += delta[j];
          std::vector<T> dx(g.in_size, T(0));
          const T* w = weights_[i].data.data();
          for (size_t j = 0; j < g.spec.units; ++j) {
            kernels::axpy_t<T>(delta[j], w + j * g.in_size, dx.data(), g.in_size);
          }
          delta = std::move(dx);
          break;
        }
        case LayerKind::MaxPool2D: {
          std::vector<T> dx(g.in_size, T(0));
          const auto& argmax = cache.pool_argmax[i];
          for (size_t o = 0; o < g.out_size; ++o) dx[argmax[o]] += delta[o];
          delta = std::move(dx);
          break;
        }
        case LayerKind::Conv2D: {
          const size_t patch = static_cast<size_t>(g.in_c) * g.spec.kernel * g.spec.kernel;
          const size_t ohw = static_cast<size_t>(g.out_h) * g.out_w;
          const auto& cols = cache.im2col[i];
          // dW += dOut * cols^T
          kernels::gemm_nt_t<T>(delta.data(), cols.data(), grads.weight_grads[i].data.data(),
                                g.out_c, ohw, patch, true);
          for (size_t oc = 0; oc < g.out_c; ++oc) {
            T sum = T(0);
            for (size_t o = 0; o < ohw; ++o) sum += delta[oc * ohw + o];
            grads.bias_grads[i].data[oc] += sum;
          }
          // dcols = W^T * dOut, then scatter back to the input image.
          std::vector<T> dcols(patch * ohw);
          kernels::gemm_tn_t<T>(weights_[i].data.data(), delta.data(), dcols.data(), patch,
                                g.out_c, ohw, false);
          std::vector<T> dx(g.in_size, T(0));
          col2im_add(g, dcols, dx);
          delta = std::move(dx);
          break;
        }
      }
    }
  }

  // w -= scale * grad for every parameter tensor.
  void apply_gradients(const GradBuffers<T>& grads, T scale) {
    for (size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i].size() == 0) continue;
      kernels::axpy_t<T>(-scale, grads.weight_grads[i].data.data(), weights_[i].data.data(),
                         weights_[i].size());
      kernels::axpy_t<T>(-scale, grads.bias_grads[i].data.data(), biases_[i].data.data(),
                         biases_[i].size());
    }
  }

 private:
  std::vector<T> apply_layer(size_t i, const std::vector<T>& x, DropoutMode mode,
                             Rng* dropout_rng, ForwardCache<T>* cache) const {
    const auto& g = geometry_[i];
    switch (g.spec.kind) {
      case LayerKind::Conv2D: {
        const size_t patch = static_cast<size_t>(g.in_c) * g.spec.kernel * g.spec.kernel;
        const size_t ohw = static_cast<size_t>(g.out_h) * g.out_w;
        std::vector<T> cols(patch * ohw);
        im2col(g, x, cols);
        std::vector<T> out(static_cast<size_t>(g.out_c) * ohw);
        kernels::gemm_nn_t<T>(weights_[i].data.data(), cols.data(), out.data(), g.out_c, patch,
                              ohw, false);
        for (size_t oc = 0; oc < g.out_c; ++oc) {
          const T b = biases_[i].data[oc];
          for (size_t o = 0; o < ohw; ++o) out[oc * ohw + o] += b;
        }
        if (cache) cache->im2col[i] = std::move(cols);
        return out;
      }
      case LayerKind::MaxPool2D: {
        std::vector<T> out(g.out_size);
        std::vector<uint32_t> argmax(g.out_size);
        const size_t in_hw = static_cast<size_t>(g.in_h) * g.in_w;
        for (size_t c = 0; c < g.in_c; ++c) {
          for (size_t oy = 0; oy < g.out_h; ++oy) {
            for (size_t ox = 0; ox < g.out_w; ++ox) {
              const size_t y0 = oy * g.spec.stride;
              const size_t x0 = ox * g.spec.stride;
              size_t best_idx = c * in_hw + y0 * g.in_w + x0;
              T best = x[best_idx];
              for (size_t py = 0; py < g.spec.pool; ++py) {
                for (size_t px = 0; px < g.spec.pool; ++px) {
                  const size_t idx = c * in_hw + (y0 + py) * g.in_w + (x0 + px);
                  // Strict > routes ties to the first maximal element.
                  if (x[idx] > best) {
                    best = x[idx];
                    best_idx = idx;
                  }
                }
              }
              const size_t o = c * (static_cast<size_t>(g.out_h) * g.out_w) + oy * g.out_w + ox;
              out[o] = best;
              argmax[o] = static_cast<uint32_t>(best_idx);
            }
          }
        }
        if (cache) cache->pool_argmax[i] = std::move(argmax);
        return out;
      }
      case LayerKind::Dense: {
        std::vector<T> out(g.spec.units);
        kernels::gemm_nn_t<T>(weights_[i].data.data(), x.data(), out.data(), g.spec.units,
                              g.in_size, 1, false);
        for (size_t j = 0; j < g.spec.units; ++j) out[j] += biases_[i].data[j];
        return out;
      }
      case LayerKind::ReLU: {
        std::vector<T> out(g.out_size);
        kernels::relu_t<T>(x.data(), out.data(), g.out_size);
        return out;
      }
      case LayerKind::Dropout: {
        std::vector<T> out(g.out_size);
        std::vector<T> scale(g.out_size, T(1));
        if (mode == DropoutMode::Stochastic && g.spec.rate > 0.0f) {
          if (!dropout_rng) throw Error(Errc::contract, "stochastic dropout requires an rng");
          const T keep = T(1) - static_cast<T>(g.spec.rate);
          const T inv_keep = T(1) / keep;
          for (size_t j = 0; j < g.out_size; ++j) {
            scale[j] = dropout_rng->bernoulli(static_cast<double>(keep)) ? inv_keep : T(0);
            out[j] = x[j] * scale[j];
          }
        } else {
          out = x;
        }
        if (cache) cache->dropout_scale[i] = std::move(scale);
        return out;
      }
      case LayerKind::Softmax: {
        std::vector<T> out(g.out_size);
        T max_logit = x[0];
        for (T v : x) max_logit = std::max(max_logit, v);
        T sum = T(0);
        for (size_t j = 0; j < g.out_size; ++j) {
          out[j] = std::exp(x[j] - max_logit);
          sum += out[j];
        }
        for (auto& v : out) v /= sum;
        return out;
      }
    }
    throw Error(Errc::config, "unknown layer kind");
  }

  void im2col(const LayerGeometry& g, const std::vector<T>& x, std::vector<T>& cols) const {
    const size_t ohw = static_cast<size_t>(g.out_h) * g.out_w;
    const size_t in_hw = static_cast<size_t>(g.in_h) * g.in_w;
    const int pad = static_cast<int>(g.spec.padding);
    size_t row = 0;
    for (size_t c = 0; c < g.in_c; ++c) {
      for (size_t ky = 0; ky < g.spec.kernel; ++ky) {
        for (size_t kx = 0; kx < g.spec.kernel; ++kx, ++row) {
          T* dst = cols.data() + row * ohw;
          for (size_t oy = 0; oy < g.out_h; ++oy) {
            const int y = static_cast<int>(oy * g.spec.stride + ky) - pad;
            for (size_t ox = 0; ox < g.out_w; ++ox) {
              const int xx = static_cast<int>(ox * g.spec.stride + kx) - pad;
              T v = T(0);
              if (y >= 0 && y < static_cast<int>(g.in_h) && xx >= 0 &&
                  xx < static_cast<int>(g.in_w)) {
                v = x[c * in_hw + static_cast<size_t>(y) * g.in_w + static_cast<size_t>(xx)];
              }
              dst[oy * g.out_w + ox] = v;
            }
          }
        }
      }
    }
  }

  void col2im_add(const LayerGeometry& g, const std::vector<T>& dcols, std::vector<T>& dx) const {
    const size_t ohw = static_cast<size_t>(g.out_h) * g.out_w;
    const size_t in_hw = static_cast<size_t>(g.in_h) * g.in_w;
    const int pad = static_cast<int>(g.spec.padding);
    size_t row = 0;
    for (size_t c = 0; c < g.in_c; ++c) {
      for (size_t ky = 0; ky < g.spec.kernel; ++ky) {
        for (size_t kx = 0; kx < g.spec.kernel; ++kx, ++row) {
          const T* src = dcols.data() + row * ohw;
          for (size_t oy = 0; oy < g.out_h; ++oy) {
            const int y = static_cast<int>(oy * g.spec.stride + ky) - pad;
            if (y < 0 || y >= static_cast<int>(g.in_h)) continue;
            for (size_t ox = 0; ox < g.out_w; ++ox) {
              const int xx = static_cast<int>(ox * g.spec.stride + kx) - pad;
              if (xx < 0 || xx >= static_cast<int>(g.in_w)) continue;
              dx[c * in_hw + static_cast<size_t>(y) * g.in_w + static_cast<size_t>(xx)] +=
                  src[oy * g.out_w + ox];
            }
          }
        }
      }
    }
  }

  void check_finite(const std::vector<T>& v, size_t layer) const {
    for (T x : v) {
      if (!std::isfinite(static_cast<double>(x))) {
        throw Error(Errc::numeric_fault,
                    "non-finite activation after layer " + std::to_string(layer) + " (" +
                        to_string(geometry_[layer].spec.kind) + ")");
      }
    }
  }

  ModelConfig config_;
  std::vector<LayerGeometry> geometry_;
  std::vector<Tensor<T>> weights_;
  std::vector<Tensor<T>> biases_;
};

}  // namespace aiskin::nn
