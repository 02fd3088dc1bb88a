#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "aiskin/common/error.hpp"

namespace aiskin::nn {

template <typename T>
struct Tensor {
  std::vector<uint32_t> shape;
  std::vector<T> data;

  Tensor() = default;
  Tensor(std::vector<uint32_t> s, std::vector<T> d) : shape(std::move(s)), data(std::move(d)) {}

  static Tensor zeros(std::vector<uint32_t> s) {
    size_t n = 1;
    for (uint32_t d : s) n *= d;
    return Tensor(std::move(s), std::vector<T>(n, T(0)));
  }

  size_t size() const { return data.size(); }

  void validate() const {
    size_t n = 1;
    for (uint32_t d : shape) n *= d;
    if (n != data.size()) {
      throw Error(Errc::invalid_argument, "tensor shape does not match buffer size");
    }
    for (T v : data) {
      if (!std::isfinite(static_cast<double>(v))) {
        throw Error(Errc::numeric_fault, "tensor contains non-finite entries");
      }
    }
  }

  bool operator==(const Tensor&) const = default;
};

using TensorF32 = Tensor<float>;

}  // namespace aiskin::nn
