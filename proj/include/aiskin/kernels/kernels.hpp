#pragma once

#include <cstddef>

#include "aiskin/kernels/kernels_scalar.hpp"

namespace aiskin::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);

// ISA selected at process start: AVX2+FMA when the CPU supports both and
// AISKIN_FORCE_SCALAR is not set. Overridable for equivalence tests.
Isa active_isa();
void force_isa(Isa isa);
bool avx2_available();

// Dispatched float kernels. Semantics match the scalar reference templates
// in kernels_scalar.hpp exactly; only summation order may differ.
void gemm_nn(const float* a, const float* b, float* c, size_t m, size_t k, size_t n,
             bool accumulate);
void gemm_nt(const float* a, const float* b, float* c, size_t m, size_t k, size_t n,
             bool accumulate);
void gemm_tn(const float* a, const float* b, float* c, size_t m, size_t k, size_t n,
             bool accumulate);
void axpy(float alpha, const float* x, float* y, size_t n);
float dot(const float* x, const float* y, size_t n);
void relu(const float* x, float* y, size_t n);
void relu_backward(const float* pre, const float* dy, float* dx, size_t n);

// Generic entry points so templated code picks the dispatched path for
// float and the scalar reference for double.
template <typename T>
inline void gemm_nn_t(const T* a, const T* b, T* c, size_t m, size_t k, size_t n, bool acc) {
  scalar::gemm_nn(a, b, c, m, k, n, acc);
}
template <>
inline void gemm_nn_t<float>(const float* a, const float* b, float* c, size_t m, size_t k,
                             size_t n, bool acc) {
  gemm_nn(a, b, c, m, k, n, acc);
}

template <typename T>
inline void gemm_nt_t(const T* a, const T* b, T* c, size_t m, size_t k, size_t n, bool acc) {
  scalar::gemm_nt(a, b, c, m, k, n, acc);
}
template <>
inline void gemm_nt_t<float>(const float* a, const float* b, float* c, size_t m, size_t k,
                             size_t n, bool acc) {
  gemm_nt(a, b, c, m, k, n, acc);
}

template <typename T>
inline void gemm_tn_t(const T* a, const T* b, T* c, size_t m, size_t k, size_t n, bool acc) {
  scalar::gemm_tn(a, b, c, m, k, n, acc);
}
template <>
inline void gemm_tn_t<float>(const float* a, const float* b, float* c, size_t m, size_t k,
                             size_t n, bool acc) {
  gemm_tn(a, b, c, m, k, n, acc);
}

template <typename T>
inline void axpy_t(T alpha, const T* x, T* y, size_t n) {
  scalar::axpy(alpha, x, y, n);
}
template <>
inline void axpy_t<float>(float alpha, const float* x, float* y, size_t n) {
  axpy(alpha, x, y, n);
}

template <typename T>
inline void relu_t(const T* x, T* y, size_t n) {
  scalar::relu(x, y, n);
}
template <>
inline void relu_t<float>(const float* x, float* y, size_t n) {
  relu(x, y, n);
}

template <typename T>
inline void relu_backward_t(const T* pre, const T* dy, T* dx, size_t n) {
  scalar::relu_backward(pre, dy, dx, n);
}
template <>
inline void relu_backward_t<float>(const float* pre, const float* dy, float* dx, size_t n) {
  relu_backward(pre, dy, dx, n);
}

}  // namespace aiskin::kernels
