#pragma once

#include <cstddef>

namespace aiskin::kernels::scalar {

// Reference kernels, templated so the double-precision gradient-check path
// shares the exact arithmetic definition with the float production path.
// All matrices are row-major.

// C[m x n] (+)= A[m x k] * B[k x n]
template <typename T>
void gemm_nn(const T* a, const T* b, T* c, size_t m, size_t k, size_t n, bool accumulate) {
  for (size_t i = 0; i < m; ++i) {
    T* crow = c + i * n;
    if (!accumulate) {
      for (size_t j = 0; j < n; ++j) crow[j] = T(0);
    }
    for (size_t l = 0; l < k; ++l) {
      const T av = a[i * k + l];
      const T* brow = b + l * n;
      for (size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

// C[m x n] (+)= A[m x k] * B[n x k]^T   (rows of B dotted with rows of A)
template <typename T>
void gemm_nt(const T* a, const T* b, T* c, size_t m, size_t k, size_t n, bool accumulate) {
  for (size_t i = 0; i < m; ++i) {
    const T* arow = a + i * k;
    for (size_t j = 0; j < n; ++j) {
      const T* brow = b + j * k;
      T sum = T(0);
      for (size_t l = 0; l < k; ++l) sum += arow[l] * brow[l];
      T* out = c + i * n + j;
      *out = accumulate ? *out + sum : sum;
    }
  }
}

// C[m x n] (+)= A[k x m]^T * B[k x n]
template <typename T>
void gemm_tn(const T* a, const T* b, T* c, size_t m, size_t k, size_t n, bool accumulate) {
  if (!accumulate) {
    for (size_t i = 0; i < m * n; ++i) c[i] = T(0);
  }
  for (size_t l = 0; l < k; ++l) {
    const T* brow = b + l * n;
    for (size_t i = 0; i < m; ++i) {
      const T av = a[l * m + i];
      T* crow = c + i * n;
      for (size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

template <typename T>
void axpy(T alpha, const T* x, T* y, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

template <typename T>
T dot(const T* x, const T* y, size_t n) {
  T sum = T(0);
  for (size_t i = 0; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

template <typename T>
void relu(const T* x, T* y, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] = x[i] > T(0) ? x[i] : T(0);
}

// dx = dy where the forward pre-activation was positive, else 0.
template <typename T>
void relu_backward(const T* pre, const T* dy, T* dx, size_t n) {
  for (size_t i = 0; i < n; ++i) dx[i] = pre[i] > T(0) ? dy[i] : T(0);
}

}  // namespace aiskin::kernels::scalar
