// AVX2+FMA variants of the float kernels. This translation unit is compiled
// with -mavx2 -mfma; callers must gate on avx2_available() before taking
// these entry points.

#include <cstddef>

#ifdef __AVX2__
#include <immintrin.h>

namespace aiskin::kernels::avx2 {

namespace {

inline float hsum256(__m256 v) {
  __m128 lo = _mm256_castps256_ps128(v);
  __m128 hi = _mm256_extractf128_ps(v, 1);
  lo = _mm_add_ps(lo, hi);
  __m128 shuf = _mm_movehdup_ps(lo);
  __m128 sums = _mm_add_ps(lo, shuf);
  shuf = _mm_movehl_ps(shuf, sums);
  sums = _mm_add_ss(sums, shuf);
  return _mm_cvtss_f32(sums);
}

}  // namespace

float dot(const float* x, const float* y, size_t n) {
  size_t i = 0;
  __m256 acc0 = _mm256_setzero_ps();
  __m256 acc1 = _mm256_setzero_ps();
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i), acc0);
    acc1 = _mm256_fmadd_ps(_mm256_loadu_ps(x + i + 8), _mm256_loadu_ps(y + i + 8), acc1);
  }
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i), acc0);
  }
  float sum = hsum256(_mm256_add_ps(acc0, acc1));
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void axpy(float alpha, const float* x, float* y, size_t n) {
  const __m256 va = _mm256_set1_ps(alpha);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 vy = _mm256_loadu_ps(y + i);
    vy = _mm256_fmadd_ps(va, _mm256_loadu_ps(x + i), vy);
    _mm256_storeu_ps(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void relu(const float* x, float* y, size_t n) {
  const __m256 zero = _mm256_setzero_ps();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(y + i, _mm256_max_ps(_mm256_loadu_ps(x + i), zero));
  }
  for (; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_backward(const float* pre, const float* dy, float* dx, size_t n) {
  const __m256 zero = _mm256_setzero_ps();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 mask = _mm256_cmp_ps(_mm256_loadu_ps(pre + i), zero, _CMP_GT_OQ);
    _mm256_storeu_ps(dx + i, _mm256_and_ps(_mm256_loadu_ps(dy + i), mask));
  }
  for (; i < n; ++i) dx[i] = pre[i] > 0.0f ? dy[i] : 0.0f;
}

void gemm_nn(const float* a, const float* b, float* c, size_t m, size_t k, size_t n,
             bool accumulate) {
  if (n == 1) {
    // Degenerates to a matrix-vector product; row dots vectorize over k.
    for (size_t i = 0; i < m; ++i) {
      float sum = dot(a + i * k, b, k);
      c[i] = accumulate ? c[i] + sum : sum;
    }
    return;
  }
  for (size_t i = 0; i < m; ++i) {
    float* crow = c + i * n;
    if (!accumulate) {
      size_t j = 0;
      const __m256 zero = _mm256_setzero_ps();
      for (; j + 8 <= n; j += 8) _mm256_storeu_ps(crow + j, zero);
      for (; j < n; ++j) crow[j] = 0.0f;
    }
    for (size_t l = 0; l < k; ++l) {
      const __m256 av = _mm256_set1_ps(a[i * k + l]);
      const float* brow = b + l * n;
      size_t j = 0;
      for (; j + 8 <= n; j += 8) {
        __m256 vc = _mm256_loadu_ps(crow + j);
        vc = _mm256_fmadd_ps(av, _mm256_loadu_ps(brow + j), vc);
        _mm256_storeu_ps(crow + j, vc);
      }
      const float as = a[i * k + l];
      for (; j < n; ++j) crow[j] += as * brow[j];
    }
  }
}

void gemm_nt(const float* a, const float* b, float* c, size_t m, size_t k, size_t n,
             bool accumulate) {
  for (size_t i = 0; i < m; ++i) {
    const float* arow = a + i * k;
    for (size_t j = 0; j < n; ++j) {
      float sum = dot(arow, b + j * k, k);
      float* out = c + i * n + j;
      *out = accumulate ? *out + sum : sum;
    }
  }
}

void gemm_tn(const float* a, const float* b, float* c, size_t m, size_t k, size_t n,
             bool accumulate) {
  if (!accumulate) {
    for (size_t i = 0; i < m * n; ++i) c[i] = 0.0f;
  }
  for (size_t l = 0; l < k; ++l) {
    const float* brow = b + l * n;
    for (size_t i = 0; i < m; ++i) {
      const __m256 av = _mm256_set1_ps(a[l * m + i]);
      float* crow = c + i * n;
      size_t j = 0;
      for (; j + 8 <= n; j += 8) {
        __m256 vc = _mm256_loadu_ps(crow + j);
        vc = _mm256_fmadd_ps(av, _mm256_loadu_ps(brow + j), vc);
        _mm256_storeu_ps(crow + j, vc);
      }
      const float as = a[l * m + i];
      for (; j < n; ++j) crow[j] += as * brow[j];
    }
  }
}

}  // namespace aiskin::kernels::avx2

#endif  // __AVX2__
