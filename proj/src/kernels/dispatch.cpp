#include "aiskin/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>

#if defined(__x86_64__) || defined(__i386__)
#define AISKIN_X86 1
#else
#define AISKIN_X86 0
#endif

namespace aiskin::kernels {

#if AISKIN_X86
namespace avx2 {
float dot(const float* x, const float* y, size_t n);
void axpy(float alpha, const float* x, float* y, size_t n);
void relu(const float* x, float* y, size_t n);
void relu_backward(const float* pre, const float* dy, float* dx, size_t n);
void gemm_nn(const float* a, const float* b, float* c, size_t m, size_t k, size_t n, bool acc);
void gemm_nt(const float* a, const float* b, float* c, size_t m, size_t k, size_t n, bool acc);
void gemm_tn(const float* a, const float* b, float* c, size_t m, size_t k, size_t n, bool acc);
}  // namespace avx2
#endif

namespace {

bool detect_avx2() {
#if AISKIN_X86
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("AISKIN_FORCE_SCALAR"); env && env[0] && env[0] != '0') {
    return Isa::Scalar;
  }
  return detect_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa> g_isa{initial_isa()};

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "?";
}

bool avx2_available() {
  static const bool available = detect_avx2();
  return available;
}

Isa active_isa() { return g_isa.load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_available()) {
    return;  // keep scalar when the CPU cannot run the requested variant
  }
  g_isa.store(isa, std::memory_order_relaxed);
}

#if AISKIN_X86
#define AISKIN_DISPATCH(fn, ...)                          \
  if (active_isa() == Isa::Avx2) return avx2::fn(__VA_ARGS__); \
  return scalar::fn(__VA_ARGS__)
#else
#define AISKIN_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void gemm_nn(const float* a, const float* b, float* c, size_t m, size_t k, size_t n, bool acc) {
  AISKIN_DISPATCH(gemm_nn, a, b, c, m, k, n, acc);
}

void gemm_nt(const float* a, const float* b, float* c, size_t m, size_t k, size_t n, bool acc) {
  AISKIN_DISPATCH(gemm_nt, a, b, c, m, k, n, acc);
}

void gemm_tn(const float* a, const float* b, float* c, size_t m, size_t k, size_t n, bool acc) {
  AISKIN_DISPATCH(gemm_tn, a, b, c, m, k, n, acc);
}

void axpy(float alpha, const float* x, float* y, size_t n) {
  AISKIN_DISPATCH(axpy, alpha, x, y, n);
}

float dot(const float* x, const float* y, size_t n) {
  AISKIN_DISPATCH(dot, x, y, n);
}

void relu(const float* x, float* y, size_t n) {
  AISKIN_DISPATCH(relu, x, y, n);
}

void relu_backward(const float* pre, const float* dy, float* dx, size_t n) {
  AISKIN_DISPATCH(relu_backward, pre, dy, dx, n);
}

#undef AISKIN_DISPATCH

}  // namespace aiskin::kernels
