// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma;
// callers must check backend_supported(Backend::avx2) before dispatching here.

#include "polar/kernels.hpp"

#if defined(POLAR_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace polar::kernels::avx2 {

double squared_norm(std::span<const double> v) noexcept {
  const double* p = v.data();
  const std::size_t n = v.size();
  const std::size_t tail = n % 4;
  const std::size_t head = n - tail;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < head; i += 4) {
    __m256d x = _mm256_loadu_pd(p + i);
    acc = _mm256_fmadd_pd(x, x, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (std::size_t i = head; i < n; ++i) sum += p[i] * p[i];
  return sum;
}

void scale(std::span<double> v, double s) noexcept {
  double* p = v.data();
  const std::size_t n = v.size();
  const std::size_t tail = n % 4;
  const std::size_t head = n - tail;
  const __m256d vs = _mm256_set1_pd(s);
  for (std::size_t i = 0; i < head; i += 4) {
    _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), vs));
  }
  for (std::size_t i = head; i < n; ++i) p[i] *= s;
}

double sparse_dot(std::span<const std::uint32_t> idx,
                  std::span<const double> val,
                  std::span<const double> dense) noexcept {
  const std::size_t n = idx.size();
  const std::size_t tail = n % 4;
  const std::size_t head = n - tail;
  const double* base = dense.data();
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t k = 0; k < head; k += 4) {
    __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx.data() + k));
    __m256d d = _mm256_i32gather_pd(base, vi, 8);
    __m256d x = _mm256_loadu_pd(val.data() + k);
    acc = _mm256_fmadd_pd(x, d, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (std::size_t k = head; k < n; ++k) sum += val[k] * base[idx[k]];
  return sum;
}

void sparse_axpy(double a, std::span<const std::uint32_t> idx,
                 std::span<const double> val,
                 std::span<double> dense) noexcept {
  // Gather-modify-store; idx must not repeat within the call or the gathered
  // values would go stale before the scalar stores land.
  const std::size_t n = idx.size();
  const std::size_t tail = n % 4;
  const std::size_t head = n - tail;
  double* base = dense.data();
  const __m256d va = _mm256_set1_pd(a);
  alignas(32) double lanes[4];
  for (std::size_t k = 0; k < head; k += 4) {
    __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx.data() + k));
    __m256d d = _mm256_i32gather_pd(base, vi, 8);
    __m256d x = _mm256_loadu_pd(val.data() + k);
    _mm256_store_pd(lanes, _mm256_fmadd_pd(va, x, d));
    base[idx[k + 0]] = lanes[0];
    base[idx[k + 1]] = lanes[1];
    base[idx[k + 2]] = lanes[2];
    base[idx[k + 3]] = lanes[3];
  }
  for (std::size_t k = head; k < n; ++k) base[idx[k]] += a * val[k];
}

}  // namespace polar::kernels::avx2

#endif  // POLAR_HAVE_AVX2_KERNELS
