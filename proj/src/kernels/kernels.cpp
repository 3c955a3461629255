#include "polar/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace polar::kernels {

namespace scalar {

double squared_norm(std::span<const double> v) noexcept {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

void scale(std::span<double> v, double s) noexcept {
  for (double& x : v) x *= s;
}

double sparse_dot(std::span<const std::uint32_t> idx,
                  std::span<const double> val,
                  std::span<const double> dense) noexcept {
  double acc = 0.0;
  for (std::size_t k = 0; k < idx.size(); ++k) acc += val[k] * dense[idx[k]];
  return acc;
}

void sparse_axpy(double a, std::span<const std::uint32_t> idx,
                 std::span<const double> val,
                 std::span<double> dense) noexcept {
  for (std::size_t k = 0; k < idx.size(); ++k) dense[idx[k]] += a * val[k];
}

}  // namespace scalar

namespace {

bool host_has_avx2() noexcept {
#if defined(POLAR_HAVE_AVX2_KERNELS)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() noexcept {
  const char* env = std::getenv("POLAR_KERNELS");
  if (env != nullptr) {
    std::string_view want(env);
    if (want == "scalar") return Backend::scalar;
    if (want == "avx2" && host_has_avx2()) return Backend::avx2;
    // Unknown or unsupported request: fall through to autodetection.
  }
  return host_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> g_backend{initial_backend()};

}  // namespace

bool backend_supported(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return host_has_avx2();
  }
  return false;
}

Backend active_backend() noexcept { return g_backend.load(std::memory_order_relaxed); }

bool set_backend(Backend b) noexcept {
  if (!backend_supported(b)) return false;
  g_backend.store(b, std::memory_order_relaxed);
  return true;
}

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "?";
}

double squared_norm(std::span<const double> v) noexcept {
#if defined(POLAR_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::avx2) return avx2::squared_norm(v);
#endif
  return scalar::squared_norm(v);
}

void scale(std::span<double> v, double s) noexcept {
#if defined(POLAR_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::avx2) return avx2::scale(v, s);
#endif
  return scalar::scale(v, s);
}

double sparse_dot(std::span<const std::uint32_t> idx,
                  std::span<const double> val,
                  std::span<const double> dense) noexcept {
#if defined(POLAR_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::avx2) return avx2::sparse_dot(idx, val, dense);
#endif
  return scalar::sparse_dot(idx, val, dense);
}

void sparse_axpy(double a, std::span<const std::uint32_t> idx,
                 std::span<const double> val,
                 std::span<double> dense) noexcept {
#if defined(POLAR_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::avx2) return avx2::sparse_axpy(a, idx, val, dense);
#endif
  return scalar::sparse_axpy(a, idx, val, dense);
}

}  // namespace polar::kernels
