#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace polar::kernels {

enum class Backend { scalar, avx2 };

// Scalar reference implementations. The dispatched entry points below must
// agree with these up to floating-point reassociation (the SIMD variants sum
// in lanes, so the rounding of intermediate additions may differ).
namespace scalar {
double squared_norm(std::span<const double> v) noexcept;
void scale(std::span<double> v, double s) noexcept;
double sparse_dot(std::span<const std::uint32_t> idx,
                  std::span<const double> val,
                  std::span<const double> dense) noexcept;
void sparse_axpy(double a, std::span<const std::uint32_t> idx,
                 std::span<const double> val,
                 std::span<double> dense) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define POLAR_HAVE_AVX2_KERNELS 1
namespace avx2 {
double squared_norm(std::span<const double> v) noexcept;
void scale(std::span<double> v, double s) noexcept;
double sparse_dot(std::span<const std::uint32_t> idx,
                  std::span<const double> val,
                  std::span<const double> dense) noexcept;
void sparse_axpy(double a, std::span<const std::uint32_t> idx,
                 std::span<const double> val,
                 std::span<double> dense) noexcept;
}  // namespace avx2
#endif

// Backend selection. The default is the fastest variant the host supports;
// the POLAR_KERNELS environment variable ("scalar", "avx2") overrides it at
// startup. set_backend returns false if the requested variant cannot run on
// this host.
bool backend_supported(Backend b) noexcept;
Backend active_backend() noexcept;
bool set_backend(Backend b) noexcept;
std::string_view backend_name(Backend b) noexcept;

// Dispatched entry points.
//
//   squared_norm(v)            -> sum v_i^2
//   scale(v, s)                -> v_i *= s
//   sparse_dot(idx, val, d)    -> sum val_k * d[idx_k]
//   sparse_axpy(a, idx, val, d)-> d[idx_k] += a * val_k
//
// idx and val must have equal length, every idx_k < dense.size(), and idx
// must not contain duplicates (sparse_axpy gathers before it stores).
double squared_norm(std::span<const double> v) noexcept;
void scale(std::span<double> v, double s) noexcept;
double sparse_dot(std::span<const std::uint32_t> idx,
                  std::span<const double> val,
                  std::span<const double> dense) noexcept;
void sparse_axpy(double a, std::span<const std::uint32_t> idx,
                 std::span<const double> val,
                 std::span<double> dense) noexcept;

}  // namespace polar::kernels
