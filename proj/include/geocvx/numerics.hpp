#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "geocvx/error.hpp"

namespace geocvx {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Tolerance policy shared by every module.
///
/// `eq_abs` bounds residuals of exact algebraic identities, `margin` is the
/// minimum escape distance before a convexity violation is reported,
/// `fd_step` / `fd_tol` drive the second-difference curvature checks.
struct Tolerances {
  double eq_abs = 1e-12;
  double margin = 1e-9;
  double fd_step = 1e-4;
  double fd_tol = 1e-6;

  /// Throws DomainError unless all fields are positive and fd_tol >= fd_step^2.
  void validate() const {
    if (!(eq_abs > 0 && margin > 0 && fd_step > 0 && fd_tol > 0)) {
      throw DomainError("tolerances must be strictly positive");
    }
    if (fd_tol < fd_step * fd_step) {
      throw DomainError("fd_tol must be at least fd_step^2");
    }
  }
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// SplitMix64 generator. Streams are addressed by (seed, index), so any trial
/// can be replayed without generating the ones before it.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(Seed seed, std::uint64_t stream = 0)
      : state_(detail::splitmix64(seed.value ^ detail::splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>((*this)() % span);
  }

  /// Child seed for a nested stream (e.g. the trials of one polygon in a suite).
  Seed derive(std::uint64_t index) { return Seed{detail::splitmix64((*this)() ^ index)}; }

 private:
  std::uint64_t state_;
};

/// Inverse hyperbolic tangent via log1p, accurate up to |x| -> 1.
template <std::floating_point T>
T atanh_stable(T x) {
  if (!(std::abs(x) < T(1))) {
    throw DomainError("atanh_stable: |x| must be < 1, got " + std::to_string(static_cast<double>(x)));
  }
  // Evaluated on |x| so that the log1p argument never approaches -1.
  const T a = std::abs(x);
  return std::copysign(T(0.5) * std::log1p(T(2) * a / (T(1) - a)), x);
}

/// Central second difference (f(x-h) - 2f(x) + f(x+h)) / h^2.
template <std::floating_point T, class F>
T second_fd(F&& f, T x, T h) {
  if (!(h > T(0))) throw DomainError("second_fd: step must be positive");
  const T lo = f(x - h);
  const T mid = f(x);
  const T hi = f(x + h);
  if (!std::isfinite(lo) || !std::isfinite(mid) || !std::isfinite(hi)) {
    throw NonFiniteError("second_fd: non-finite evaluation near x = " + std::to_string(static_cast<double>(x)));
  }
  return (lo - T(2) * mid + hi) / (h * h);
}

inline double coth(double x) { return 1.0 / std::tanh(x); }
inline double cot(double x) { return std::cos(x) / std::sin(x); }

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, 2 * kPi);
  return a <= -kPi ? a + 2 * kPi : a;
}

}  // namespace geocvx
