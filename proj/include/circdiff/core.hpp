#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace circdiff {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;
using RVector = std::vector<double>;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline bool is_finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input was violated (wrong size, bad degree, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed to converge. Carries the best residual seen.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : Error(what + " (best residual " + format_residual(best_residual) + ")"),
        best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  static std::string format_residual(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", r);
    return buf;
  }

  double best_residual_;
};

/// Per-instance normaliser max(1, max_j |z_j|); all tolerances are relative to it.
inline double scale_of(std::span<const cplx> values) {
  double s = 1.0;
  for (const auto& v : values) s = std::max(s, std::abs(v));
  return s;
}

inline double max_abs(std::span<const cplx> values) {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

namespace detail {

// e^{2 pi i num/den} for num/den in [0, 1/4], folded at pi/4 for accuracy.
inline cplx first_quadrant_root(long long num, long long den) {
  if (num == 0) return {1.0, 0.0};
  if (4 * num == den) return {0.0, 1.0};
  if (8 * num <= den) {
    const double t = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
  }
  const double t = 2.0 * kPi * static_cast<double>(den - 4 * num) / static_cast<double>(4 * den);
  return {std::sin(t), std::cos(t)};
}

}  // namespace detail

/// e^{2 pi i k / n}, exact at multiples of a quarter turn and symmetric across quadrants.
inline cplx unit_root(long long k, long long n) {
  k %= n;
  if (k < 0) k += n;
  if (2 * k > n) return std::conj(unit_root(n - k, n));
  if (2 * k == n) return {-1.0, 0.0};
  if (4 * k > n) {
    const cplx r = detail::first_quadrant_root(4 * k - n, 4 * n);
    return {-r.imag(), r.real()};
  }
  return detail::first_quadrant_root(k, n);
}

}  // namespace circdiff
