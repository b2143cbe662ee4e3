#pragma once

#include <gtest/gtest.h>

#include <random>

#include "circdiff/circdiff.hpp"

namespace circdiff::testing {

inline ::testing::AssertionResult complex_near(cplx a, cplx b, double tol) {
  if (std::abs(a - b) <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "(" << a.real() << "," << a.imag() << ") vs (" << b.real() << ","
                                       << b.imag() << "), |diff| = " << std::abs(a - b) << " > " << tol;
}

inline ::testing::AssertionResult same_multiset(std::span<const cplx> a, std::span<const cplx> b, double tol) {
  if (a.size() != b.size())
    return ::testing::AssertionFailure() << "sizes " << a.size() << " and " << b.size();
  const double d = match_multisets(a, b).max_distance;
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "matched distance " << d << " > " << tol;
}

inline ::testing::AssertionResult reals_near(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size())
    return ::testing::AssertionFailure() << "sizes " << a.size() << " and " << b.size();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::abs(a[k] - b[k]) > tol)
      return ::testing::AssertionFailure() << "entry " << k << ": " << a[k] << " vs " << b[k];
  return ::testing::AssertionSuccess();
}

inline DenseMatrix matrix_of(const std::vector<CVector>& rows) {
  DenseMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

/// Test-local random source, independent of the library's generator.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double normal() { return nd_(gen_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  std::size_t integer(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
  }
  cplx complex(double sigma = 1.0) { return {sigma * normal(), sigma * normal()}; }

  CVector gaussian_roots(std::size_t n, double sigma = 1.0) {
    CVector r;
    for (std::size_t k = 0; k < n; ++k) r.push_back(complex(sigma));
    return r;
  }

  DenseMatrix matrix(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = complex();
    return m;
  }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> nd_{0.0, 1.0};
};

}  // namespace circdiff::testing
