#pragma once

#include <bit>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "circdiff/core.hpp"
#include "circdiff/linalg.hpp"
#include "circdiff/poly.hpp"

namespace circdiff {

/// Circulant matrix held by its first row (c_0, ..., c_{n-1}); dense entry (k, l) is
/// c_{(l - k) mod n}.
class Circulant {
 public:
  explicit Circulant(CVector first_row) : row_(std::move(first_row)) {
    if (row_.empty()) throw DomainError("circulant needs at least one entry");
  }

  std::size_t size() const noexcept { return row_.size(); }
  const CVector& first_row() const noexcept { return row_; }
  const cplx& operator[](std::size_t k) const { return row_[k]; }

  /// c_k with the index taken mod n (negative allowed).
  cplx at(long long k) const {
    const auto n = static_cast<long long>(row_.size());
    k %= n;
    if (k < 0) k += n;
    return row_[static_cast<std::size_t>(k)];
  }

  /// max(1, sum_k |c_k|), an upper bound for the spectral radius.
  double scale() const {
    double s = 0.0;
    for (const auto& c : row_) s += std::abs(c);
    return std::max(1.0, s);
  }

 private:
  CVector row_;
};

namespace detail {

inline bool is_power_of_two(std::size_t n) { return n > 0 && std::has_single_bit(n); }

// out_j = sum_k x_k omega^{jk}, omega = e^{+2 pi i / n}; radix-2 when n is a power of two.
inline CVector dft_plus(std::span<const cplx> x) {
  const std::size_t n = x.size();
  CVector out(n);
  if (!is_power_of_two(n) || n < 4) {
    const auto nn = static_cast<long long>(n);
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += x[k] * unit_root(static_cast<long long>((j * k) % n), nn);
      out[j] = acc;
    }
    return out;
  }
  // Iterative Cooley-Tukey, decimation in time.
  const int bits = std::countr_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    out[r] = x[i];
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    for (std::size_t start = 0; start < n; start += len)
      for (std::size_t k = 0; k < half; ++k) {
        const cplx w = unit_root(static_cast<long long>(k * (n / len)), static_cast<long long>(n));
        const cplx u = out[start + k];
        const cplx v = out[start + k + half] * w;
        out[start + k] = u + v;
        out[start + k + half] = u - v;
      }
  }
  return out;
}

// out_k = (1/n) sum_j x_j omega^{-jk}.
inline CVector dft_minus_normalised(std::span<const cplx> x) {
  CVector conj_in(x.begin(), x.end());
  for (auto& v : conj_in) v = std::conj(v);
  CVector out = dft_plus(conj_in);
  const double inv = 1.0 / static_cast<double>(x.size());
  for (auto& v : out) v = std::conj(v) * inv;
  return out;
}

}  // namespace detail

/// lambda_j = f(omega_{j}) for j = 0..n-1, f(x) = sum_k c_k x^k, in frequency order.
inline CVector frequency_values(const Circulant& c) { return detail::dft_plus(c.first_row()); }

/// Inverse of frequency_values. Coefficient components below the transform's rounding
/// level (8 n eps max|lambda|) are set to exactly zero.
inline Circulant from_frequency_values(std::span<const cplx> values) {
  if (values.empty()) throw DomainError("from_frequency_values: empty spectrum");
  CVector row = detail::dft_minus_normalised(values);
  const double noise = 8.0 * static_cast<double>(values.size()) * kEps * max_abs(values);
  for (auto& c : row) {
    const double re = std::abs(c.real()) <= noise ? 0.0 : c.real();
    const double im = std::abs(c.imag()) <= noise ? 0.0 : c.imag();
    c = cplx(re, im);
  }
  return Circulant(std::move(row));
}

/// The unique circulant whose eigenvalue at omega_{j-1} is the j-th root in canonical order.
inline Circulant from_spectrum(const RootSet& roots) { return from_frequency_values(roots.values()); }

/// Spectrum in canonical order together with the frequency index of each entry.
struct OrderedSpectrum {
  RootSet roots;
  std::vector<std::size_t> frequency;  // roots[i] == f(omega_{frequency[i]})
};

inline OrderedSpectrum spectrum_with_order(const Circulant& c) {
  const CVector freq = frequency_values(c);
  OrderedSpectrum out;
  out.frequency = canonical_permutation(freq);
  out.roots = canonical_order(freq);
  return out;
}

inline RootSet spectrum(const Circulant& c) { return canonical_order(frequency_values(c)); }

/// Product of circulants as a circular convolution of first rows.
inline Circulant multiply(const Circulant& x, const Circulant& y) {
  if (x.size() != y.size()) throw DomainError("circulant multiply: size mismatch");
  const std::size_t n = x.size();
  CVector row(n, cplx(0.0, 0.0));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) row[l] += x[m] * y[(l + n - m) % n];
  return Circulant(std::move(row));
}

/// C*: first row (conj c_0, conj c_{n-1}, ..., conj c_1).
inline Circulant adjoint(const Circulant& c) {
  const std::size_t n = c.size();
  CVector row(n);
  for (std::size_t l = 0; l < n; ++l) row[l] = std::conj(c[(n - l) % n]);
  return Circulant(std::move(row));
}

/// A = C C* from the closed forms
///   a_0 = sum_j |c_j|^2,
///   a_k = sum_{j<k} c_j conj(c_{n-k+j}) + sum_{j<n-k} c_{k+j} conj(c_j).
inline Circulant gram(const Circulant& c) {
  const std::size_t n = c.size();
  CVector a(n, cplx(0.0, 0.0));
  double a0 = 0.0;
  for (const auto& v : c.first_row()) a0 += std::norm(v);
  a[0] = a0;
  for (std::size_t k = 1; k < n; ++k) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < k; ++j) s += c[j] * std::conj(c[n - k + j]);
    for (std::size_t j = 0; j + k < n; ++j) s += c[k + j] * std::conj(c[j]);
    a[k] = s;
  }
  return Circulant(std::move(a));
}

/// Reflection property: Im c_0 ~ 0 and c_{n-k} ~ conj(c_k), relative to c.scale().
inline bool is_selfadjoint(const Circulant& c, double tol) {
  const std::size_t n = c.size();
  const double s = c.scale();
  if (std::abs(c[0].imag()) > tol * s) return false;
  for (std::size_t k = 1; k < n; ++k)
    if (std::abs(c[n - k] - std::conj(c[k])) > tol * s) return false;
  return true;
}

/// The positive semidefinite circulant square root of C C*: eigenvalue |lambda| at the
/// same frequency as lambda. For a circulant built by from_spectrum this is from_spectrum
/// of the canonically ordered moduli.
inline Circulant sqrt_gram(const Circulant& c) {
  CVector freq = frequency_values(c);
  for (auto& v : freq) v = std::abs(v);
  return from_frequency_values(freq);
}

inline DenseMatrix to_dense(const Circulant& c) {
  const std::size_t n = c.size();
  DenseMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) m(k, l) = c[(l + n - k) % n];
  return m;
}

/// C_{n-1}: the top-left (n-1) x (n-1) block.
inline DenseMatrix leading_submatrix(const Circulant& c) {
  if (c.size() < 2) throw DomainError("leading_submatrix: circulant of size 1 has no submatrix");
  return to_dense(c).leading(c.size() - 1);
}

/// Fourier matrix with entry (k, j) = omega_j^k; its columns are the circulant eigenvectors.
inline DenseMatrix fourier_matrix(std::size_t n) {
  DenseMatrix f(n, n);
  const auto nn = static_cast<long long>(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) f(k, j) = unit_root(static_cast<long long>((j * k) % n), nn);
  return f;
}

}  // namespace circdiff
