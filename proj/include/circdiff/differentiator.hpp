#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "circdiff/circulant.hpp"
#include "circdiff/core.hpp"
#include "circdiff/linalg.hpp"
#include "circdiff/poly.hpp"

namespace circdiff {

/// Critical points of p(z) = prod (z - lambda_j) obtained as the eigenvalues of the leading
/// (n-1) x (n-1) block of the circulant with spectrum lambda.
struct CriticalPointResult {
  Spectrum critical_points;
  Circulant circulant_used;
  /// Relative coefficient mismatch between n det(zI - C_{n-1}) and p'(z).
  double verification_residual = 0.0;
};

/// max_k |a_k - b_k| / max_k |b_k|; infinite when any coefficient is not finite.
inline double relative_coefficient_error(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DomainError("coefficient vectors differ in length");
  double diff = 0.0, ref = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!is_finite(a[k]) || !is_finite(b[k])) return std::numeric_limits<double>::infinity();
    diff = std::max(diff, std::abs(a[k] - b[k]));
    ref = std::max(ref, std::abs(b[k]));
  }
  return ref > 0.0 ? diff / ref : diff;
}

/// Eigensolver-independent check of p'(z) = n det(zI - C_{n-1}) through char_poly.
inline double verify_derivative_identity(const RootSet& roots) {
  const std::size_t n = roots.size();
  if (n < 2) throw DomainError("verify_derivative_identity: need at least two roots");
  const Circulant c = from_spectrum(roots);
  const Polynomial sub = char_poly(leading_submatrix(c));
  CVector scaled = sub.coeffs();
  for (auto& v : scaled) v *= static_cast<double>(n);
  const CVector dp = derivative(from_roots(roots));
  return relative_coefficient_error(scaled, dp);
}

inline CriticalPointResult critical_points(const RootSet& roots) {
  if (roots.size() < 2) throw DomainError("critical_points: need at least two roots");
  Circulant c = from_spectrum(roots);
  CriticalPointResult out{eig_general(leading_submatrix(c)), std::move(c), 0.0};
  out.verification_residual = verify_derivative_identity(roots);
  const bool finite = std::all_of(out.critical_points.values.begin(), out.critical_points.values.end(),
                                  [](const cplx& w) { return is_finite(w); });
  if (!finite || !std::isfinite(out.verification_residual))
    throw ConvergenceError("critical_points: result is not finite (input magnitudes overflow)",
                           out.verification_residual);
  return out;
}

/// B = C_{n-1} C_{n-1}* and B~ = C_{n-1}* C_{n-1}, built entrywise from
///   b_{lk}  = a_{k-l} - c_{n-l} conj(c_{n-k}),
///   b~_{lk} = a_{k-l} - c_k conj(c_l),      1 <= l <= k <= n-1,
/// with a = gram(C) and a_{-m} = conj(a_m); the lower triangle follows by symmetry.
struct BMatrices {
  DenseMatrix b;
  DenseMatrix b_tilde;
};

inline BMatrices b_matrices(const Circulant& c) {
  const std::size_t n = c.size();
  if (n < 2) throw DomainError("b_matrices: need n >= 2");
  const Circulant a = gram(c);
  const std::size_t m = n - 1;
  BMatrices out{DenseMatrix(m, m), DenseMatrix(m, m)};
  for (std::size_t l = 1; l <= m; ++l)
    for (std::size_t k = l; k <= m; ++k) {
      const cplx akl = a[k - l];
      const cplx b = akl - c[n - l] * std::conj(c[n - k]);
      const cplx bt = akl - c[k] * std::conj(c[l]);
      out.b(l - 1, k - 1) = b;
      out.b(k - 1, l - 1) = std::conj(b);
      out.b_tilde(l - 1, k - 1) = bt;
      out.b_tilde(k - 1, l - 1) = std::conj(bt);
    }
  for (std::size_t i = 0; i < m; ++i) {
    out.b(i, i) = out.b(i, i).real();
    out.b_tilde(i, i) = out.b_tilde(i, i).real();
  }
  return out;
}

/// ||[M, M*]||_F / ||M - t I||_F^2 for M = C_{n-1} and t its mean diagonal entry, times
/// (n - 2) / 2. Invariant under translation and scaling of the roots. For nearly collinear
/// roots it approximates sqrt(1 - |sum (z - mu)^2| / sum |z - mu|^2). Zero when n = 2.
inline double submatrix_normality_defect(const RootSet& roots) {
  const std::size_t n = roots.size();
  if (n < 2) throw DomainError("submatrix_normality_defect: need at least two roots");
  if (n == 2) return 0.0;
  DenseMatrix m = leading_submatrix(from_spectrum(roots));
  const cplx t = m.trace() / static_cast<double>(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) m(k, k) -= t;
  return normality_defect(m) * static_cast<double>(n - 2) / 2.0;
}

/// Whether C_{n-1} is normal; holds exactly when the roots are collinear.
inline bool is_submatrix_normal(const RootSet& roots, double tol) {
  return submatrix_normality_defect(roots) <= tol;
}

/// Characteristic polynomial of the circulant with its (0, 0) entry replaced by c_0 - alpha.
/// It equals p(z) + (alpha / n) p'(z).
inline Polynomial perturbed_char_poly(const RootSet& roots, cplx alpha) {
  if (roots.size() < 1) throw DomainError("perturbed_char_poly: empty root set");
  DenseMatrix m = to_dense(from_spectrum(roots));
  m(0, 0) -= alpha;
  return char_poly(m);
}

}  // namespace circdiff
