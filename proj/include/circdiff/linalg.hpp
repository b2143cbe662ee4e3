#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "circdiff/core.hpp"
#include "circdiff/poly.hpp"

namespace circdiff {

/// Dense row-major complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {}
  DenseMatrix(std::size_t rows, std::size_t cols, CVector entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw DomainError("matrix entry count mismatch");
  }
  /// Row-list construction, mainly for tests: {{a, b}, {c, d}}.
  DenseMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix rows");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static DenseMatrix diagonal(std::span<const cplx> d) {
    DenseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const CVector& entries() const noexcept { return entries_; }

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  DenseMatrix adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  /// Top-left k x k block.
  DenseMatrix leading(std::size_t k) const {
    if (k > rows_ || k > cols_) throw DomainError("leading block larger than matrix");
    DenseMatrix out(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) out(r, c) = (*this)(r, c);
    return out;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  DenseMatrix& operator*=(cplx s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, cplx s) { return a *= s; }
  friend DenseMatrix operator*(cplx s, DenseMatrix a) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

 private:
  void check_same(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  CVector entries_;
};

/// Eigenvalues in canonical order plus a backward-error estimate relative to ||M||_F.
struct Spectrum {
  CVector values;
  double residual = 0.0;
};

namespace detail {

inline void require_square(const DenseMatrix& m, const char* who) {
  if (!m.square() || m.rows() == 0) throw DomainError(std::string(who) + ": need a non-empty square matrix");
}

// Householder reduction to upper Hessenberg form (similarity, eigenvalues preserved).
inline void hessenberg_reduce(DenseMatrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  CVector v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const cplx x0 = h(k + 1, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0, 0.0) : x0 / std::abs(x0);
    const cplx alpha = -phase * xnorm;
    std::fill(v.begin(), v.end(), cplx(0.0, 0.0));
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // Left: H <- (I - beta v v*) H
    for (std::size_t c = k; c < n; ++c) {
      cplx s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, c);
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(i, c) -= v[i] * s;
    }
    // Right: H <- H (I - beta v v*)
    for (std::size_t r = 0; r < n; ++r) {
      cplx s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += h(r, i) * v[i];
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(r, i) -= s * std::conj(v[i]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

// Eigenvalue of [[a, b], [c, d]] closest to d.
inline cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half = 0.5 * (a - d);
  const cplx disc = std::sqrt(half * half + b * c);
  // Roots are d + half +- disc; pick the one nearer d.
  const cplx p = half + disc;
  const cplx m = half - disc;
  return std::abs(p) < std::abs(m) ? d + p : d + m;
}

}  // namespace detail

/// General complex eigenvalues: Hessenberg reduction then single-shift QR with Wilkinson
/// shifts and deflation. Throws ConvergenceError after 30 max(n, 10) sweeps.
inline Spectrum eig_general(const DenseMatrix& m, double tol = kEps) {
  detail::require_square(m, "eig_general");
  const std::size_t n = m.rows();
  const double mnorm = m.frobenius();
  DenseMatrix h = m;
  detail::hessenberg_reduce(h);
  const double dtol = std::max(tol, kEps);

  CVector eig(n);
  double dropped = 0.0;
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  int iter = 0;
  const int max_total = 30 * static_cast<int>(std::max<std::size_t>(n, 10));
  int total = 0;
  CVector cs(n), sn(n);

  while (hi >= 0) {
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      double s = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (s == 0.0) s = mnorm;
      if (std::abs(h(lo, lo - 1)) <= dtol * s) {
        dropped = std::max(dropped, std::abs(h(lo, lo - 1)));
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (lo == hi - 1) {
      const cplx a = h(lo, lo), b = h(lo, hi), c = h(hi, lo), d = h(hi, hi);
      const cplx half = 0.5 * (a - d);
      const cplx disc = std::sqrt(half * half + b * c);
      const cplx mid = 0.5 * (a + d);
      eig[lo] = mid + disc;
      eig[hi] = mid - disc;
      hi -= 2;
      iter = 0;
      continue;
    }
    if (++total > max_total) {
      double worst = 0.0;
      for (std::ptrdiff_t i = lo + 1; i <= hi; ++i) worst = std::max(worst, std::abs(h(i, i - 1)));
      throw ConvergenceError("QR iteration did not converge", mnorm > 0 ? worst / mnorm : worst);
    }
    ++iter;

    cplx shift;
    if (iter % 11 == 10) {
      // Exceptional shift to break cycles.
      shift = h(hi, hi) + cplx(std::abs(h(hi, hi - 1).real()) + std::abs(h(hi - 1, hi - 2).real()),
                               std::abs(h(hi, hi - 1).imag()));
    } else {
      shift = detail::wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    // Explicit shifted QR step on the active window [lo, hi].
    for (std::ptrdiff_t i = lo; i <= hi; ++i) h(i, i) -= shift;
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      const cplx x = h(k, k), y = h(k + 1, k);
      const double r = std::hypot(std::abs(x), std::abs(y));
      cplx c = 1.0, s = 0.0;
      if (r != 0.0) {
        c = x / r;
        s = y / r;
      }
      cs[k] = c;
      sn[k] = s;
      // G* = [[conj c, conj s], [-s, c]] applied to rows k, k+1.
      for (std::ptrdiff_t j = k; j <= hi; ++j) {
        const cplx u = h(k, j), w = h(k + 1, j);
        h(k, j) = std::conj(c) * u + std::conj(s) * w;
        h(k + 1, j) = -s * u + c * w;
      }
    }
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      const cplx c = cs[k], s = sn[k];
      const std::ptrdiff_t top = std::min(k + 2, hi);
      for (std::ptrdiff_t i = lo; i <= top; ++i) {
        const cplx u = h(i, k), w = h(i, k + 1);
        h(i, k) = u * c + w * s;
        h(i, k + 1) = -u * std::conj(s) + w * std::conj(c);
      }
    }
    for (std::ptrdiff_t i = lo; i <= hi; ++i) h(i, i) += shift;
  }

  Spectrum out;
  out.values = canonical_order(eig).values();
  out.residual = (mnorm > 0.0 ? dropped / mnorm : 0.0) + kEps * static_cast<double>(n);
  return out;
}

/// Hermitian eigen-decomposition: values descending, vectors as columns (vectors(i, k) is
/// component i of the k-th eigenvector).
struct HermitianEigen {
  RVector values;
  DenseMatrix vectors;
};

namespace detail {

// Implicit QL with Wilkinson-type shifts on a real symmetric tridiagonal matrix
// (d diagonal, e sub-diagonal with e[n-1] unused). Rotations are accumulated into z.
inline void tridiagonal_ql(RVector& d, RVector& e, std::vector<RVector>& z) {
  const std::size_t n = d.size();
  if (n > 0) e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw ConvergenceError("tridiagonal QL did not converge", std::abs(e[l]));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::ptrdiff_t i;
        for (i = static_cast<std::ptrdiff_t>(m) - 1; i >= static_cast<std::ptrdiff_t>(l); --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (auto& row : z) {
            f = row[i + 1];
            row[i + 1] = s * row[i] + c * f;
            row[i] = c * row[i] - s * f;
          }
        }
        if (r == 0.0 && i >= static_cast<std::ptrdiff_t>(l)) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

/// Householder tridiagonalisation, unitary phase scaling to a real tridiagonal, then implicit
/// QL. Requires ||M - M*||_F <= tol ||M||_F; the Hermitian part is what gets diagonalised.
inline HermitianEigen eigh(const DenseMatrix& m, double tol = 1e-10) {
  detail::require_square(m, "eig_hermitian");
  const std::size_t n = m.rows();
  const DenseMatrix skew = m - m.adjoint();
  if (skew.frobenius() > tol * m.frobenius()) throw DomainError("eig_hermitian: matrix is not Hermitian");

  DenseMatrix a = 0.5 * (m + m.adjoint());
  DenseMatrix q = DenseMatrix::identity(n);
  CVector v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(a(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const cplx x0 = a(k + 1, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0, 0.0) : x0 / std::abs(x0);
    std::fill(v.begin(), v.end(), cplx(0.0, 0.0));
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] += phase * xnorm;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    for (std::size_t c = 0; c < n; ++c) {
      cplx s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * a(i, c);
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(i, c) -= v[i] * s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      cplx s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += a(r, i) * v[i];
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(r, i) -= s * std::conj(v[i]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      cplx s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += q(r, i) * v[i];
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) q(r, i) -= s * std::conj(v[i]);
    }
  }

  // a is now Hermitian tridiagonal; rotate the off-diagonal onto the positive reals.
  RVector d(n), e(n, 0.0);
  CVector phase(n, cplx(1.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) d[k] = a(k, k).real();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const cplx off = a(k + 1, k);
    const double mag = std::abs(off);
    e[k] = mag;
    phase[k + 1] = mag == 0.0 ? phase[k] : phase[k] * off / mag;
  }

  std::vector<RVector> z(n, RVector(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) z[i][i] = 1.0;
  detail::tridiagonal_ql(d, e, z);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] > d[y]; });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  // eigenvectors = Q * diag(phase) * Z
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.values[col] = d[src];
    for (std::size_t r = 0; r < n; ++r) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += q(r, k) * phase[k] * z[k][src];
      out.vectors(r, col) = s;
    }
  }
  return out;
}

/// Real eigenvalues of a Hermitian matrix, descending.
inline RVector eig_hermitian(const DenseMatrix& m, double tol = 1e-10) { return eigh(m, tol).values; }

/// Singular values (descending) as square roots of the eigenvalues of M M*. Squaring the
/// condition number is acceptable at the sizes this library targets (n <= 64).
inline RVector singular_values(const DenseMatrix& m) {
  detail::require_square(m, "singular_values");
  RVector ev = eig_hermitian(m * m.adjoint(), 1e-8);
  for (auto& x : ev) x = std::sqrt(std::max(x, 0.0));
  return ev;
}

inline constexpr std::size_t kCharPolyMaxDim = 64;

namespace detail {

using lcplx = std::complex<long double>;

// Entries of M in extended precision divided by s = ||M||_F / sqrt(n).
inline std::vector<lcplx> scaled_extended(const DenseMatrix& m, long double& s) {
  const std::size_t n = m.rows();
  const double f = m.frobenius();
  s = f > 0.0 ? static_cast<long double>(f) / std::sqrt(static_cast<long double>(n)) : 1.0L;
  std::vector<lcplx> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = lcplx(m.entries()[i].real(), m.entries()[i].imag()) / s;
  return a;
}

// Undoes the scaling: coefficient k of det(zI - M) is s^{n-k} times that of det(zI - M/s).
inline Polynomial unscale_char_poly(const std::vector<lcplx>& c, long double s) {
  const std::size_t n = c.size() - 1;
  CVector out(n + 1);
  long double pw = 1.0L;
  for (std::size_t k = n + 1; k-- > 0;) {
    const lcplx v = c[k] * pw;
    out[k] = cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    pw *= s;
  }
  out[n] = 1.0;
  return Polynomial(std::move(out));
}

// Unitary similarity to upper Hessenberg form by Householder reflections, in place.
inline void hessenberg_extended(std::vector<lcplx>& h, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> lcplx& { return h[i * n + j]; };
  std::vector<lcplx> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    long double alpha = 0.0L;
    for (std::size_t i = k + 1; i < n; ++i) alpha += std::norm(at(i, k));
    alpha = std::sqrt(alpha);
    if (alpha == 0.0L) continue;
    const lcplx x0 = at(k + 1, k);
    const long double ax = std::abs(x0);
    const lcplx phase = ax == 0.0L ? lcplx(1.0L) : x0 / ax;
    std::fill(v.begin(), v.end(), lcplx(0.0L));
    v[k + 1] = x0 + phase * alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = at(i, k);
    long double vn = 0.0L;
    for (std::size_t i = k + 1; i < n; ++i) vn += std::norm(v[i]);
    const long double beta = 2.0L / vn;
    for (std::size_t j = 0; j < n; ++j) {
      lcplx d = 0.0L;
      for (std::size_t i = k + 1; i < n; ++i) d += std::conj(v[i]) * at(i, j);
      d *= beta;
      for (std::size_t i = k + 1; i < n; ++i) at(i, j) -= v[i] * d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      lcplx d = 0.0L;
      for (std::size_t j = k + 1; j < n; ++j) d += at(i, j) * v[j];
      d *= beta;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= d * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) at(i, k) = 0.0L;
  }
}

}  // namespace detail

/// Monic det(zI - M) without computing eigenvalues: Householder reduction to Hessenberg
/// form followed by La Budde's recurrence on the leading principal minors
///   p_k(z) = (z - h_kk) p_{k-1}(z) - sum_{i<k} h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}(z),
/// all in extended precision after scaling M to unit RMS entry size.
inline Polynomial char_poly(const DenseMatrix& m) {
  detail::require_square(m, "char_poly");
  const std::size_t n = m.rows();
  if (n > kCharPolyMaxDim) throw DomainError("char_poly: dimension exceeds 64");
  using detail::lcplx;
  long double s = 1.0L;
  std::vector<lcplx> h = detail::scaled_extended(m, s);
  detail::hessenberg_extended(h, n);
  auto at = [&](std::size_t i, std::size_t j) { return h[i * n + j]; };

  std::vector<std::vector<lcplx>> p(n + 1);
  p[0] = {lcplx(1.0L)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<lcplx> q(k + 1, lcplx(0.0L));
    const lcplx diag = at(k - 1, k - 1);
    for (std::size_t t = 0; t < k; ++t) {
      q[t + 1] += p[k - 1][t];
      q[t] -= diag * p[k - 1][t];
    }
    lcplx chain = 1.0L;
    for (std::size_t i = k - 1; i >= 1; --i) {
      chain *= at(i, i - 1);
      const lcplx coef = at(i - 1, k - 1) * chain;
      for (std::size_t t = 0; t < i; ++t) q[t] -= coef * p[i - 1][t];
    }
    p[k] = std::move(q);
  }
  return detail::unscale_char_poly(p[n], s);
}

/// Monic det(zI - M) by the Faddeev-LeVerrier trace recursion, in extended precision.
/// Loses accuracy quickly beyond n of about 14 for non-normal M; char_poly is preferred.
inline Polynomial char_poly_leverrier(const DenseMatrix& m) {
  detail::require_square(m, "char_poly_leverrier");
  const std::size_t n = m.rows();
  if (n > kCharPolyMaxDim) throw DomainError("char_poly: dimension exceeds 64");
  using detail::lcplx;
  long double s = 1.0L;
  const std::vector<lcplx> a = detail::scaled_extended(m, s);
  std::vector<lcplx> mk(n * n, lcplx(0.0L)), tmp(n * n);
  std::vector<lcplx> c(n + 1, lcplx(0.0L));
  c[n] = 1.0L;
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I, then c_{n-k} = -tr(A M_k) / k.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        lcplx acc = 0.0L;
        for (std::size_t l = 0; l < n; ++l) acc += a[i * n + l] * mk[l * n + j];
        tmp[i * n + j] = acc;
      }
    for (std::size_t i = 0; i < n; ++i) tmp[i * n + i] += c[n - k + 1];
    mk.swap(tmp);
    lcplx tr = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i * n + l] * mk[l * n + i];
    c[n - k] = -tr / static_cast<long double>(k);
  }
  return detail::unscale_char_poly(c, s);
}

/// ||M M* - M* M||_F <= tol ||M||_F^2.
inline bool is_normal(const DenseMatrix& m, double tol) {
  detail::require_square(m, "is_normal");
  const DenseMatrix adj = m.adjoint();
  const double comm = (m * adj - adj * m).frobenius();
  const double f = m.frobenius();
  return comm <= tol * f * f;
}

/// Relative departure from normality ||M M* - M* M||_F / ||M||_F^2 (0 for the zero matrix).
inline double normality_defect(const DenseMatrix& m) {
  detail::require_square(m, "normality_defect");
  const DenseMatrix adj = m.adjoint();
  const double f = m.frobenius();
  return f == 0.0 ? 0.0 : (m * adj - adj * m).frobenius() / (f * f);
}

/// Tr(M M*) = sum |m_kj|^2, the upper bound in Schur's inequality sum |mu_j|^2 <= Tr(M M*).
inline double schur_bound(const DenseMatrix& m) {
  detail::require_square(m, "schur_bound");
  double s = 0.0;
  for (const auto& e : m.entries()) s += std::norm(e);
  return s;
}

}  // namespace circdiff
