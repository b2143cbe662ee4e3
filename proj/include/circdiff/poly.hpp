#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "circdiff/core.hpp"

namespace circdiff {

/// Monic complex polynomial, coefficients in ascending degree order.
class Polynomial {
 public:
  /// Takes ownership of `coeffs`; the last entry must be exactly 1.
  explicit Polynomial(CVector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw DomainError("polynomial degree must be at least 1");
    if (coeffs_.back() != cplx(1.0, 0.0)) throw DomainError("polynomial is not monic");
  }

  /// Divides through by the leading coefficient.
  static Polynomial monic_from(CVector coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == cplx(0.0, 0.0)) coeffs.pop_back();
    if (coeffs.size() < 2) throw DomainError("constant polynomial");
    const cplx lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;
    coeffs.back() = 1.0;
    return Polynomial(std::move(coeffs));
  }

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const CVector& coeffs() const noexcept { return coeffs_; }

 private:
  CVector coeffs_;
};

/// Roots in canonical order: modulus descending, then argument ascending in [0, 2pi),
/// then original position. Only constructible through canonical_order().
class RootSet {
 public:
  RootSet() = default;

  std::size_t size() const noexcept { return roots_.size(); }
  const CVector& values() const noexcept { return roots_; }
  const cplx& operator[](std::size_t i) const { return roots_[i]; }
  auto begin() const noexcept { return roots_.begin(); }
  auto end() const noexcept { return roots_.end(); }

  double scale() const { return scale_of(roots_); }

 private:
  friend RootSet canonical_order(std::span<const cplx> values);
  explicit RootSet(CVector roots) : roots_(std::move(roots)) {}

  CVector roots_;
};

namespace detail {

inline double canonical_arg(const cplx& z) {
  if (z == cplx(0.0, 0.0)) return 0.0;
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * kPi;
  // Values a rounding error below the positive real axis count as argument 0.
  if (a > 2.0 * kPi - 64.0 * kEps) a = 0.0;
  return a;
}

}  // namespace detail

/// The permutation that puts `values` into canonical order: result[i] is the input index
/// of the i-th canonical entry. Moduli within 1e-12 * scale of each other are ties.
inline std::vector<std::size_t> canonical_permutation(std::span<const cplx> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(values[a]) > std::abs(values[b]);
  });
  const double tie = 1e-12 * scale_of(values);
  std::size_t start = 0;
  while (start < n) {
    const double head = std::abs(values[idx[start]]);
    std::size_t stop = start + 1;
    while (stop < n && head - std::abs(values[idx[stop]]) <= tie) ++stop;
    std::stable_sort(idx.begin() + static_cast<std::ptrdiff_t>(start),
                     idx.begin() + static_cast<std::ptrdiff_t>(stop),
                     [&](std::size_t a, std::size_t b) {
                       const double aa = detail::canonical_arg(values[a]);
                       const double ab = detail::canonical_arg(values[b]);
                       if (aa != ab) return aa < ab;
                       return a < b;
                     });
    start = stop;
  }
  return idx;
}

inline RootSet canonical_order(std::span<const cplx> values) {
  const auto perm = canonical_permutation(values);
  CVector out;
  out.reserve(values.size());
  for (auto i : perm) out.push_back(values[i]);
  return RootSet(std::move(out));
}

inline RootSet canonical_order(std::initializer_list<cplx> values) {
  return canonical_order(std::span<const cplx>(values.begin(), values.size()));
}

/// Monic expansion of prod_j (z - roots_j).
inline Polynomial from_roots(std::span<const cplx> roots) {
  if (roots.empty()) throw DomainError("from_roots needs at least one root");
  CVector c{cplx(1.0, 0.0)};
  for (const auto& r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  c.back() = 1.0;
  return Polynomial(std::move(c));
}

inline Polynomial from_roots(const RootSet& roots) { return from_roots(roots.values()); }

/// Coefficients of p' (leading coefficient n, so not monic).
inline CVector derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  CVector d(c.size() - 1);
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = static_cast<double>(k + 1) * c[k + 1];
  return d;
}

/// Horner evaluation of an arbitrary coefficient vector (ascending order).
inline cplx evaluate(std::span<const cplx> coeffs, cplx z) {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline cplx evaluate(const Polynomial& p, cplx z) { return evaluate(p.coeffs(), z); }

/// Options for the simultaneous-iteration root finder.
struct OracleOptions {
  double tol = 1e-14;
  int max_iter = 1000;
};

namespace detail {

struct NewtonTerm {
  cplx ratio;       // p(z) / p'(z)
  double residual;  // |p(z)| / (sum_k |a_k| |z|^k), the backward error of z
  bool exact_zero;
};

// Newton ratio with the reversed-polynomial trick for |z| > 1 so Horner never overflows.
inline NewtonTerm newton_term(std::span<const cplx> a, cplx z) {
  const std::size_t n = a.size() - 1;
  const double r = std::abs(z);
  cplx p = 0.0, dp = 0.0;
  double bound = 0.0;
  if (r <= 1.0) {
    for (std::size_t k = n + 1; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[k];
      bound = bound * r + std::abs(a[k]);
    }
  } else {
    // p(z) = z^n q(1/z) with q the reversed polynomial.
    const cplx y = 1.0 / z;
    const double ry = 1.0 / r;
    cplx q = 0.0, dq = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      dq = dq * y + q;
      q = q * y + a[k];
      bound = bound * ry + std::abs(a[k]);
    }
    // p'(z)/p(z) = (n - y q'(y)/q(y)) / z
    p = q;
    dp = (static_cast<double>(n) * q - y * dq) * y;
  }
  NewtonTerm t{};
  t.exact_zero = (p == cplx(0.0, 0.0));
  t.residual = bound > 0.0 ? std::abs(p) / bound : 0.0;
  t.ratio = (dp == cplx(0.0, 0.0)) ? cplx(0.0, 0.0) : p / dp;
  return t;
}

}  // namespace detail

/// Aberth-Ehrlich simultaneous iteration on an arbitrary (non-monic allowed) coefficient vector.
inline RootSet roots_oracle(std::span<const cplx> coeffs, const OracleOptions& opt = {}) {
  CVector a(coeffs.begin(), coeffs.end());
  while (a.size() > 1 && a.back() == cplx(0.0, 0.0)) a.pop_back();
  if (a.size() < 2) throw DomainError("constant polynomial");
  const cplx lead = a.back();
  for (auto& c : a) c /= lead;
  const std::size_t n = a.size() - 1;

  if (n == 1) {
    const cplx r = -a[0];
    return canonical_order(std::span<const cplx>(&r, 1));
  }

  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k)
    radius = std::max(radius, std::pow(std::abs(a[n - k]), 1.0 / static_cast<double>(k)));
  radius += 1.0;

  CVector z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n) + 0.37;
    z[k] = radius * cplx(std::cos(t), std::sin(t));
  }

  // Rounding-level backward error: p(z) cannot be evaluated more accurately than this.
  const double floor = 4.0 * static_cast<double>(n + 1) * kEps;
  std::vector<char> done(n, 0);
  double worst = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    worst = 0.0;
    std::size_t active = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const auto t = detail::newton_term(a, z[k]);
      if (t.exact_zero) {
        done[k] = 1;
        continue;
      }
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const cplx d = z[k] - z[j];
        if (d != cplx(0.0, 0.0)) sum += 1.0 / d;
      }
      const cplx denom = 1.0 - t.ratio * sum;
      const cplx step = denom == cplx(0.0, 0.0) ? t.ratio : t.ratio / denom;
      z[k] -= step;
      const double mag = std::max(1.0, std::abs(z[k]));
      if (t.residual <= floor || std::abs(step) <= opt.tol * mag) {
        done[k] = 1;
      } else {
        ++active;
        worst = std::max(worst, t.residual);
      }
    }
    if (active == 0) return canonical_order(z);
  }
  throw ConvergenceError("Aberth iteration did not converge", worst);
}

inline RootSet roots_oracle(const Polynomial& p, const OracleOptions& opt = {}) {
  return roots_oracle(p.coeffs(), opt);
}

/// Aberth-Ehrlich iteration for the n - 1 roots of p' where p(z) = prod (z - l_j), with p'
/// never expanded into coefficients. With g = sum 1/(z - l_j) and h = sum 1/(z - l_j)^2,
/// p'/p'' = g / (g^2 - h). Accurate where the coefficient form is not (clustered or widely
/// spread real roots); a repeated root of multiplicity m is found m - 1 times.
inline RootSet critical_points_oracle(std::span<const cplx> roots, const OracleOptions& opt = {}) {
  const std::size_t n = roots.size();
  if (n < 2) throw DomainError("constant polynomial");
  const std::size_t m = n - 1;
  const double s = scale_of(roots);

  cplx mu = 0.0;
  for (const auto& l : roots) mu += l;
  mu /= static_cast<double>(n);
  if (m == 1) return canonical_order(std::span<const cplx>(&mu, 1));
  double radius = 0.0;
  for (const auto& l : roots) radius = std::max(radius, std::abs(l - mu));
  if (radius == 0.0) {
    CVector same(m, mu);
    return canonical_order(same);
  }

  CVector z(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m) + 0.37;
    z[k] = mu + radius * cplx(std::cos(t), std::sin(t));
  }

  const double floor = 4.0 * static_cast<double>(n + 1) * kEps;
  std::vector<char> done(m, 0);
  double worst = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    worst = 0.0;
    std::size_t active = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      cplx g = 0.0, h = 0.0;
      double bound = 0.0;
      std::size_t hits = 0;
      for (const auto& l : roots) {
        const cplx d = z[k] - l;
        if (d == cplx(0.0, 0.0)) {
          ++hits;
          continue;
        }
        const cplx inv = 1.0 / d;
        g += inv;
        h += inv * inv;
        bound += std::abs(inv);
      }
      if (hits >= 2) {  // sitting on a repeated root, which is a critical point
        done[k] = 1;
        continue;
      }
      if (hits == 1) {  // on a simple root, which is not; step off it
        z[k] += opt.tol * s * cplx(1.0, 1.0);
        ++active;
        continue;
      }
      const double residual = std::abs(g) / bound;
      const cplx den = g * g - h;
      const cplx ratio = den == cplx(0.0, 0.0) ? cplx(0.0, 0.0) : g / den;
      cplx sum = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == k) continue;
        const cplx d = z[k] - z[j];
        if (d != cplx(0.0, 0.0)) sum += 1.0 / d;
      }
      const cplx denom = 1.0 - ratio * sum;
      const cplx step = denom == cplx(0.0, 0.0) ? ratio : ratio / denom;
      z[k] -= step;
      if (residual <= floor || std::abs(step) <= opt.tol * s) {
        done[k] = 1;
      } else {
        ++active;
        worst = std::max(worst, residual);
      }
    }
    if (active == 0) return canonical_order(z);
  }
  throw ConvergenceError("Aberth iteration on p' did not converge", worst);
}

inline RootSet critical_points_oracle(const RootSet& roots, const OracleOptions& opt = {}) {
  return critical_points_oracle(roots.values(), opt);
}

/// Outcome of pairing two multisets: match[i] is the index in b paired with a[i].
struct Matching {
  std::vector<std::size_t> match;
  double max_distance = 0.0;
};

namespace detail {

// Kuhn's augmenting paths restricted to pairs with distance <= limit.
inline bool perfect_matching(const std::vector<RVector>& dist, double limit,
                             std::vector<std::size_t>& match_a) {
  const std::size_t n = dist.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, kNone);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j] > limit || seen[j]) continue;
      seen[j] = 1;
      if (owner[j] == kNone || augment(owner[j])) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, 0);
    if (!augment(i)) return false;
  }
  match_a.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) match_a[owner[j]] = j;
  return true;
}

}  // namespace detail

/// Bijection between equal-size multisets. Greedy nearest neighbour first; with `refine`
/// the bottleneck-optimal assignment replaces it (never worse than greedy).
inline Matching match_multisets(std::span<const cplx> a, std::span<const cplx> b,
                                bool refine = true) {
  if (a.size() != b.size()) throw DomainError("match_multisets: size mismatch");
  const std::size_t n = a.size();
  Matching out;
  out.match.assign(n, 0);
  std::vector<char> used(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = n;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double d = std::abs(a[i] - b[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = 1;
    out.match[i] = best;
    out.max_distance = std::max(out.max_distance, best_d);
  }
  if (!refine || n < 2) return out;

  std::vector<RVector> dist(n, RVector(n));
  RVector all;
  all.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = std::abs(a[i] - b[j]);
      if (dist[i][j] <= out.max_distance) all.push_back(dist[i][j]);
    }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::size_t lo = 0, hi = all.size() - 1;  // all[hi] == greedy distance is feasible
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    std::vector<std::size_t> trial;
    if (detail::perfect_matching(dist, all[mid], trial))
      hi = mid;
    else
      lo = mid + 1;
  }
  std::vector<std::size_t> best;
  if (all[lo] < out.max_distance && detail::perfect_matching(dist, all[lo], best)) {
    out.match = std::move(best);
    out.max_distance = all[lo];
  }
  return out;
}

}  // namespace circdiff
