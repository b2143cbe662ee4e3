#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>

#include "circdiff/circulant.hpp"
#include "circdiff/core.hpp"
#include "circdiff/differentiator.hpp"
#include "circdiff/poly.hpp"

namespace circdiff {

/// Tolerances used by the inequality and majorization checks. Each value is multiplied
/// by scale^d where d is the homogeneity degree of the quantity compared.
struct Tolerances {
  double violation = 1e-8;          // degree-2 checks: slack >= -violation * scale^2
  double violation_quartic = 1e-7;  // degree-4 checks
  double equality = 1e-7;           // |slack| <= equality * scale^2 counts as equality
  double equality_quartic = 1e-6;
  double collinear = 1e-9;          // relative defect allowed by collinearity()
  double centered = 1e-9;           // |s1| <= centered * scale counts as centred
  double majorization = 1e-8;       // prefix slacks >= -majorization * scale
  double match = 1e-6;              // spectra vs oracle roots, times scale
  double normal = 1e-4;             // submatrix_normality_defect threshold

  /// Derives every tolerance from the single CLI --tol value.
  static Tolerances from_scalar(double tol) {
    Tolerances t;
    t.violation = tol;
    t.violation_quartic = 10.0 * tol;
    t.equality = 10.0 * tol;
    t.equality_quartic = 100.0 * tol;
    t.majorization = tol;
    return t;
  }
};

struct PowerSums {
  cplx s1;    // sum lambda_j
  cplx s2;    // sum lambda_j^2
  double m2;  // sum |lambda_j|^2
  double m4;  // sum |lambda_j|^4
  std::size_t n;
};

inline PowerSums power_sums(std::span<const cplx> roots) {
  PowerSums p{0.0, 0.0, 0.0, 0.0, roots.size()};
  for (const auto& z : roots) {
    p.s1 += z;
    p.s2 += z * z;
    const double a2 = std::norm(z);
    p.m2 += a2;
    p.m4 += a2 * a2;
  }
  return p;
}

inline PowerSums power_sums(const RootSet& roots) { return power_sums(roots.values()); }

enum class InequalityKind { schoenberg, quartic_general, quartic_centered, debruin_sharma, schur };

inline std::string_view to_string(InequalityKind k) {
  switch (k) {
    case InequalityKind::schoenberg: return "schoenberg";
    case InequalityKind::quartic_general: return "quartic_general";
    case InequalityKind::quartic_centered: return "quartic_centered";
    case InequalityKind::debruin_sharma: return "debruin_sharma";
    case InequalityKind::schur: return "schur";
  }
  return "?";
}

struct InequalityReport {
  InequalityKind name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool equality = false;
  bool collinear = false;
  bool holds = false;
  int order = 2;  // homogeneity degree
};

/// Roots on one straight line: |sum (z - mu)^2| >= (1 - tol) sum |z - mu|^2 with mu the
/// centroid. A cluster with sum |z - mu|^2 <= tol scale^2 counts as collinear.
inline bool collinearity(std::span<const cplx> roots, double tol) {
  if (roots.size() < 3) return true;
  const cplx mu = power_sums(roots).s1 / static_cast<double>(roots.size());
  cplx sq = 0.0;
  double spread = 0.0;
  for (const auto& z : roots) {
    const cplx d = z - mu;
    sq += d * d;
    spread += std::norm(d);
  }
  const double s = scale_of(roots);
  if (spread <= tol * s * s) return true;
  return std::abs(sq) >= (1.0 - tol) * spread;
}

inline bool collinearity(const RootSet& roots, double tol) { return collinearity(roots.values(), tol); }

namespace detail {

inline double sum_pow(std::span<const cplx> w, int p) {
  double s = 0.0;
  for (const auto& z : w) s += std::pow(std::abs(z), p);
  return s;
}

inline InequalityReport make_report(InequalityKind kind, double lhs, double rhs, int order,
                                    const RootSet& roots, const Tolerances& tol) {
  InequalityReport r;
  r.name = kind;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.order = order;
  const double sc = std::pow(roots.scale(), order);
  const double viol = order == 2 ? tol.violation : tol.violation_quartic;
  const double eq = order == 2 ? tol.equality : tol.equality_quartic;
  r.holds = r.slack >= -viol * sc;
  r.equality = std::abs(r.slack) <= eq * sc;
  r.collinear = collinearity(roots, tol.collinear);
  return r;
}

inline void require_centered(const RootSet& roots, const Tolerances& tol) {
  const PowerSums ps = power_sums(roots);
  if (std::abs(ps.s1) > tol.centered * roots.scale())
    throw DomainError("mass centre nonzero");
}

}  // namespace detail

/// |s1|^2 / n^2 + (n - 2)/n m2.
inline double schoenberg_rhs(const PowerSums& p) {
  const double n = static_cast<double>(p.n);
  return std::norm(p.s1) / (n * n) + (n - 2.0) / n * p.m2;
}

/// Right-hand side of the general quartic bound:
///   (n-6)/n m4 + m2^2/n^2 + |s2 - s1^2/n|^2 / n^2
///   + (2/n) sum |l_j|^2 |l_j + s1/n|^2 - (4/n^3) m2 |s1|^2.
/// This is exactly Tr(B B~) written in the roots.
inline double quartic_general_rhs(std::span<const cplx> roots) {
  const PowerSums p = power_sums(roots);
  const double n = static_cast<double>(p.n);
  const cplx c0 = p.s1 / n;
  double cross = 0.0;
  for (const auto& z : roots) cross += std::norm(z) * std::norm(z + c0);
  return (n - 6.0) / n * p.m4 + p.m2 * p.m2 / (n * n) + std::norm(p.s2 - p.s1 * p.s1 / n) / (n * n) +
         2.0 / n * cross - 4.0 / (n * n * n) * p.m2 * std::norm(p.s1);
}

/// (n-4)/n m4 + m2^2/n^2 + |s2|^2/n^2, for centred roots.
inline double quartic_centered_rhs(const PowerSums& p) {
  const double n = static_cast<double>(p.n);
  return (n - 4.0) / n * p.m4 + p.m2 * p.m2 / (n * n) + std::norm(p.s2) / (n * n);
}

/// (n-4)/n m4 + 2 m2^2/n^2.
inline double debruin_sharma_rhs(const PowerSums& p) {
  const double n = static_cast<double>(p.n);
  return (n - 4.0) / n * p.m4 + 2.0 * p.m2 * p.m2 / (n * n);
}

inline InequalityReport schoenberg_check(const RootSet& roots, std::span<const cplx> critical,
                                         const Tolerances& tol = {}) {
  return detail::make_report(InequalityKind::schoenberg, detail::sum_pow(critical, 2),
                             schoenberg_rhs(power_sums(roots)), 2, roots, tol);
}

inline InequalityReport schoenberg_check(const RootSet& roots, const Tolerances& tol = {}) {
  return schoenberg_check(roots, critical_points(roots).critical_points.values, tol);
}

inline InequalityReport quartic_general_check(const RootSet& roots, std::span<const cplx> critical,
                                              const Tolerances& tol = {}) {
  return detail::make_report(InequalityKind::quartic_general, detail::sum_pow(critical, 4),
                             quartic_general_rhs(roots.values()), 4, roots, tol);
}

inline InequalityReport quartic_general_check(const RootSet& roots, const Tolerances& tol = {}) {
  return quartic_general_check(roots, critical_points(roots).critical_points.values, tol);
}

inline InequalityReport quartic_centered_check(const RootSet& roots, std::span<const cplx> critical,
                                               const Tolerances& tol = {}) {
  detail::require_centered(roots, tol);
  return detail::make_report(InequalityKind::quartic_centered, detail::sum_pow(critical, 4),
                             quartic_centered_rhs(power_sums(roots)), 4, roots, tol);
}

inline InequalityReport quartic_centered_check(const RootSet& roots, const Tolerances& tol = {}) {
  detail::require_centered(roots, tol);
  return quartic_centered_check(roots, critical_points(roots).critical_points.values, tol);
}

/// Also requires the de Bruin-Sharma bound to dominate the centred quartic bound.
inline InequalityReport debruin_sharma_check(const RootSet& roots, std::span<const cplx> critical,
                                             const Tolerances& tol = {}) {
  detail::require_centered(roots, tol);
  const PowerSums p = power_sums(roots);
  auto r = detail::make_report(InequalityKind::debruin_sharma, detail::sum_pow(critical, 4),
                               debruin_sharma_rhs(p), 4, roots, tol);
  const double sc = std::pow(roots.scale(), 4);
  if (r.rhs < quartic_centered_rhs(p) - tol.violation_quartic * sc) r.holds = false;
  return r;
}

inline InequalityReport debruin_sharma_check(const RootSet& roots, const Tolerances& tol = {}) {
  detail::require_centered(roots, tol);
  return debruin_sharma_check(roots, critical_points(roots).critical_points.values, tol);
}

/// Schur's bound on C_{n-1}: sum |w_k|^2 <= Tr(C_{n-1} C_{n-1}*) = |c_0|^2 + (n-2) sum_k |c_k|^2.
inline InequalityReport schur_check(const RootSet& roots, std::span<const cplx> critical,
                                    const Tolerances& tol = {}) {
  const Circulant c = from_spectrum(roots);
  return detail::make_report(InequalityKind::schur, detail::sum_pow(critical, 2),
                             schur_bound(leading_submatrix(c)), 2, roots, tol);
}

/// Closed form of Tr(B B~):
///   a_0^2 + (n-4) e_0 + |sum_{k>=1} c_k c_{n-k}|^2 + 2 a_0 |c_0|^2
///   + 2 sum_{k>=1} a_k [c_0 conj(c_k) + conj(c_0) c_{n-k}],
/// with a = gram(C) and e_0 = sum_k |a_k|^2.
inline double trace_bb(const Circulant& c) {
  const std::size_t n = c.size();
  if (n < 2) throw DomainError("trace_bb: need n >= 2");
  const Circulant a = gram(c);
  const double a0 = a[0].real();
  double e0 = 0.0;
  for (const auto& v : a.first_row()) e0 += std::norm(v);
  cplx pair = 0.0;
  cplx mixed = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    pair += c[k] * c[n - k];
    mixed += a[k] * (c[0] * std::conj(c[k]) + std::conj(c[0]) * c[n - k]);
  }
  const double nn = static_cast<double>(n);
  return a0 * a0 + (nn - 4.0) * e0 + std::norm(pair) + 2.0 * a0 * std::norm(c[0]) + 2.0 * mixed.real();
}

/// Tr(B B~) by dense products of C_{n-1}, independent of the closed forms.
inline double trace_bb_dense(const Circulant& c) {
  const DenseMatrix sub = leading_submatrix(c);
  const DenseMatrix adj = sub.adjoint();
  return ((sub * adj) * (adj * sub)).trace().real();
}

}  // namespace circdiff
