#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>

#include "circdiff/circulant.hpp"
#include "circdiff/core.hpp"
#include "circdiff/differentiator.hpp"
#include "circdiff/inequalities.hpp"
#include "circdiff/linalg.hpp"
#include "circdiff/poly.hpp"

namespace circdiff {

/// Increasing Phi on [0, inf) with Phi o exp convex: identity, t^p (p > 0), log(t + eps).
class PhiTransform {
 public:
  enum class Kind { identity, power, shifted_log };

  static PhiTransform identity() { return PhiTransform(Kind::identity, 1.0); }
  static PhiTransform power(double p) {
    if (!(p > 0.0)) throw DomainError("power transform needs p > 0");
    return PhiTransform(Kind::power, p);
  }
  static PhiTransform shifted_log(double eps) {
    if (!(eps > 0.0)) throw DomainError("shifted_log transform needs eps > 0");
    return PhiTransform(Kind::shifted_log, eps);
  }

  /// Parses "identity", "power:P" or "log:EPS".
  static PhiTransform parse(const std::string& text) {
    if (text == "identity") return identity();
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("unknown transform '" + text + "'");
    const std::string head = text.substr(0, colon);
    double value = 0.0;
    try {
      value = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad transform parameter in '" + text + "'");
    }
    if (head == "power") return power(value);
    if (head == "log") return shifted_log(value);
    throw ParseError("unknown transform '" + text + "'");
  }

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return param_; }

  double operator()(double t) const {
    switch (kind_) {
      case Kind::identity: return t;
      case Kind::power: return std::pow(t, param_);
      case Kind::shifted_log: return std::log(t + param_);
    }
    return t;
  }

  std::string name() const {
    switch (kind_) {
      case Kind::identity: return "identity";
      case Kind::power: return "power:" + format_param();
      case Kind::shifted_log: return "log:" + format_param();
    }
    return "?";
  }

 private:
  PhiTransform(Kind k, double p) : kind_(k), param_(p) {}

  std::string format_param() const {
    std::string s = std::to_string(param_);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }

  Kind kind_;
  double param_;
};

struct MajorizationReport {
  std::string name;
  RVector left;           // sorted descending
  RVector right;          // sorted descending
  RVector prefix_slacks;  // sum right[0..m] - sum left[0..m]
  bool holds = false;
  bool strong = false;
  /// Distance between a matrix-route spectrum and its polynomial-oracle counterpart,
  /// when the check has one (0 otherwise). Folded into `holds`.
  double cross_check = 0.0;
};

/// Whether b weakly majorizes a: every descending prefix sum of a is at most that of b.
inline MajorizationReport weak_majorizes(RVector a, RVector b, double tol) {
  if (a.size() != b.size()) throw DomainError("weak_majorizes: length mismatch");
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double scale = 1.0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  for (double x : b) scale = std::max(scale, std::abs(x));
  MajorizationReport r;
  r.prefix_slacks.resize(a.size());
  double sa = 0.0, sb = 0.0;
  r.holds = true;
  for (std::size_t m = 0; m < a.size(); ++m) {
    sa += a[m];
    sb += b[m];
    r.prefix_slacks[m] = sb - sa;
    if (r.prefix_slacks[m] < -tol * scale) r.holds = false;
  }
  r.strong = r.holds && std::abs(sb - sa) <= tol * scale;
  r.left = std::move(a);
  r.right = std::move(b);
  return r;
}

namespace detail {

inline RVector apply_phi(const PhiTransform& phi, std::span<const double> xs) {
  RVector out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(phi(x));
  return out;
}

// Oracle critical points of prod (z - r_j), for cross-checking a matrix route.
inline CVector oracle_critical_points(std::span<const cplx> roots) {
  return critical_points_oracle(roots).values();
}

inline double cross_distance(std::span<const double> matrix_route, std::span<const cplx> oracle) {
  CVector a(matrix_route.begin(), matrix_route.end());
  return match_multisets(a, oracle).max_distance;
}

}  // namespace detail

/// Re w_k is weakly majorized by the eigenvalues xi_k of H_{n-1} = (C_{n-1} + C_{n-1}*)/2,
/// which are also the critical points of prod (z - Re lambda_j).
inline MajorizationReport kyfan_check(const RootSet& roots, std::span<const cplx> critical,
                                      const Tolerances& tol = {}) {
  if (roots.size() < 2) throw DomainError("kyfan_check: need at least two roots");
  const DenseMatrix sub = leading_submatrix(from_spectrum(roots));
  const RVector xi = eig_hermitian(0.5 * (sub + sub.adjoint()));
  RVector re;
  for (const auto& w : critical) re.push_back(w.real());
  auto r = weak_majorizes(re, xi, tol.majorization);
  r.name = "kyfan";

  CVector real_parts;
  for (const auto& z : roots) real_parts.emplace_back(z.real(), 0.0);
  r.cross_check = detail::cross_distance(xi, detail::oracle_critical_points(real_parts));
  if (r.cross_check > tol.match * roots.scale()) r.holds = false;
  return r;
}

inline MajorizationReport kyfan_check(const RootSet& roots, const Tolerances& tol = {}) {
  return kyfan_check(roots, critical_points(roots).critical_points.values, tol);
}

/// eta_k: eigenvalues of A_{n-1} with A = C C*, i.e. critical points of the polynomial with
/// roots |lambda_j|^2. Clamped at zero. Descending.
inline RVector gram_submatrix_eigenvalues(const RootSet& roots) {
  const Circulant a = gram(from_spectrum(roots));
  RVector eta = eig_hermitian(leading_submatrix(a));
  for (auto& e : eta) e = std::max(e, 0.0);
  return eta;
}

/// (Phi(|w_k|)) weakly majorized by (Phi(sqrt(eta_k))).
inline MajorizationReport thm12_check(const RootSet& roots, std::span<const cplx> critical,
                                      const PhiTransform& phi, const Tolerances& tol = {}) {
  if (roots.size() < 2) throw DomainError("thm12_check: need at least two roots");
  const RVector eta = gram_submatrix_eigenvalues(roots);
  RVector mod, root_eta;
  for (const auto& w : critical) mod.push_back(std::abs(w));
  for (double e : eta) root_eta.push_back(std::sqrt(e));
  auto r = weak_majorizes(detail::apply_phi(phi, mod), detail::apply_phi(phi, root_eta), tol.majorization);
  r.name = "thm12[" + phi.name() + "]";

  CVector squared_moduli;
  for (const auto& z : roots) squared_moduli.emplace_back(std::norm(z), 0.0);
  const double s = roots.scale();
  r.cross_check = detail::cross_distance(eta, detail::oracle_critical_points(squared_moduli));
  if (r.cross_check > tol.match * s * s) r.holds = false;
  return r;
}

inline MajorizationReport thm12_check(const RootSet& roots, const PhiTransform& phi,
                                      const Tolerances& tol = {}) {
  return thm12_check(roots, critical_points(roots).critical_points.values, phi, tol);
}

struct WeylReport {
  RVector singular;   // sigma_i(C_{n-1}), descending
  RVector sqrt_eta;   // sqrt(eta_i), descending
  double min_slack = 0.0;
  bool holds = false;
};

/// sigma_i(C_{n-1}) <= sqrt(eta_i) for every i, since C_{n-1} C_{n-1}* = A_{n-1} - v v*.
inline WeylReport weyl_domination(const RootSet& roots, const Tolerances& tol = {}) {
  if (roots.size() < 2) throw DomainError("weyl_domination: need at least two roots");
  WeylReport r;
  r.singular = singular_values(leading_submatrix(from_spectrum(roots)));
  for (double e : gram_submatrix_eigenvalues(roots)) r.sqrt_eta.push_back(std::sqrt(e));
  r.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.singular.size(); ++i)
    r.min_slack = std::min(r.min_slack, r.sqrt_eta[i] - r.singular[i]);
  r.holds = r.min_slack >= -tol.majorization * roots.scale();
  return r;
}

/// Structure of A_{n-1} - C_{n-1} C_{n-1}*: rank one, PSD, equal to v v* with v_l = c_{n-l}.
struct RankOneReport {
  double second_singular = 0.0;  // should vanish
  double min_eigenvalue = 0.0;   // should be >= 0
  double outer_mismatch = 0.0;   // ||D - v v*||_F
};

inline RankOneReport rank_one_structure(const RootSet& roots) {
  if (roots.size() < 2) throw DomainError("rank_one_structure: need at least two roots");
  const Circulant c = from_spectrum(roots);
  const std::size_t n = c.size();
  const DenseMatrix sub = leading_submatrix(c);
  const DenseMatrix d = leading_submatrix(gram(c)) - sub * sub.adjoint();
  RankOneReport r;
  const RVector ev = eig_hermitian(d, 1e-8);
  RVector sv;
  for (double e : ev) sv.push_back(std::abs(e));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  r.second_singular = sv.size() > 1 ? sv[1] : 0.0;
  r.min_eigenvalue = ev.back();
  DenseMatrix outer(n - 1, n - 1);
  for (std::size_t l = 1; l < n; ++l)
    for (std::size_t k = 1; k < n; ++k) outer(l - 1, k - 1) = c[n - l] * std::conj(c[n - k]);
  r.outer_mismatch = (d - outer).frobenius();
  return r;
}

/// Positive roots: (Phi(xi_k)) weakly majorized by (Phi(sqrt(eta_k))), xi the critical points
/// of p and eta those of the polynomial with roots lambda_j^2.
inline MajorizationReport thm13_check(const RootSet& positive_roots, const PhiTransform& phi,
                                      const Tolerances& tol = {}) {
  if (positive_roots.size() < 2) throw DomainError("thm13_check: need at least two roots");
  const double s = positive_roots.scale();
  CVector squares;
  for (const auto& z : positive_roots) {
    if (std::abs(z.imag()) > 1e-12 * s || !(z.real() > 0.0)) throw DomainError("non-positive root");
    squares.emplace_back(z.real() * z.real(), 0.0);
  }
  RVector xi, root_eta;
  for (const auto& w : critical_points(positive_roots).critical_points.values) xi.push_back(std::max(w.real(), 0.0));
  for (const auto& e : critical_points(canonical_order(squares)).critical_points.values)
    root_eta.push_back(std::sqrt(std::max(e.real(), 0.0)));
  auto r = weak_majorizes(detail::apply_phi(phi, xi), detail::apply_phi(phi, root_eta), tol.majorization);
  r.name = "thm13[" + phi.name() + "]";
  return r;
}

}  // namespace circdiff
