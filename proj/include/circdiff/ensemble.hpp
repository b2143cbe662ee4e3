#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "circdiff/circulant.hpp"
#include "circdiff/core.hpp"
#include "circdiff/differentiator.hpp"
#include "circdiff/inequalities.hpp"
#include "circdiff/io.hpp"
#include "circdiff/majorization.hpp"
#include "circdiff/poly.hpp"

namespace circdiff {

/// splitmix64 step; used to seed Rng and to derive per-instance streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xoshiro256** seeded through splitmix64. Normals use the Box-Muller transform so the
/// stream depends only on this file and the platform libm.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  double normal() {
    if (spare_) {
      const double v = *spare_;
      spare_.reset();
      return v;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    return r * std::cos(2.0 * kPi * u2);
  }

  cplx complex_normal(double sigma) { return {sigma * normal(), sigma * normal()}; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
  std::optional<double> spare_;
};

enum class Family { gaussian, unit_circle, collinear, real_positive, multiple_roots, near_collinear };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::gaussian: return "gaussian";
    case Family::unit_circle: return "unit-circle";
    case Family::collinear: return "collinear";
    case Family::real_positive: return "real-positive";
    case Family::multiple_roots: return "multiple-roots";
    case Family::near_collinear: return "near-collinear";
  }
  return "?";
}

/// Accepts the hyphenated names of to_string(Family) and their underscore spellings.
inline Family parse_family(std::string name) {
  std::replace(name.begin(), name.end(), '_', '-');
  for (Family f : {Family::gaussian, Family::unit_circle, Family::collinear, Family::real_positive,
                   Family::multiple_roots, Family::near_collinear})
    if (to_string(f) == name) return f;
  throw ParseError("unknown family '" + name + "'");
}

struct EnsembleConfig {
  Family family = Family::gaussian;
  double sigma = 1.0;                  // gaussian spread
  bool equispaced = false;             // unit_circle: exact n-th roots of unity
  std::optional<cplx> alpha;           // collinear direction; random unit if unset
  std::optional<cplx> beta;            // collinear offset; random gaussian if unset
  double lo = 0.1, hi = 10.0;          // real_positive range
  std::vector<int> pattern{2, 3, 1};   // multiple_roots multiplicities, cycled
  double epsilon = 1e-6;               // near_collinear transverse noise
  std::size_t degree_min = 2, degree_max = 16;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  Tolerances tol;
  unsigned threads = 0;                // 0: hardware concurrency

  void validate() const {
    if (count < 1) throw DomainError("count must be at least 1");
    if (degree_min < 2 || degree_min > degree_max || degree_max > 64)
      throw DomainError("degree range must satisfy 2 <= min <= max <= 64");
    if (family == Family::real_positive && !(lo > 0.0 && lo <= hi))
      throw DomainError("real-positive range must satisfy 0 < lo <= hi");
    if (family == Family::multiple_roots) {
      if (pattern.empty()) throw DomainError("multiplicity pattern is empty");
      for (int m : pattern)
        if (m < 1 || m > 3) throw DomainError("multiplicities must lie in 1..3");
    }
    if (sigma <= 0.0) throw DomainError("sigma must be positive");
    if (epsilon < 0.0) throw DomainError("epsilon must be non-negative");
  }
};

namespace detail {

inline std::pair<double, double> json_range(const Json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), j.get<double>()};
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + " must be [min, max]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace detail

/// Overrides the fields of `t` present in `j`; unknown keys are rejected.
inline Tolerances tolerances_from_json(const Json& j, Tolerances t = {}) {
  if (!j.is_object()) throw ParseError("tolerances must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) throw ParseError("tolerance '" + key + "' must be a number");
    const double v = value.get<double>();
    if (key == "violation") t.violation = v;
    else if (key == "violation_quartic") t.violation_quartic = v;
    else if (key == "equality") t.equality = v;
    else if (key == "equality_quartic") t.equality_quartic = v;
    else if (key == "collinear") t.collinear = v;
    else if (key == "centered") t.centered = v;
    else if (key == "majorization") t.majorization = v;
    else if (key == "match") t.match = v;
    else if (key == "normal") t.normal = v;
    else throw ParseError("unknown tolerance '" + key + "'");
  }
  return t;
}

/// Ensemble configuration file. Keys: family, sigma, equispaced, alpha, beta, range, pattern,
/// epsilon, degree ([min, max] or n), count, seed, threads, tolerances.
inline EnsembleConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("ensemble config must be a JSON object");
  EnsembleConfig c;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "family") c.family = parse_family(v.get<std::string>());
      else if (key == "sigma") c.sigma = v.get<double>();
      else if (key == "equispaced") c.equispaced = v.get<bool>();
      else if (key == "alpha") c.alpha = complex_from_json(v);
      else if (key == "beta") c.beta = complex_from_json(v);
      else if (key == "range") std::tie(c.lo, c.hi) = detail::json_range(v, "range");
      else if (key == "pattern") c.pattern = v.get<std::vector<int>>();
      else if (key == "epsilon") c.epsilon = v.get<double>();
      else if (key == "degree") {
        const auto [lo, hi] = detail::json_range(v, "degree");
        if (lo < 0.0 || hi < 0.0) throw ParseError("degree must be non-negative");
        c.degree_min = static_cast<std::size_t>(lo);
        c.degree_max = static_cast<std::size_t>(hi);
      } else if (key == "count") c.count = v.get<std::size_t>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "threads") c.threads = v.get<unsigned>();
      else if (key == "tolerances") c.tol = tolerances_from_json(v);
      else if (key == "checks") continue;
      else throw ParseError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad ensemble config: ") + e.what());
  }
  return c;
}

/// The i-th instance of the ensemble; independent of every other index.
inline RootSet generate_instance(const EnsembleConfig& cfg, std::size_t index) {
  std::uint64_t mix = cfg.seed ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(index) + 1));
  Rng rng(splitmix64(mix));
  const std::size_t n = cfg.degree_min + rng.below(cfg.degree_max - cfg.degree_min + 1);
  CVector roots;
  roots.reserve(n);

  auto random_unit = [&] {
    const double t = rng.uniform(0.0, 2.0 * kPi);
    return cplx(std::cos(t), std::sin(t));
  };

  switch (cfg.family) {
    case Family::gaussian:
      for (std::size_t j = 0; j < n; ++j) roots.push_back(rng.complex_normal(cfg.sigma));
      break;
    case Family::unit_circle:
      for (std::size_t j = 0; j < n; ++j)
        roots.push_back(cfg.equispaced ? unit_root(static_cast<long long>(j), static_cast<long long>(n))
                                       : random_unit());
      break;
    case Family::collinear:
    case Family::near_collinear: {
      const cplx alpha = cfg.alpha.value_or(random_unit());
      const cplx beta = cfg.beta.value_or(rng.complex_normal(1.0));
      const double eps = cfg.family == Family::near_collinear ? cfg.epsilon : 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double t = rng.normal();
        const double off = eps > 0.0 ? eps * rng.normal() : 0.0;
        roots.push_back(alpha * cplx(t, off) + beta);
      }
      break;
    }
    case Family::real_positive:
      for (std::size_t j = 0; j < n; ++j) roots.emplace_back(rng.uniform(cfg.lo, cfg.hi), 0.0);
      break;
    case Family::multiple_roots:
      for (std::size_t k = 0; roots.size() < n; ++k) {
        const cplx z = rng.complex_normal(cfg.sigma);
        const auto mult = static_cast<std::size_t>(cfg.pattern[k % cfg.pattern.size()]);
        for (std::size_t m = 0; m < mult && roots.size() < n; ++m) roots.push_back(z);
      }
      break;
  }
  return canonical_order(roots);
}

inline std::vector<RootSet> generate(const EnsembleConfig& cfg) {
  cfg.validate();
  std::vector<RootSet> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(generate_instance(cfg, i));
  return out;
}

/// Every check run_suite knows, in output order.
inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{
      "critical_points", "derivative_identity", "schoenberg",       "quartic_general",
      "trace_route",     "quartic_centered",    "debruin_sharma",   "kyfan",
      "thm12[identity]", "thm12[power:2]",      "thm12[power:4]",   "thm13",
      "weyl",            "rank_one",            "normality_equivalence", "perturbation"};
  return names;
}

/// Expands "all" and the "thm12" shorthand; rejects unknown names.
inline std::vector<std::string> resolve_checks(const std::vector<std::string>& requested) {
  std::set<std::string> want;
  for (const auto& r : requested) {
    if (r == "all") {
      want.insert(all_checks().begin(), all_checks().end());
    } else if (r == "thm12") {
      want.insert({"thm12[identity]", "thm12[power:2]", "thm12[power:4]"});
    } else if (std::find(all_checks().begin(), all_checks().end(), r) != all_checks().end()) {
      want.insert(r);
    } else {
      throw ParseError("unknown check '" + r + "'");
    }
  }
  std::vector<std::string> out;
  for (const auto& name : all_checks())
    if (want.count(name)) out.push_back(name);
  return out;
}

struct CheckOutcome {
  std::string check;
  bool pass = false;
  bool skipped = false;
  std::optional<double> lhs, rhs;
  double slack = 0.0;     // >= 0 means satisfied; absolute units of the compared quantity
  double residual = 0.0;  // auxiliary numerical discrepancy, relative where meaningful
  bool equality = false;
  bool collinear = false;
  bool anomaly = false;   // equality without collinearity
  bool numerical_error = false;
  std::string note;
};

struct InstanceResult {
  std::size_t index = 0;
  RootSet roots;
  std::vector<CheckOutcome> outcomes;
};

namespace detail {

inline double min_prefix_slack(const MajorizationReport& r) {
  double m = std::numeric_limits<double>::infinity();
  for (double s : r.prefix_slacks) m = std::min(m, s);
  return m;
}

inline CheckOutcome from_inequality(const std::string& name, const InequalityReport& r, bool flag_anomaly) {
  CheckOutcome o;
  o.check = name;
  o.lhs = r.lhs;
  o.rhs = r.rhs;
  o.slack = r.slack;
  o.equality = r.equality;
  o.collinear = r.collinear;
  o.pass = r.holds && (!r.collinear || r.equality);
  if (r.holds && r.collinear && !r.equality) o.note = "collinear input without equality";
  o.anomaly = flag_anomaly && r.equality && !r.collinear;
  return o;
}

inline CheckOutcome from_majorization(const std::string& name, const MajorizationReport& r) {
  CheckOutcome o;
  o.check = name;
  o.pass = r.holds;
  o.slack = min_prefix_slack(r);
  o.residual = r.cross_check;
  o.equality = r.strong;
  return o;
}

inline RootSet translate(const RootSet& roots, cplx shift) {
  CVector v(roots.begin(), roots.end());
  for (auto& z : v) z += shift;
  return canonical_order(v);
}

}  // namespace detail

/// Runs the requested checks on one root set. Numerical failures become failed outcomes.
/// `alpha` is the shift used by the perturbation check.
inline std::vector<CheckOutcome> evaluate_checks(const RootSet& roots, const std::vector<std::string>& checks,
                                                 const Tolerances& tol, cplx alpha = 1.0) {
  std::vector<CheckOutcome> out;
  const std::size_t n = roots.size();
  const double s = roots.scale();
  std::optional<CriticalPointResult> crit;
  auto critical = [&]() -> const CVector& {
    if (!crit) crit = critical_points(roots);
    return crit->critical_points.values;
  };

  for (const auto& name : checks) {
    CheckOutcome o;
    o.check = name;
    try {
      if (name == "critical_points") {
        const RootSet oracle = critical_points_oracle(roots);
        const double d = match_multisets(critical(), oracle.values()).max_distance;
        o.slack = tol.match * s - d;
        o.residual = d / s;
        o.pass = d <= tol.match * s;
      } else if (name == "derivative_identity") {
        const double r = verify_derivative_identity(roots);
        o.residual = r;
        o.slack = 1e-8 - r;
        o.pass = r <= 1e-8;
      } else if (name == "schoenberg") {
        o = detail::from_inequality(name, schoenberg_check(roots, critical(), tol), true);
      } else if (name == "quartic_general") {
        o = detail::from_inequality(name, quartic_general_check(roots, critical(), tol), true);
      } else if (name == "trace_route") {
        const double formula = quartic_general_rhs(roots.values());
        const Circulant c = from_spectrum(roots);
        const double dense = trace_bb_dense(c);
        const double closed = trace_bb(c);
        const double s4 = s * s * s * s;
        const double d = std::max(std::abs(formula - dense), std::abs(closed - dense));
        o.lhs = formula;
        o.rhs = dense;
        o.residual = d / s4;
        o.slack = 1e-9 * s4 - d;
        o.pass = d <= 1e-9 * s4;
      } else if (name == "quartic_centered" || name == "debruin_sharma") {
        const cplx mean = power_sums(roots).s1 / static_cast<double>(n);
        const RootSet centred = detail::translate(roots, -mean);
        CVector w = critical();
        for (auto& z : w) z -= mean;
        if (name == "quartic_centered") {
          o = detail::from_inequality(name, quartic_centered_check(centred, w, tol), true);
        } else {
          const auto r = debruin_sharma_check(centred, w, tol);
          o = detail::from_inequality(name, r, false);
          o.pass = r.holds;
        }
      } else if (name == "kyfan") {
        o = detail::from_majorization(name, kyfan_check(roots, critical(), tol));
      } else if (name.rfind("thm12[", 0) == 0) {
        const PhiTransform phi = PhiTransform::parse(name.substr(6, name.size() - 7));
        o = detail::from_majorization(name, thm12_check(roots, critical(), phi, tol));
      } else if (name == "thm13") {
        CVector positive;
        bool real_positive = true;
        for (const auto& z : roots) {
          if (!(z.imag() == 0.0 && z.real() > 0.0)) real_positive = false;
          positive.emplace_back(std::abs(z), 0.0);
        }
        if (std::any_of(positive.begin(), positive.end(), [](const cplx& z) { return z.real() == 0.0; })) {
          o.skipped = true;
          o.pass = true;
          o.note = "zero root";
        } else {
          o = detail::from_majorization(name, thm13_check(canonical_order(positive), PhiTransform::identity(), tol));
          if (!real_positive) o.note = "moduli";
        }
      } else if (name == "weyl") {
        const WeylReport w = weyl_domination(roots, tol);
        o.slack = w.min_slack;
        o.pass = w.holds;
      } else if (name == "rank_one") {
        const RankOneReport r = rank_one_structure(roots);
        const double lim = 1e-10 * s * s;
        o.residual = std::max({r.second_singular, -r.min_eigenvalue, r.outer_mismatch}) / (s * s);
        o.slack = lim - std::max({r.second_singular, -r.min_eigenvalue, r.outer_mismatch});
        o.pass = o.slack >= 0.0;
      } else if (name == "normality_equivalence") {
        const bool collinear = collinearity(roots, tol.collinear);
        const double defect = submatrix_normality_defect(roots);
        const bool normal = defect <= tol.normal;
        o.collinear = collinear;
        o.equality = normal;
        o.residual = defect;
        o.slack = collinear ? tol.normal - defect : 0.0;
        o.pass = (!collinear || normal) && (!normal || collinearity(roots, 1e-7));
      } else if (name == "perturbation") {
        const Polynomial p = from_roots(roots);
        const CVector dp = derivative(p);
        CVector expected = p.coeffs();
        for (std::size_t k = 0; k < dp.size(); ++k) expected[k] += alpha / static_cast<double>(n) * dp[k];
        const Polynomial got = perturbed_char_poly(roots, alpha);
        const double r = relative_coefficient_error(got.coeffs(), expected);
        o.residual = r;
        o.slack = 1e-9 - r;
        o.pass = r <= 1e-9;
      }
    } catch (const Error& e) {
      o = CheckOutcome{};
      o.check = name;
      o.pass = false;
      o.numerical_error = dynamic_cast<const ConvergenceError*>(&e) != nullptr;
      o.note = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

struct CheckSummary {
  std::string check;
  std::size_t pass = 0, fail = 0, skipped = 0, equality_count = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  double max_residual = 0.0;
  std::vector<std::size_t> anomalies;  // instance indices
  std::vector<std::size_t> failures;   // instance indices
};

struct EnsembleSummary {
  std::size_t count = 0;
  std::vector<CheckSummary> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) { return c.fail == 0; });
  }
  const CheckSummary* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.check == name) return &c;
    return nullptr;
  }
};

/// Evaluates every instance, in parallel, returning results in generation order.
inline std::vector<InstanceResult> evaluate_ensemble(const EnsembleConfig& cfg, const std::vector<std::string>& checks) {
  cfg.validate();
  std::vector<InstanceResult> results(cfg.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.count; i = next++) {
      InstanceResult& r = results[i];
      r.index = i;
      r.roots = generate_instance(cfg, i);
      std::uint64_t st = cfg.seed + 0x5851F42D4C957F2DULL * (i + 1);
      Rng rng(splitmix64(st));
      const cplx alpha = rng.complex_normal(r.roots.scale());
      r.outcomes = evaluate_checks(r.roots, checks, cfg.tol, alpha);
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

inline EnsembleSummary summarize(const std::vector<InstanceResult>& results, const std::vector<std::string>& checks) {
  EnsembleSummary sum;
  sum.count = results.size();
  for (const auto& name : checks) sum.checks.push_back(CheckSummary{name, 0, 0, 0, 0, std::numeric_limits<double>::infinity(), 0.0, {}, {}});
  for (const auto& r : results)
    for (std::size_t k = 0; k < r.outcomes.size(); ++k) {
      const CheckOutcome& o = r.outcomes[k];
      CheckSummary& c = sum.checks[k];
      if (o.skipped) {
        ++c.skipped;
        continue;
      }
      if (o.pass) {
        ++c.pass;
      } else {
        ++c.fail;
        c.failures.push_back(r.index);
      }
      if (o.equality) ++c.equality_count;
      if (o.anomaly) c.anomalies.push_back(r.index);
      c.min_slack = std::min(c.min_slack, o.slack);
      c.max_residual = std::max(c.max_residual, o.residual);
    }
  return sum;
}

inline Json to_json(const CheckOutcome& o) {
  Json j{{"check", o.check}, {"pass", o.pass}};
  if (o.skipped) j["skipped"] = true;
  if (o.lhs) j["lhs"] = tidy(*o.lhs);
  if (o.rhs) j["rhs"] = tidy(*o.rhs);
  j["slack"] = tidy(o.slack);
  j["residual"] = tidy(o.residual);
  j["equality"] = o.equality;
  j["collinear"] = o.collinear;
  if (o.anomaly) j["anomaly"] = true;
  if (o.numerical_error) j["numerical_error"] = true;
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

inline Json to_json(const InstanceResult& r, Family family) {
  Json checks = Json::array();
  for (const auto& o : r.outcomes) checks.push_back(to_json(o));
  return Json{{"index", r.index},
              {"family", to_string(family)},
              {"degree", r.roots.size()},
              {"roots", complex_list_json(r.roots.values())},
              {"checks", std::move(checks)}};
}

inline Json to_json(const EnsembleSummary& s) {
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    const bool any = c.pass + c.fail > 0;
    checks.push_back(Json{{"check", c.check},
                          {"pass", c.pass},
                          {"fail", c.fail},
                          {"skipped", c.skipped},
                          {"min_slack", any ? Json(tidy(c.min_slack)) : Json(nullptr)},
                          {"max_residual", tidy(c.max_residual)},
                          {"equality_count", c.equality_count},
                          {"anomalies", c.anomalies},
                          {"failures", c.failures}});
  }
  return Json{{"count", s.count}, {"checks", std::move(checks)}};
}

namespace detail {

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", tidy(x));
  return buf;
}

inline std::ofstream open_output(const std::filesystem::path& p) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open '" + p.string() + "' for writing");
  return f;
}

}  // namespace detail

struct EnsembleArtifacts {
  std::filesystem::path records;  // JSONL
  std::filesystem::path csv;
  std::filesystem::path summary;  // JSON
};

/// Writes records.jsonl, summary.csv and summary.json into `dir` (created if missing).
inline EnsembleArtifacts write_artifacts(const std::filesystem::path& dir, const EnsembleConfig& cfg,
                                         const std::vector<InstanceResult>& results,
                                         const EnsembleSummary& summary) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory '" + dir.string() + "': " + ec.message());
  EnsembleArtifacts a{dir / "records.jsonl", dir / "summary.csv", dir / "summary.json"};

  {
    auto f = detail::open_output(a.records);
    for (const auto& r : results) f << to_json(r, cfg.family).dump() << '\n';
    if (!f) throw Error("write failed for '" + a.records.string() + "'");
  }
  {
    auto f = detail::open_output(a.csv);
    f << "check,pass,fail,min_slack\n";
    for (const auto& c : summary.checks)
      f << c.check << ',' << c.pass << ',' << c.fail << ','
        << (c.pass + c.fail > 0 ? detail::format_double(c.min_slack) : "") << '\n';
    if (!f) throw Error("write failed for '" + a.csv.string() + "'");
  }
  {
    auto f = detail::open_output(a.summary);
    f << format_json(to_json(summary)) << '\n';
    if (!f) throw Error("write failed for '" + a.summary.string() + "'");
  }
  return a;
}

/// Generates, checks, aggregates and (when `output` is given) persists an ensemble.
inline EnsembleSummary run_suite(const EnsembleConfig& cfg, const std::vector<std::string>& requested,
                                 const std::optional<std::filesystem::path>& output = std::nullopt) {
  const auto checks = resolve_checks(requested);
  const auto results = evaluate_ensemble(cfg, checks);
  EnsembleSummary summary = summarize(results, checks);
  if (output) write_artifacts(*output, cfg, results, summary);
  return summary;
}

}  // namespace circdiff
