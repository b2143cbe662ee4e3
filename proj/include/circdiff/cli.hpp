#pragma once

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circdiff/circulant.hpp"
#include "circdiff/core.hpp"
#include "circdiff/differentiator.hpp"
#include "circdiff/ensemble.hpp"
#include "circdiff/inequalities.hpp"
#include "circdiff/io.hpp"
#include "circdiff/majorization.hpp"
#include "circdiff/parse.hpp"
#include "circdiff/poly.hpp"

namespace circdiff::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumerical = 3, kCheckFailed = 4 };

/// Where a command reads its polynomial from; exactly one field may be set.
struct InputSpec {
  std::string roots;
  std::string coeffs;
  std::string path;
};

namespace detail {

inline std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

inline Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

inline RootSet roots_of_polynomial(const Polynomial& p) { return roots_oracle(p); }

inline RootSet load_roots(const InputSpec& in) {
  const int given = !in.roots.empty() + !in.coeffs.empty() + !in.path.empty();
  if (given != 1) throw ParseError("give exactly one of --roots, --coeffs, --input");
  if (!in.roots.empty()) return canonical_order(parse_complex_list(in.roots));
  if (!in.coeffs.empty()) return roots_of_polynomial(Polynomial::monic_from(parse_complex_list(in.coeffs)));
  const Json j = read_json(in.path);
  if (j.is_object() && j.contains("roots")) return rootset_from_json(j);
  if (j.is_object() && j.contains("coeffs")) return roots_of_polynomial(polynomial_from_json(j));
  throw ParseError("input JSON needs a \"roots\" or \"coeffs\" field");
}

inline void add_input_options(CLI::App& cmd, InputSpec& in) {
  cmd.add_option("--roots", in.roots, "comma-separated roots, e.g. \"1, -1, 2+3i\"");
  cmd.add_option("--coeffs", in.coeffs, "comma-separated coefficients, ascending degree");
  cmd.add_option("--input", in.path, "JSON file with \"roots\" or \"coeffs\" (- for stdin)");
}

inline void require_degree(const RootSet& roots, std::size_t min) {
  if (roots.size() < min)
    throw DomainError("degree " + std::to_string(roots.size()) + " is below the minimum of " + std::to_string(min));
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "a..b" or a single value.
inline std::pair<double, double> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const double v = std::stod(text);
      return {v, v};
    }
    return {std::stod(text.substr(0, dots)), std::stod(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("bad range '" + text + "'");
  }
}

inline std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("bad seed '" + text + "'");
  return v;
}

inline bool is_centered_only(const std::string& check) {
  return check == "quartic_centered" || check == "debruin_sharma";
}

// Full report for one check, as printed by verify.
inline Json verify_report(const std::string& name, const RootSet& roots, const CVector& w, const Tolerances& tol,
                          const CheckOutcome& outcome) {
  Json j;
  if (name == "schoenberg") j = to_json(schoenberg_check(roots, w, tol));
  else if (name == "quartic_general") j = to_json(quartic_general_check(roots, w, tol));
  else if (name == "quartic_centered") j = to_json(quartic_centered_check(roots, w, tol));
  else if (name == "debruin_sharma") j = to_json(debruin_sharma_check(roots, w, tol));
  else if (name == "kyfan") j = to_json(kyfan_check(roots, w, tol));
  else if (name.rfind("thm12[", 0) == 0)
    j = to_json(thm12_check(roots, w, PhiTransform::parse(name.substr(6, name.size() - 7)), tol));
  else if (name == "thm13") j = to_json(thm13_check(roots, PhiTransform::identity(), tol));
  else {
    j = Json{{"name", name}};
    Json rest = to_json(outcome);
    rest.erase("check");
    rest.erase("pass");
    j.update(rest);
  }
  j["pass"] = outcome.pass;
  return j;
}

inline int cmd_critical(const InputSpec& in, std::ostream& out) {
  const RootSet roots = load_roots(in);
  require_degree(roots, 2);
  const CriticalPointResult r = critical_points(roots);
  const Json j{{"critical_points", complex_list_json(r.critical_points.values)},
               {"verification_residual", tidy(r.verification_residual)},
               {"eigensolver_residual", tidy(r.critical_points.residual)}};
  out << format_json(j) << '\n';
  return kOk;
}

inline int cmd_verify(const InputSpec& in, const std::string& checks_text, std::optional<double> tol_scalar,
                      cplx alpha, std::ostream& out, std::ostream& err) {
  const RootSet roots = load_roots(in);
  require_degree(roots, 2);
  if (tol_scalar && !(*tol_scalar >= 0.0)) throw ParseError("--tol must be non-negative");
  const Tolerances tol = tol_scalar ? Tolerances::from_scalar(*tol_scalar) : Tolerances{};
  const auto checks = resolve_checks(split_list(checks_text));
  const CVector w = critical_points(roots).critical_points.values;
  const bool centered = std::abs(power_sums(roots).s1) <= tol.centered * roots.scale();
  const bool positive =
      std::all_of(roots.begin(), roots.end(), [](const cplx& z) { return z.imag() == 0.0 && z.real() > 0.0; });

  Json reports = Json::array();
  std::vector<std::string> failed;
  for (const auto& name : checks) {
    if (is_centered_only(name) && !centered) {
      err << "warning: skipping " << name << ": roots are not centred (sum of roots is nonzero)\n";
      continue;
    }
    if (name == "thm13" && !positive) {
      err << "warning: skipping thm13: roots are not all positive\n";
      continue;
    }
    const CheckOutcome o = evaluate_checks(roots, {name}, tol, alpha).front();
    if (o.numerical_error) {
      err << "error: " << name << ": " << o.note << '\n';
      return kNumerical;
    }
    reports.push_back(verify_report(name, roots, w, tol, o));
    if (!o.pass) failed.push_back(name);
  }
  out << format_json(reports) << '\n';
  if (failed.empty()) return kOk;
  err << "failed checks:";
  for (const auto& f : failed) err << ' ' << f;
  err << '\n';
  return kCheckFailed;
}

struct EnsembleFlags {
  std::string config, family, degree, range, pattern, checks = "all", output = "ensemble-out", alpha, beta;
  std::optional<double> sigma, epsilon, tol;
  std::optional<std::size_t> count;
  std::optional<std::string> seed;
  std::optional<unsigned> threads;
  bool equispaced = false;
};

inline EnsembleConfig build_config(const EnsembleFlags& f, std::string& checks) {
  EnsembleConfig c;
  if (!f.config.empty()) {
    const Json j = read_json(f.config);
    c = config_from_json(j);
    if (j.contains("checks")) {
      checks.clear();
      for (const auto& v : j["checks"]) checks += v.get<std::string>() + ",";
    }
  }
  if (!f.family.empty()) c.family = parse_family(f.family);
  if (!f.degree.empty()) {
    const auto [lo, hi] = parse_range(f.degree);
    if (lo < 0.0 || hi < 0.0) throw ParseError("degree must be non-negative");
    c.degree_min = static_cast<std::size_t>(lo);
    c.degree_max = static_cast<std::size_t>(hi);
  }
  if (!f.range.empty()) std::tie(c.lo, c.hi) = parse_range(f.range);
  if (!f.pattern.empty()) {
    c.pattern.clear();
    for (const auto& p : split_list(f.pattern)) {
      try {
        c.pattern.push_back(std::stoi(p));
      } catch (const std::exception&) {
        throw ParseError("bad multiplicity '" + p + "'");
      }
    }
  }
  if (!f.alpha.empty()) c.alpha = parse_complex(f.alpha);
  if (!f.beta.empty()) c.beta = parse_complex(f.beta);
  if (f.sigma) c.sigma = *f.sigma;
  if (f.epsilon) c.epsilon = *f.epsilon;
  if (f.count) c.count = *f.count;
  if (f.threads) c.threads = *f.threads;
  if (f.equispaced) c.equispaced = true;
  if (f.seed) c.seed = parse_seed(*f.seed);
  if (const char* env = std::getenv("CIRC_SEED"); env && *env) c.seed = parse_seed(env);
  if (f.tol) {
    if (!(*f.tol >= 0.0)) throw ParseError("--tol must be non-negative");
    c.tol = Tolerances::from_scalar(*f.tol);
  }
  c.validate();
  return c;
}

inline int cmd_ensemble(const EnsembleFlags& f, std::ostream& out) {
  std::string checks_text = f.checks;
  const EnsembleConfig cfg = build_config(f, checks_text);
  const auto checks = resolve_checks(split_list(checks_text));
  const auto results = evaluate_ensemble(cfg, checks);
  const EnsembleSummary summary = summarize(results, checks);
  const EnsembleArtifacts a = write_artifacts(f.output, cfg, results, summary);

  std::size_t failures = 0, anomalies = 0;
  Json per_check = Json::array();
  for (const auto& c : summary.checks) {
    failures += c.fail;
    anomalies += c.anomalies.size();
    per_check.push_back(Json{{"check", c.check},
                             {"pass", c.pass},
                             {"fail", c.fail},
                             {"skipped", c.skipped},
                             {"anomalies", c.anomalies.size()}});
  }
  const Json j{{"records", a.records.string()}, {"csv", a.csv.string()},       {"summary", a.summary.string()},
               {"count", summary.count},        {"failures", failures},        {"anomalies", anomalies},
               {"seed", cfg.seed},              {"checks", std::move(per_check)}};
  out << format_json(j) << '\n';
  return failures == 0 ? kOk : kCheckFailed;
}

inline int cmd_inspect(const InputSpec& in, const std::string& show, std::ostream& out) {
  const RootSet roots = load_roots(in);
  const Circulant c = from_spectrum(roots);
  Json j;
  if (show == "circulant") {
    j = to_json(c);
  } else if (show == "gram") {
    j = to_json(gram(c));
  } else {
    require_degree(roots, 2);
    if (show == "submatrix") j = to_json(leading_submatrix(c));
    else if (show == "b") j = to_json(b_matrices(c).b);
    else j = to_json(b_matrices(c).b_tilde);
  }
  out << format_json(j) << '\n';
  return kOk;
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical points of polynomials through circulant differentiators", "circdiff"};
  app.require_subcommand(1);

  InputSpec crit_in, verify_in, inspect_in;
  auto* critical = app.add_subcommand("critical", "critical points as eigenvalues of the leading circulant block");
  detail::add_input_options(*critical, crit_in);

  auto* verify = app.add_subcommand("verify", "check every inequality and majorization on one polynomial");
  detail::add_input_options(*verify, verify_in);
  std::string verify_checks = "all";
  std::optional<double> verify_tol;
  std::string verify_alpha = "1";
  verify->add_option("--checks", verify_checks, "comma-separated check names, or all");
  verify->add_option("--tol", verify_tol, "base tolerance, scaled per check degree");
  verify->add_option("--alpha", verify_alpha, "shift used by the perturbation check");

  auto* ensemble = app.add_subcommand("ensemble", "run checks over a random ensemble");
  detail::EnsembleFlags ef;
  ensemble->add_option("--config", ef.config, "JSON configuration file");
  ensemble->add_option("--family", ef.family,
                       "gaussian, unit-circle, collinear, real-positive, multiple-roots, near-collinear");
  ensemble->add_option("--degree", ef.degree, "degree or range min..max");
  ensemble->add_option("--count", ef.count, "number of instances");
  ensemble->add_option("--seed", ef.seed, "64-bit seed (CIRC_SEED overrides)");
  ensemble->add_option("--sigma", ef.sigma, "gaussian spread");
  ensemble->add_flag("--equispaced", ef.equispaced, "unit-circle: exact roots of unity");
  ensemble->add_option("--alpha", ef.alpha, "collinear direction");
  ensemble->add_option("--beta", ef.beta, "collinear offset");
  ensemble->add_option("--range", ef.range, "real-positive range lo..hi");
  ensemble->add_option("--pattern", ef.pattern, "multiple-roots multiplicities, e.g. 2,3,1");
  ensemble->add_option("--epsilon", ef.epsilon, "near-collinear transverse noise");
  ensemble->add_option("--checks", ef.checks, "comma-separated check names, or all");
  ensemble->add_option("--tol", ef.tol, "base tolerance, scaled per check degree");
  ensemble->add_option("--threads", ef.threads, "worker threads (0: all cores)");
  ensemble->add_option("--output", ef.output, "directory for records.jsonl, summary.csv, summary.json");

  auto* inspect = app.add_subcommand("inspect", "print an intermediate matrix as JSON");
  detail::add_input_options(*inspect, inspect_in);
  std::string show;
  inspect->add_option("--show", show, "circulant, submatrix, gram, b or btilde")
      ->required()
      ->check(CLI::IsMember({"circulant", "submatrix", "gram", "b", "btilde"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*critical) return detail::cmd_critical(crit_in, out);
    if (*verify) return detail::cmd_verify(verify_in, verify_checks, verify_tol, parse_complex(verify_alpha), out, err);
    if (*ensemble) return detail::cmd_ensemble(ef, out);
    if (*inspect) return detail::cmd_inspect(inspect_in, show, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace circdiff::cli
