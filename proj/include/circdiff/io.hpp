#pragma once

#include <algorithm>
#include <json.hpp>
#include <string>

#include "circdiff/circulant.hpp"
#include "circdiff/core.hpp"
#include "circdiff/inequalities.hpp"
#include "circdiff/linalg.hpp"
#include "circdiff/majorization.hpp"
#include "circdiff/poly.hpp"

namespace circdiff {

using Json = nlohmann::ordered_json;

/// Doubles go out with negative zero folded to zero so outputs compare byte-for-byte.
inline double tidy(double x) { return x == 0.0 ? 0.0 : x; }

inline Json complex_json(const cplx& z) { return Json::array({tidy(z.real()), tidy(z.imag())}); }

inline Json complex_list_json(std::span<const cplx> values) {
  Json arr = Json::array();
  for (const auto& z : values) arr.push_back(complex_json(z));
  return arr;
}

inline Json real_list_json(std::span<const double> values) {
  Json arr = Json::array();
  for (double x : values) arr.push_back(tidy(x));
  return arr;
}

inline Json to_json(const Polynomial& p) { return Json{{"coeffs", complex_list_json(p.coeffs())}}; }
inline Json to_json(const RootSet& r) { return Json{{"roots", complex_list_json(r.values())}}; }
inline Json to_json(const Circulant& c) { return Json{{"first_row", complex_list_json(c.first_row())}}; }

inline Json to_json(const DenseMatrix& m) {
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", complex_list_json(m.entries())}};
}

inline Json to_json(const InequalityReport& r) {
  return Json{{"name", std::string(to_string(r.name))},
              {"lhs", tidy(r.lhs)},
              {"rhs", tidy(r.rhs)},
              {"slack", tidy(r.slack)},
              {"equality", r.equality},
              {"collinear", r.collinear},
              {"holds", r.holds}};
}

inline Json to_json(const MajorizationReport& r) {
  return Json{{"name", r.name},
              {"left", real_list_json(r.left)},
              {"right", real_list_json(r.right)},
              {"prefix_slacks", real_list_json(r.prefix_slacks)},
              {"holds", r.holds},
              {"strong", r.strong},
              {"cross_check", tidy(r.cross_check)}};
}

namespace detail {

inline void format_into(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      format_into(out, value, indent, depth + 1);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
    if (flat) {
      out += "[";
      for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      format_into(out, j[k], indent, depth + 1);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace detail

/// Indented JSON with arrays of scalars, such as [re, im] pairs, kept on one line.
inline std::string format_json(const Json& j, int indent = 2) {
  std::string out;
  detail::format_into(out, j, indent, 0);
  return out;
}

inline cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline CVector complex_list_from_json(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array())
    throw ParseError(std::string("expected an object with array field '") + key + "'");
  CVector out;
  for (const auto& v : j[key]) out.push_back(complex_from_json(v));
  return out;
}

inline Polynomial polynomial_from_json(const Json& j) { return Polynomial::monic_from(complex_list_from_json(j, "coeffs")); }

inline RootSet rootset_from_json(const Json& j) {
  const CVector roots = complex_list_from_json(j, "roots");
  if (roots.empty()) throw ParseError("root set is empty");
  return canonical_order(roots);
}

inline Circulant circulant_from_json(const Json& j) { return Circulant(complex_list_from_json(j, "first_row")); }

inline DenseMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
    throw ParseError("matrix needs rows, cols and entries");
  return DenseMatrix(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(), complex_list_from_json(j, "entries"));
}

}  // namespace circdiff
