#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "circdiff/core.hpp"

namespace circdiff {

namespace detail {

inline double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
  std::string_view body = text;
  if (body.front() == '+') body.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size() || body.empty())
    throw ParseError("malformed number '" + std::string(whole) + "'");
  if (!std::isfinite(v)) throw ParseError("non-finite number '" + std::string(whole) + "'");
  return v;
}

// Coefficient of an imaginary part with its trailing 'i' removed: "", "+", "-" mean +-1.
inline double parse_imag_coefficient(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text, whole);
}

}  // namespace detail

/// Parses one complex entry: `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`. Exponents such as
/// `1e-3+2.5E+1i` are accepted; whitespace is ignored.
inline cplx parse_complex(std::string_view raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  const std::string_view t = s;
  if (t.empty()) throw ParseError("empty entry");
  if (t.back() != 'i') return {detail::parse_real(t, raw), 0.0};

  const std::string_view body = t.substr(0, t.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, detail::parse_imag_coefficient(body, raw)};
  return {detail::parse_real(body.substr(0, split), raw), detail::parse_imag_coefficient(body.substr(split), raw)};
}

/// Comma-separated list of complex entries.
inline CVector parse_complex_list(std::string_view text) {
  CVector out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_complex(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace circdiff
