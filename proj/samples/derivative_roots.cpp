// Critical points of a cubic through the circulant route, compared with the direct oracle.
#include <cstdio>

#include "circdiff/circdiff.hpp"

int main() {
  using namespace circdiff;
  const RootSet roots = canonical_order({cplx(3, 0), cplx(-1, 2), cplx(0.5, -1.5), cplx(-2, -0.5)});

  const Circulant c = from_spectrum(roots);
  std::printf("first row of C:\n");
  for (const auto& v : c.first_row()) std::printf("  % .6f %+.6fi\n", v.real(), v.imag());

  const CriticalPointResult r = critical_points(roots);
  const RootSet oracle = critical_points_oracle(roots);
  std::printf("eigenvalues of the leading block:\n");
  for (const auto& w : r.critical_points.values) std::printf("  % .12f %+.12fi\n", w.real(), w.imag());
  std::printf("distance to oracle roots of p': %.3e\n", match_multisets(r.critical_points.values, oracle.values()).max_distance);
  std::printf("n det(zI - C_{n-1}) vs p' coefficient error: %.3e\n", r.verification_residual);

  const InequalityReport s = schoenberg_check(roots, r.critical_points.values);
  std::printf("sum |w|^2 = %.9f <= %.9f (slack %.3e)\n", s.lhs, s.rhs, s.slack);
  return 0;
}
