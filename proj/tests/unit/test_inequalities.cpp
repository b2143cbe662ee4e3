#include "helpers.hpp"
#include "oracle/frozen_values.hpp"

namespace circdiff {
namespace {

using testing::complex_near;

RootSet cube_roots() { return canonical_order({unit_root(0, 3), unit_root(1, 3), unit_root(2, 3)}); }
RootSet pm_one() { return canonical_order({cplx(1), cplx(-1)}); }
RootSet one_zero_minus_one() { return canonical_order({cplx(1), cplx(0), cplx(-1)}); }

TEST(PowerSums, Examples) {
  const PowerSums a = power_sums(pm_one());
  EXPECT_EQ(a.s1, cplx(0.0));
  EXPECT_EQ(a.s2, cplx(2.0));
  EXPECT_EQ(a.m2, 2.0);
  EXPECT_EQ(a.m4, 2.0);
  const PowerSums b = power_sums(cube_roots());
  EXPECT_TRUE(complex_near(b.s1, 0.0, 1e-15));
  EXPECT_TRUE(complex_near(b.s2, 0.0, 1e-15));
  EXPECT_NEAR(b.m2, 3.0, 1e-15);
  EXPECT_NEAR(b.m4, 3.0, 1e-15);
  const PowerSums c = power_sums(canonical_order({cplx(3), cplx(1)}));
  EXPECT_EQ(c.s1, cplx(4.0));
  EXPECT_EQ(c.s2, cplx(10.0));
  EXPECT_EQ(c.m2, 10.0);
  EXPECT_EQ(c.m4, 82.0);
}

TEST(PowerSums, FrozenAndCauchySchwarz) {
  const PowerSums p = power_sums(canonical_order(frozen::kRootsA));
  EXPECT_TRUE(complex_near(p.s1, frozen::kS1A, 1e-14));
  EXPECT_TRUE(complex_near(p.s2, frozen::kS2A, 1e-14));
  EXPECT_DOUBLE_EQ(p.m2, frozen::kM2A);
  EXPECT_DOUBLE_EQ(p.m4, frozen::kM4A);
  EXPECT_LE(p.m2 * p.m2, static_cast<double>(p.n) * p.m4);
}

TEST(Schoenberg, Examples) {
  const auto a = schoenberg_check(pm_one());
  EXPECT_NEAR(a.lhs, 0.0, 1e-15);
  EXPECT_NEAR(a.rhs, 0.0, 1e-15);
  EXPECT_TRUE(a.equality && a.collinear && a.holds);

  const auto b = schoenberg_check(cube_roots());
  EXPECT_NEAR(b.lhs, 0.0, 1e-12);
  EXPECT_NEAR(b.rhs, 1.0, 1e-14);
  EXPECT_FALSE(b.equality);
  EXPECT_FALSE(b.collinear);
  EXPECT_TRUE(b.holds);

  const auto c = schoenberg_check(one_zero_minus_one());
  EXPECT_NEAR(c.lhs, 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(c.rhs, 2.0 / 3.0, 1e-15);
  EXPECT_TRUE(c.equality && c.collinear && c.holds);
}

TEST(Schoenberg, FrozenGenericSet) {
  const auto r = schoenberg_check(canonical_order(frozen::kRootsA));
  EXPECT_NEAR(r.lhs, frozen::kSumW2A, 1e-12);
  EXPECT_NEAR(r.rhs, frozen::kSchoenbergRhsA, 1e-13);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.equality);
}

TEST(QuarticGeneral, Examples) {
  const auto a = quartic_general_check(pm_one());
  EXPECT_NEAR(a.rhs, 0.0, 1e-14);
  EXPECT_TRUE(a.equality && a.collinear);

  const auto b = quartic_general_check(cube_roots());
  EXPECT_NEAR(b.lhs, 0.0, 1e-12);
  EXPECT_NEAR(b.rhs, 0.0, 1e-14);
  EXPECT_TRUE(b.equality);
  EXPECT_FALSE(b.collinear);

  const auto c = quartic_general_check(one_zero_minus_one());
  EXPECT_NEAR(c.lhs, 2.0 / 9.0, 1e-12);
  EXPECT_NEAR(c.rhs, 2.0 / 9.0, 1e-12);
  EXPECT_TRUE(c.equality && c.collinear);
}

TEST(QuarticGeneral, FrozenGenericSet) {
  const auto r = quartic_general_check(canonical_order(frozen::kRootsA));
  EXPECT_NEAR(r.lhs, frozen::kSumW4A, 1e-11);
  EXPECT_NEAR(r.rhs, frozen::kQuarticRhsA, 1e-12);
  EXPECT_TRUE(r.holds);
}

TEST(QuarticCentered, Examples) {
  const auto a = quartic_centered_check(one_zero_minus_one());
  EXPECT_NEAR(a.rhs, 2.0 / 9.0, 1e-14);
  EXPECT_TRUE(a.equality);
  EXPECT_NEAR(quartic_centered_check(pm_one()).rhs, 0.0, 1e-14);
  const auto c = quartic_centered_check(cube_roots());
  EXPECT_NEAR(c.rhs, 0.0, 1e-14);
  EXPECT_TRUE(c.equality);
}

TEST(QuarticCentered, FrozenAndRejectsOffCentre) {
  const auto r = quartic_centered_check(canonical_order(frozen::kRootsB));
  EXPECT_NEAR(r.lhs, frozen::kSumW4B, 1e-11);
  EXPECT_NEAR(r.rhs, frozen::kQuarticCenteredRhsB, 1e-12);
  EXPECT_TRUE(r.holds);
  EXPECT_THROW(quartic_centered_check(canonical_order({cplx(3), cplx(1)})), DomainError);
}

TEST(DeBruinSharma, Examples) {
  const auto a = debruin_sharma_check(one_zero_minus_one());
  EXPECT_NEAR(a.rhs, 2.0 / 9.0, 1e-14);
  EXPECT_TRUE(a.equality && a.holds);
  const auto b = debruin_sharma_check(cube_roots());
  EXPECT_NEAR(b.rhs, 1.0, 1e-14);
  EXPECT_FALSE(b.equality);
  EXPECT_TRUE(b.holds);
  EXPECT_NEAR(debruin_sharma_check(pm_one()).rhs, 0.0, 1e-14);
}

TEST(DeBruinSharma, FrozenAndDominatesCentredBound) {
  const auto r = debruin_sharma_check(canonical_order(frozen::kRootsB));
  EXPECT_NEAR(r.rhs, frozen::kDeBruinSharmaRhsB, 1e-12);
  EXPECT_GE(r.rhs, frozen::kQuarticCenteredRhsB);
  EXPECT_THROW(debruin_sharma_check(canonical_order({cplx(3), cplx(1)})), DomainError);
}

TEST(TraceBB, Examples) {
  const Circulant shift({0.0, 1.0, 0.0});
  EXPECT_EQ(trace_bb(shift), 0.0);
  EXPECT_EQ(trace_bb_dense(shift), 0.0);
  const Circulant swap = from_spectrum(pm_one());
  EXPECT_EQ(trace_bb(swap), 0.0);
  EXPECT_EQ(trace_bb_dense(swap), 0.0);
}

TEST(TraceBB, FrozenMatchesRootFormula) {
  const Circulant c = from_spectrum(canonical_order(frozen::kRootsA));
  EXPECT_NEAR(trace_bb(c), frozen::kTraceBBA, 1e-12);
  EXPECT_NEAR(trace_bb_dense(c), frozen::kTraceBBA, 1e-12);
}

TEST(TraceBB, ThreeRoutesAgree) {
  testing::Sampler s(61);
  for (int trial = 0; trial < 300; ++trial) {
    const RootSet roots = canonical_order(s.gaussian_roots(s.integer(2, 12), s.uniform(0.2, 3.0)));
    const Circulant c = from_spectrum(roots);
    const double s4 = std::pow(roots.scale(), 4);
    const double dense = trace_bb_dense(c);
    EXPECT_NEAR(trace_bb(c), dense, 1e-9 * s4);
    EXPECT_NEAR(quartic_general_rhs(roots.values()), dense, 1e-9 * s4);
  }
}

TEST(Collinearity, Examples) {
  EXPECT_TRUE(collinearity(canonical_order({cplx(1), cplx(2, 1), cplx(3, 2)}), 1e-9));
  EXPECT_FALSE(collinearity(cube_roots(), 1e-9));
  testing::Sampler s(62);
  for (int trial = 0; trial < 10; ++trial) EXPECT_TRUE(collinearity(canonical_order(s.gaussian_roots(2)), 0.0));
}

TEST(Collinearity, ClusterCountsAsCollinear) {
  EXPECT_TRUE(collinearity(canonical_order({cplx(1, 1), cplx(1, 1), cplx(1, 1)}), 1e-9));
}

TEST(InequalityReport, SlackIsRhsMinusLhs) {
  testing::Sampler s(63);
  const RootSet roots = canonical_order(s.gaussian_roots(6));
  for (const auto& r : {schoenberg_check(roots), quartic_general_check(roots)}) EXPECT_EQ(r.slack, r.rhs - r.lhs);
  EXPECT_EQ(schoenberg_check(roots).order, 2);
  EXPECT_EQ(quartic_general_check(roots).order, 4);
}

TEST(Inequalities, HoldOnRandomInstancesWithEqualityForCollinear) {
  testing::Sampler s(64);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = s.integer(2, 20);
    CVector r;
    const bool line = trial % 3 == 0;
    const cplx alpha = s.complex(), beta = s.complex();
    for (std::size_t k = 0; k < n; ++k) r.push_back(line ? alpha * s.normal() + beta : s.complex());
    const RootSet roots = canonical_order(r);
    const CVector w = critical_points(roots).critical_points.values;
    const auto sch = schoenberg_check(roots, w);
    const auto quart = quartic_general_check(roots, w);
    const auto schur = schur_check(roots, w);
    EXPECT_TRUE(sch.holds) << sch.slack;
    EXPECT_TRUE(quart.holds) << quart.slack;
    EXPECT_TRUE(schur.holds) << schur.slack;
    if (line) {
      EXPECT_TRUE(sch.collinear);
      EXPECT_TRUE(sch.equality) << sch.slack;
      EXPECT_TRUE(quart.equality) << quart.slack;
    }
    if (!line && n >= 3) {
      EXPECT_FALSE(sch.equality) << sch.slack;
    }
  }
}

TEST(Inequalities, CentredChainOrdering) {
  testing::Sampler s(65);
  for (int trial = 0; trial < 200; ++trial) {
    CVector r = s.gaussian_roots(s.integer(2, 20));
    cplx mean = 0.0;
    for (const auto& z : r) mean += z;
    mean /= static_cast<double>(r.size());
    for (auto& z : r) z -= mean;
    const RootSet roots = canonical_order(r);
    const CVector w = critical_points(roots).critical_points.values;
    const auto q = quartic_centered_check(roots, w);
    const auto d = debruin_sharma_check(roots, w);
    const double tol = 1e-7 * std::pow(roots.scale(), 4);
    EXPECT_LE(q.lhs, q.rhs + tol);
    EXPECT_LE(q.rhs, d.rhs + tol);
    EXPECT_TRUE(d.holds);
  }
}

TEST(Tolerances, FromScalarScalesByDegree) {
  const Tolerances t = Tolerances::from_scalar(1e-6);
  EXPECT_EQ(t.violation, 1e-6);
  EXPECT_DOUBLE_EQ(t.violation_quartic, 1e-5);
  EXPECT_DOUBLE_EQ(t.equality, 1e-5);
  EXPECT_DOUBLE_EQ(t.equality_quartic, 1e-4);
  EXPECT_EQ(t.majorization, 1e-6);
}

}  // namespace
}  // namespace circdiff
