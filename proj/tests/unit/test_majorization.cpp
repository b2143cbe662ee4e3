#include "helpers.hpp"
#include "oracle/frozen_values.hpp"

namespace circdiff {
namespace {

using testing::reals_near;

RootSet unity(std::size_t n) {
  CVector r;
  for (std::size_t k = 0; k < n; ++k) r.push_back(unit_root(static_cast<long long>(k), static_cast<long long>(n)));
  return canonical_order(r);
}

TEST(PhiTransform, ParseAndName) {
  EXPECT_EQ(PhiTransform::parse("identity").name(), "identity");
  EXPECT_EQ(PhiTransform::parse("power:2").name(), "power:2");
  EXPECT_EQ(PhiTransform::parse("power:0.5").name(), "power:0.5");
  EXPECT_EQ(PhiTransform::parse("log:0.001").name(), "log:0.001");
  EXPECT_THROW(PhiTransform::parse("square"), ParseError);
  EXPECT_THROW(PhiTransform::parse("power:x"), ParseError);
  EXPECT_THROW(PhiTransform::parse("power:-1"), DomainError);
  EXPECT_THROW(PhiTransform::parse("log:0"), DomainError);
}

TEST(PhiTransform, Values) {
  EXPECT_EQ(PhiTransform::identity()(2.5), 2.5);
  EXPECT_EQ(PhiTransform::power(3.0)(2.0), 8.0);
  EXPECT_DOUBLE_EQ(PhiTransform::shifted_log(1.0)(std::exp(1.0) - 1.0), 1.0);
}

TEST(PhiTransform, IncreasingAndConvexAfterExp) {
  const std::vector<PhiTransform> phis{PhiTransform::identity(), PhiTransform::power(0.5), PhiTransform::power(2.0),
                                       PhiTransform::power(4.0), PhiTransform::shifted_log(1e-3),
                                       PhiTransform::shifted_log(1.0)};
  const double h = 1e-2;
  for (const auto& phi : phis) {
    for (double t = 0.0; t < 20.0; t += 0.37) EXPECT_LT(phi(t), phi(t + 0.01)) << phi.name() << " t=" << t;
    for (double x = -8.0; x <= 3.0; x += 0.05) {
      const double second = phi(std::exp(x + h)) - 2.0 * phi(std::exp(x)) + phi(std::exp(x - h));
      EXPECT_GE(second, -1e-12 * std::max(1.0, std::abs(phi(std::exp(x))))) << phi.name() << " x=" << x;
    }
  }
}

TEST(WeakMajorizes, Examples) {
  const auto a = weak_majorizes({1.0, 2.0, 3.0}, {3.0, 2.0, 1.0}, 1e-12);
  EXPECT_TRUE(a.holds);
  EXPECT_TRUE(a.strong);
  const auto b = weak_majorizes({4.0, 0.0}, {3.0, 2.0}, 1e-12);
  EXPECT_FALSE(b.holds);
  EXPECT_EQ(b.prefix_slacks[0], -1.0);
  const auto c = weak_majorizes({0.0, 0.0}, {1.0, 1.0}, 1e-12);
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(c.strong);
  EXPECT_THROW(weak_majorizes({1.0}, {1.0, 2.0}, 0.0), DomainError);
}

TEST(WeakMajorizes, SortsDescendingAndReportsPrefixSlacks) {
  const auto r = weak_majorizes({1.0, 5.0, 2.0}, {4.0, 6.0, 0.0}, 0.0);
  EXPECT_EQ(r.left, (RVector{5.0, 2.0, 1.0}));
  EXPECT_EQ(r.right, (RVector{6.0, 4.0, 0.0}));
  EXPECT_EQ(r.prefix_slacks, (RVector{1.0, 3.0, 2.0}));
  EXPECT_TRUE(r.holds);
}

TEST(KyFan, Examples) {
  CVector line{cplx(2), cplx(-1), cplx(0.5), cplx(3)};
  const auto real = kyfan_check(canonical_order(line));
  EXPECT_TRUE(real.holds);
  EXPECT_TRUE(real.strong);
  EXPECT_TRUE(reals_near(real.left, real.right, 1e-12));

  const auto cube = kyfan_check(unity(3));
  EXPECT_TRUE(cube.holds);
  EXPECT_TRUE(reals_near(cube.left, RVector{0.0, 0.0}, 1e-12));
  EXPECT_TRUE(reals_near(cube.right, RVector{0.5, -0.5}, 1e-12));

  const auto imag = kyfan_check(canonical_order({cplx(0, 1), cplx(0, -1)}));
  EXPECT_TRUE(imag.holds);
  EXPECT_TRUE(reals_near(imag.right, RVector{0.0}, 1e-15));
}

TEST(KyFan, FrozenHermitianPart) {
  const auto r = kyfan_check(canonical_order(frozen::kRootsA));
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(reals_near(r.right, frozen::kHermPartA, 1e-12));
  EXPECT_LE(r.cross_check, 1e-10);
}

TEST(GramModulusMajorization, Examples) {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto r = thm12_check(unity(n), PhiTransform::identity());
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(reals_near(r.right, RVector(n - 1, 1.0), 1e-6)) << n;
  }
  const auto two = thm12_check(canonical_order({cplx(3), cplx(1)}), PhiTransform::identity());
  EXPECT_TRUE(reals_near(two.left, RVector{2.0}, 1e-12));
  EXPECT_TRUE(reals_near(two.right, RVector{std::sqrt(5.0)}, 1e-12));
  EXPECT_TRUE(two.holds);
  const auto pm = thm12_check(canonical_order({cplx(1), cplx(-1)}), PhiTransform::power(2.0));
  EXPECT_TRUE(reals_near(pm.left, RVector{0.0}, 1e-15));
  EXPECT_TRUE(reals_near(pm.right, RVector{1.0}, 1e-12));
  EXPECT_EQ(pm.name, "thm12[power:2]");
}

TEST(GramModulusMajorization, FrozenGramEigenvalues) {
  EXPECT_TRUE(reals_near(gram_submatrix_eigenvalues(canonical_order(frozen::kRootsA)), frozen::kGramSubA, 1e-12));
}

TEST(Weyl, Examples) {
  const RootSet shift = unity(3);
  const WeylReport r = weyl_domination(shift);
  EXPECT_TRUE(reals_near(r.singular, RVector{1.0, 0.0}, 1e-12));
  EXPECT_TRUE(reals_near(r.sqrt_eta, RVector{1.0, 1.0}, 1e-12));
  EXPECT_TRUE(r.holds);
  const WeylReport pm = weyl_domination(canonical_order({cplx(1), cplx(-1)}));
  EXPECT_TRUE(reals_near(pm.singular, RVector{0.0}, 1e-15));
  EXPECT_TRUE(reals_near(pm.sqrt_eta, RVector{1.0}, 1e-15));
}

TEST(Weyl, FrozenSingularValues) {
  const WeylReport r = weyl_domination(canonical_order(frozen::kRootsA));
  EXPECT_TRUE(reals_near(r.singular, frozen::kSubSingularA, 1e-12));
  EXPECT_TRUE(r.holds);
}

TEST(RankOne, ShiftCirculantAndRandom) {
  const RankOneReport shift = rank_one_structure(unity(3));
  EXPECT_LE(shift.second_singular, 1e-15);
  EXPECT_LE(shift.outer_mismatch, 1e-15);
  testing::Sampler s(71);
  for (int trial = 0; trial < 50; ++trial) {
    const RootSet roots = canonical_order(s.gaussian_roots(s.integer(2, 24), s.uniform(0.3, 4.0)));
    const double s2 = roots.scale() * roots.scale();
    const RankOneReport r = rank_one_structure(roots);
    EXPECT_LE(r.second_singular, 1e-10 * s2);
    EXPECT_GE(r.min_eigenvalue, -1e-10 * s2);
    EXPECT_LE(r.outer_mismatch, 1e-12 * s2);
  }
}

TEST(PositiveRootMajorization, Examples) {
  const auto ones = thm13_check(canonical_order({cplx(1), cplx(1), cplx(1), cplx(1)}), PhiTransform::identity());
  EXPECT_TRUE(reals_near(ones.left, RVector{1.0, 1.0, 1.0}, 1e-7));
  EXPECT_TRUE(reals_near(ones.right, RVector{1.0, 1.0, 1.0}, 1e-7));
  EXPECT_TRUE(ones.holds);

  const auto two = thm13_check(canonical_order({cplx(3), cplx(1)}), PhiTransform::identity());
  EXPECT_TRUE(reals_near(two.left, RVector{2.0}, 1e-12));
  EXPECT_TRUE(reals_near(two.right, RVector{std::sqrt(5.0)}, 1e-12));

  const auto three = thm13_check(canonical_order({cplx(1), cplx(2), cplx(3)}), PhiTransform::identity());
  EXPECT_TRUE(reals_near(three.left, frozen::kXiC, 1e-12));
  RVector root_eta;
  for (double e : frozen::kEtaC) root_eta.push_back(std::sqrt(e));
  EXPECT_TRUE(reals_near(three.right, root_eta, 1e-12));
  EXPECT_TRUE(three.holds);
}

TEST(PositiveRootMajorization, RejectsNonPositive) {
  EXPECT_THROW(thm13_check(canonical_order({cplx(1), cplx(-2)}), PhiTransform::identity()), DomainError);
  EXPECT_THROW(thm13_check(canonical_order({cplx(1), cplx(2, 1)}), PhiTransform::identity()), DomainError);
}

TEST(Majorization, RandomSuiteHolds) {
  testing::Sampler s(72);
  const std::vector<PhiTransform> phis{PhiTransform::identity(), PhiTransform::power(2.0), PhiTransform::power(4.0),
                                       PhiTransform::shifted_log(1e-6)};
  for (int trial = 0; trial < 80; ++trial) {
    const RootSet roots = canonical_order(s.gaussian_roots(s.integer(2, 16)));
    const CVector w = critical_points(roots).critical_points.values;
    EXPECT_TRUE(kyfan_check(roots, w).holds);
    for (const auto& phi : phis) EXPECT_TRUE(thm12_check(roots, w, phi).holds) << phi.name();
    EXPECT_TRUE(weyl_domination(roots).holds);
    CVector positive;
    for (std::size_t k = 0, n = s.integer(2, 16); k < n; ++k) positive.emplace_back(s.uniform(0.1, 10.0), 0.0);
    for (const auto& phi : phis) EXPECT_TRUE(thm13_check(canonical_order(positive), phi).holds) << phi.name();
  }
}

}  // namespace
}  // namespace circdiff
