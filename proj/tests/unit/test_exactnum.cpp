#include <gtest/gtest.h>

#include <random>

#include "drg/exactnum.hpp"
#include "drg/spectral.hpp"
#include "support/numeric_oracle.hpp"

using namespace drg;

namespace {

IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly p{1};
  for (long r : roots) p = p * IntPoly{-r, 1};
  return p;
}

std::vector<double> to_doubles(const IntPoly& p) {
  std::vector<double> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_d());
  return out;
}

}  // namespace

TEST(Rational, FloorCeilAndFormatting) {
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(floor_of(Rational(6)), 6);
  EXPECT_EQ(to_string(make_rational(14, 4)), "7/2");
  EXPECT_EQ(to_string(Rational(-3)), "-3");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_EQ(make_rational(6, -4), Rational(-3, 2));
}

TEST(IntPoly, ArithmeticAndEvaluation) {
  const IntPoly p{-1, 0, 1};  // x^2 - 1
  const IntPoly q{1, 1};      // x + 1
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((p * q).degree(), 3);
  EXPECT_EQ(p.eval(Rational(3)), 8);
  EXPECT_EQ(p.sign_at(Rational(1, 2)), -1);
  EXPECT_EQ(p.sign_at(Rational(1)), 0);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.derivative(), (IntPoly{0, 2}));
  EXPECT_EQ((IntPoly{4, 6, 2}).primitive(), (IntPoly{2, 3, 1}));
  EXPECT_EQ(to_string((IntPoly{4, 6, 2}).content()), "2");
}

TEST(IntPoly, GcdAndExactDivision) {
  const IntPoly a = from_roots({1, 2, 3});
  const IntPoly b = from_roots({2, 3, 5});
  EXPECT_EQ(gcd(a, b), from_roots({2, 3}));
  const auto quot = divide_exact(a, from_roots({2}));
  ASSERT_TRUE(quot);
  EXPECT_EQ(*quot, from_roots({1, 3}));
  EXPECT_FALSE(divide_exact(a, from_roots({7})));
  EXPECT_FALSE(is_squarefree(from_roots({1, 1, 2})));
  EXPECT_EQ(squarefree_part(from_roots({1, 1, 2})), from_roots({1, 2}));
}

TEST(RatPoly, InverseModulo) {
  const RatPoly m(IntPoly{-5, 0, 1});  // x^2 - 5
  const RatPoly a(IntPoly{1, 1});      // x + 1
  const RatPoly inv = inverse_mod(a, m);
  const RatPoly prod = reduce_mod(a * inv, m);
  EXPECT_EQ(prod, RatPoly::constant(1));
  EXPECT_THROW(inverse_mod(RatPoly(IntPoly{-5, 0, 1}), m), std::domain_error);
}

TEST(IntegerRoots, SmallCases) {
  const auto r = integer_roots(IntPoly{0, -1, 0, 1});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], (IntegerRoot{-1, 1}));
  EXPECT_EQ(r[1], (IntegerRoot{0, 1}));
  EXPECT_EQ(r[2], (IntegerRoot{1, 1}));
  EXPECT_TRUE(integer_roots(IntPoly{1, 0, 1}).empty());
  try {
    integer_roots(IntPoly{});
    FAIL() << "expected domain_error";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "undefined roots");
  }
}

TEST(IntegerRoots, CharPolyOfQuotientMatrix) {
  const auto p = char_poly(matrix_L(IntersectionArray({15, 8, 1}, {1, 4, 15})));
  std::vector<long> roots;
  for (const auto& r : integer_roots(p)) roots.push_back(r.value.get_si());
  for (long want : {15L, -1L, -3L}) EXPECT_NE(std::find(roots.begin(), roots.end(), want), roots.end()) << want;
}

TEST(IntegerRoots, PlantedRootsAreRecovered) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> root(-20, 20);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> planted(deg(rng));
    for (auto& r : planted) r = root(rng);
    // Times an irreducible quadratic with no integer roots, sometimes.
    IntPoly p = from_roots(planted);
    if (trial % 3 == 0) p = p * IntPoly{-7, 0, 1};
    std::map<long, int> want;
    for (long r : planted) ++want[r];
    std::map<long, int> got;
    for (const auto& r : integer_roots(p)) got[r.value.get_si()] = r.multiplicity;
    EXPECT_EQ(got, want) << p.to_string();
  }
}

TEST(Isolation, SquareRootOfFive) {
  const auto roots = isolate_real_roots(IntPoly{-5, 0, 1});
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_LT(roots[0].lower(), Rational(-2));
  EXPECT_GT(roots[0].upper(), Rational(-3));
  EXPECT_LE(roots[0].upper(), roots[1].lower());
  const auto fine = roots[1].refined(make_rational(1, 1000000));
  EXPECT_LE(Rational(fine.upper() - fine.lower()), make_rational(1, 1000000));
  EXPECT_NEAR(fine.approx(), std::sqrt(5.0), 1e-6);
  EXPECT_EQ(roots[0].to_string(), "-sqrt(5)");
}

TEST(Isolation, LinearIsExact) {
  const auto roots = isolate_real_roots(IntPoly{-7, 1});
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_TRUE(roots[0].is_integer());
  EXPECT_EQ(roots[0].exact_value(), 7);
}

TEST(Isolation, RejectsRepeatedRoots) {
  EXPECT_THROW(isolate_real_roots(from_roots({2, 2})), std::invalid_argument);
}

TEST(Isolation, RationalRootsAreExact) {
  // (2x - 1)(3x + 2)(x^2 - 2)
  const IntPoly p = IntPoly{-1, 2} * IntPoly{2, 3} * IntPoly{-2, 0, 1};
  const auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_TRUE(roots[1].is_exact());
  EXPECT_EQ(roots[1].exact_value(), Rational(-2, 3));
  EXPECT_EQ(roots[2].exact_value(), Rational(1, 2));
  EXPECT_FALSE(roots[3].is_exact());
}

TEST(Isolation, CountMatchesNumericSolver) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> root(-30, 30);
  std::uniform_int_distribution<long> quad(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<long> distinct;
    const int n = 1 + trial % 4;
    while (static_cast<int>(distinct.size()) < n) distinct.insert(root(rng));
    IntPoly p = from_roots({distinct.begin(), distinct.end()});
    const long d = quad(rng);
    // x^2 - d has two real roots (possibly integer), x^2 + d none.
    IntPoly extra = trial % 2 ? IntPoly{-d, 0, 1} : IntPoly{d, 0, 1};
    if (trial % 2 && distinct.count(static_cast<long>(std::lround(std::sqrt(d)))) &&
        std::lround(std::sqrt(d)) * std::lround(std::sqrt(d)) == d)
      continue;
    if (trial % 2 && distinct.count(-std::lround(std::sqrt(d))) &&
        std::lround(std::sqrt(d)) * std::lround(std::sqrt(d)) == d)
      continue;
    p = p * extra;
    const auto iso = isolate_real_roots(p);
    const auto num = drg::testing::numeric_real_roots(to_doubles(p));
    ASSERT_EQ(iso.size(), num.size()) << p.to_string();
    for (std::size_t i = 0; i < iso.size(); ++i) {
      const auto fine = iso[i].refined(make_rational(BigInt(1), BigInt(1) << 50));
      EXPECT_NEAR(fine.approx(), num[i], 1e-9) << p.to_string();
    }
  }
}

TEST(Compare, AlgebraicAgainstRational) {
  const auto sqrt5 = isolate_real_roots(IntPoly{-5, 0, 1})[1];
  EXPECT_EQ(compare_to_rational(sqrt5, Rational(9, 4)), std::strong_ordering::less);
  EXPECT_EQ(compare_to_rational(sqrt5, Rational(11, 5)), std::strong_ordering::greater);
  EXPECT_EQ(compare(AlgebraicValue(Rational(5)), AlgebraicValue(Rational(5, 1))), std::strong_ordering::equal);
}

TEST(Compare, TwoIrrationals) {
  const auto sqrt5 = isolate_real_roots(IntPoly{-5, 0, 1})[1];
  const auto sqrt5_again = isolate_real_roots(IntPoly{-5, 0, 1} * IntPoly{-3, 1})[1];
  const auto sqrt6 = isolate_real_roots(IntPoly{-6, 0, 1})[1];
  EXPECT_EQ(compare(sqrt5, sqrt6), std::strong_ordering::less);
  EXPECT_EQ(compare(sqrt5, sqrt5_again), std::strong_ordering::equal);
}

TEST(Compare, ConsistentWithApproximation) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(2, 500), num(-3000, 3000);
  for (int trial = 0; trial < 500; ++trial) {
    const long n = d(rng);
    const auto roots = isolate_real_roots(IntPoly{-n, 0, 1});
    const Rational q(num(rng), 97);
    for (const auto& r : roots) {
      const double diff = std::sqrt(double(n)) * (r.approx() < 0 ? -1 : 1) - q.get_d();
      if (std::abs(diff) <= 1e-6) continue;
      EXPECT_EQ(compare_to_rational(r, q), diff < 0 ? std::strong_ordering::less : std::strong_ordering::greater);
    }
  }
}

TEST(Compare, ThetaOneBelowBoundary) {
  const auto s = spectrum(IntersectionArray({15, 8, 1}, {1, 4, 15}));
  EXPECT_EQ(compare_to_rational(s.theta(1).theta, Rational(8 - 1)), std::strong_ordering::less);
}

TEST(Sturm, Counts) {
  const SturmSequence s(from_roots({-3, 0, 4}));
  EXPECT_EQ(s.count_real_roots(), 3);
  EXPECT_EQ(s.count_roots(Rational(-3), Rational(4)), 2);  // (lo, hi]
  EXPECT_EQ(s.count_roots_at_most(Rational(0)), 2);
  EXPECT_EQ(s.count_roots_below(Rational(0)), 1);
}

TEST(Factor, RealRootedFactorization) {
  const IntPoly p = IntPoly{-5, 0, 1} * IntPoly{-1, 1} * IntPoly{-2, 0, 1};
  auto f = factor_real_rooted(p);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].degree(), 1);
  IntPoly prod{1};
  for (const auto& g : f) prod = prod * g;
  EXPECT_EQ(prod, p);
  // Minimal polynomial of sqrt(2) + sqrt(3) stays irreducible.
  EXPECT_EQ(factor_real_rooted(IntPoly{1, 0, -10, 0, 1}).size(), 1u);
}
