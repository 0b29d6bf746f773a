#include <gtest/gtest.h>

#include <cmath>

#include "drg/spectral.hpp"
#include "support/numeric_oracle.hpp"

using namespace drg;

namespace {

std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// "[theta]^m" pairs from a spectrum with exact multiplicities.
std::vector<std::pair<std::string, std::string>> pairs(const Spectrum& s) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : s.entries)
    out.emplace_back(e.theta.to_string(), e.multiplicity ? to_string(*e.multiplicity) : "?");
  return out;
}

using P = std::vector<std::pair<std::string, std::string>>;

}  // namespace

TEST(Matrices, L) {
  const auto L = matrix_L(IntersectionArray({7, 4, 1}, {1, 2, 7}));
  EXPECT_EQ(L.diag, rats({0, 2, 4, 0}));
  EXPECT_EQ(L.super, rats({7, 4, 1}));
  EXPECT_EQ(L.sub, rats({1, 2, 7}));
  const auto ico = matrix_L(IntersectionArray({5, 2, 1}, {1, 2, 5}));
  EXPECT_EQ(ico.diag, rats({0, 2, 2, 0}));
}

TEST(Matrices, CaseScanPrefixRows) {
  const auto L = matrix_L(IntersectionArray({12, 9, 4, 4, 4}, {1, 1, 4, 4, 4}));
  EXPECT_EQ(L.diag[0], 0);
  EXPECT_EQ(L.super[0], 12);
  EXPECT_EQ(L.sub[0], 1);
  EXPECT_EQ(L.diag[1], 2);
  EXPECT_EQ(L.super[1], 9);
}

TEST(Matrices, R) {
  const auto R = matrix_R(IntersectionArray({7, 4, 1}, {1, 2, 7}));
  EXPECT_EQ(R.diag, rats({-1, 1, -1}));
  const auto R2 = matrix_R(IntersectionArray({15, 8, 1}, {1, 4, 15}));
  EXPECT_EQ(R2.diag, rats({-1, 3, -1}));
  EXPECT_EQ(R2.super, rats({8, 1}));
  EXPECT_EQ(R2.sub, rats({1, 4}));
  const auto R1 = matrix_R(IntersectionArray({3}, {1}));
  EXPECT_EQ(R1.order(), 1);
  EXPECT_EQ(R1.diag, rats({-1}));
}

TEST(Symmetrize, OffDiagonals) {
  Tridiag t;
  t.diag = rats({0, 2});
  t.super = rats({7});
  t.sub = rats({1});
  const auto s = symmetrize(t);
  EXPECT_EQ(s.off_squared, rats({7}));
  EXPECT_NEAR(s.off_numeric[0], std::sqrt(7.0), 1e-15);

  Tridiag sym;
  sym.diag = rats({1, 2});
  sym.super = rats({3});
  sym.sub = rats({3});
  const auto d = symmetrize(sym).dense();
  EXPECT_EQ(d, sym.dense());

  Tridiag bad = t;
  bad.sub = rats({0});
  EXPECT_THROW(symmetrize(bad), std::domain_error);
}

TEST(Symmetrize, NumericSpectrumPreserved) {
  const auto R = matrix_R(IntersectionArray({15, 8, 1}, {1, 4, 15}));
  const auto a = drg::testing::general_eigenvalues(R.dense());
  const auto b = drg::testing::symmetric_eigenvalues(symmetrize(R).dense());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
}

TEST(CharPoly, Examples) {
  Tridiag one;
  one.diag = rats({4});
  EXPECT_EQ(char_poly(one), (IntPoly{-4, 1}));
  auto roots = [](const char* text) {
    std::vector<long> out;
    for (const auto& r : integer_roots(char_poly(matrix_L(parse_array(text))))) out.push_back(r.value.get_si());
    return out;
  };
  EXPECT_EQ(roots("{15,8,1;1,4,15}"), (std::vector<long>{-3, -1, 5, 15}));
  EXPECT_EQ(roots("{27,16,1;1,4,27}"), (std::vector<long>{-3, -1, 9, 27}));
}

TEST(CharPoly, RIsLWithoutK) {
  for (const char* text : {"{15,8,1;1,4,15}", "{45,26,3;1,6,39}", "{5,4,1,1;1,1,4,5}", "{3,2,2,1;1,1,1,2}"}) {
    const auto ia = parse_array(text);
    const auto q = divide_exact(char_poly(matrix_L(ia)), IntPoly{-ia.k(), 1});
    ASSERT_TRUE(q) << text;
    EXPECT_EQ(q->primitive(), char_poly(matrix_R(ia)).primitive()) << text;
  }
}

TEST(Spectrum, KnownValues) {
  EXPECT_EQ(pairs(spectrum(parse_array("{15,8,1;1,4,15}"))), (P{{"15", "1"}, {"5", "12"}, {"-1", "15"}, {"-3", "20"}}));
  EXPECT_EQ(pairs(spectrum(parse_array("{27,16,1;1,4,27}"))), (P{{"27", "1"}, {"9", "28"}, {"-1", "27"}, {"-3", "84"}}));
  EXPECT_EQ(pairs(spectrum(parse_array("{45,24,1;1,8,45}"))),
            (P{{"45", "1"}, {"15", "23"}, {"-1", "45"}, {"-3", "115"}}));
  EXPECT_EQ(pairs(spectrum(parse_array("{45,24,2;1,10,36}"))),
            (P{{"45", "1"}, {"15", "16"}, {"5", "18"}, {"-3", "125"}}));
  EXPECT_EQ(pairs(spectrum(parse_array("{207,120,1;1,20,207}"))),
            (P{{"207", "1"}, {"69", "52"}, {"-1", "207"}, {"-3", "1196"}}));
}

TEST(Spectrum, IrrationalConjugatesShareMultiplicity) {
  const auto s = spectrum(parse_array("{7,4,1;1,2,7}"));
  EXPECT_EQ(pairs(s), (P{{"7", "1"}, {"sqrt(7)", "8"}, {"-1", "7"}, {"-sqrt(7)", "8"}}));
  EXPECT_EQ(s.entries[1].factor_index, s.entries[3].factor_index);
}

TEST(Spectrum, NonConstantResidueMeansIrrationalMultiplicity) {
  // v = 11 with eigenvalues +-sqrt(3); m = v / (1 + k u1^2 + k2 u2^2).
  const auto s = spectrum(parse_array("{5,2;1,2}"));
  ASSERT_EQ(s.entries.size(), 3u);
  EXPECT_FALSE(s.entries[1].multiplicity);
  const double th = std::sqrt(3.0), u1 = th / 5, u2 = ((th - 2) * u1 - 1) / 2;
  EXPECT_NEAR(s.entries[1].multiplicity_approx, 11 / (1 + 5 * u1 * u1 + 5 * u2 * u2), 1e-9);
  EXPECT_NE(s.entries[1].multiplicity_approx, s.entries[2].multiplicity_approx);
  EXPECT_FALSE(s.all_multiplicities_positive_integers());
}

TEST(Spectrum, MomentsMatchTraces) {
  const auto ia = parse_array("{45,26,3;1,6,39}");
  const auto s = spectrum(ia);
  EXPECT_EQ(s.moments.sum_m, s.v);
  EXPECT_EQ(s.moments.sum_m_theta, 0);
  EXPECT_EQ(s.moments.sum_m_theta2, s.v * ia.k());
  const auto m = exact_moments(s);
  EXPECT_EQ(m.sum_m, s.moments.sum_m);
}

TEST(Truncation, CaseEightOneHead) {
  for (long a2 = 0; a2 <= 7; ++a2) {
    Tridiag t;
    t.diag = rats({0, 1, a2});
    t.super = rats({8, 6});
    t.sub = rats({1, 1});
    const auto m = truncation_min_eig(t, 3);
    const bool at_most = compare_to_rational(m, Rational(-3)) != std::strong_ordering::greater;
    EXPECT_EQ(at_most, a2 <= 1) << a2;
  }
}

TEST(Truncation, Boundaries) {
  const auto L = matrix_L(parse_array("{15,8,1;1,4,15}"));
  EXPECT_EQ(truncation_min_eig(L, 1).exact_value(), 0);
  EXPECT_EQ(compare_to_rational(truncation_min_eig(L, 4), Rational(-3)), std::strong_ordering::equal);
  EXPECT_THROW(truncation_min_eig(L, 0), std::out_of_range);
  EXPECT_THROW(truncation_min_eig(L, 5), std::out_of_range);
  EXPECT_EQ(count_eigenvalues_below(L, Rational(-3)), 0);
  EXPECT_EQ(count_eigenvalues_at_most(L, Rational(-3)), 1);
}

TEST(DiagBound, Examples) {
  EXPECT_EQ(theta1_diag_bound(parse_array("{7,4,1;1,2,7}")), 1);
  EXPECT_EQ(theta1_diag_bound(parse_array("{15,8,1;1,4,15}")), 3);
  EXPECT_EQ(theta1_diag_bound(parse_array("{6,5,1;1,1,6}")), 0);
}

TEST(StandardSequence, FirstTerms) {
  const auto ia = parse_array("{15,8,1;1,4,15}");
  const auto u = standard_sequence(ia, 5.0L);
  ASSERT_EQ(u.size(), 4u);
  EXPECT_DOUBLE_EQ(static_cast<double>(u[0]), 1.0);
  EXPECT_NEAR(static_cast<double>(u[1]), 1.0 / 3.0, 1e-15);
}
