#include <gtest/gtest.h>

#include <cmath>

#include "drg/graph.hpp"
#include "drg/search.hpp"

using namespace drg;

namespace {

const TaylorReport& report() {
  static const TaylorReport r = taylor_classify(300, true);
  return r;
}

std::vector<std::string> arrays(const std::vector<TaylorCandidate>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(format_array(x.array));
  return out;
}

}  // namespace

TEST(Taylor, IntegerBranchC2Values) {
  EXPECT_EQ(report().c2_values, (std::vector<std::int64_t>{2, 4, 6, 10}));
  EXPECT_EQ(arrays(report().integer_branch),
            (std::vector<std::string>{"{3,2,1;1,2,3}", "{9,4,1;1,4,9}", "{15,6,1;1,6,15}", "{27,10,1;1,10,27}"}));
}

TEST(Taylor, SmallC2CasesAreGeometric) {
  for (const auto& c : report().integer_branch) EXPECT_EQ(c.geometric, c.c2 <= 4) << format_array(c.array);
}

TEST(Taylor, IrrationalBranchIsIcosahedron) {
  ASSERT_EQ(report().irrational_branch.size(), 1u);
  const auto& ico = report().irrational_branch.front();
  EXPECT_EQ(format_array(ico.array), "{5,2,1;1,2,5}");
  EXPECT_EQ(ico.theta_min, "-sqrt(5)");
  EXPECT_FALSE(ico.geometric);
}

TEST(Taylor, NonGeometricAnswer) {
  std::vector<std::string> got;
  for (const auto& ia : report().non_geometric) got.push_back(format_array(ia));
  EXPECT_EQ(got, (std::vector<std::string>{"{5,2,1;1,2,5}", "{15,6,1;1,6,15}", "{27,10,1;1,10,27}"}));
}

TEST(Taylor, IntegerBranchHasThetaMinusThree) {
  // Taylor eigenvalues other than +-k, -1 are the roots of x^2 - (a1 - c2)x - k.
  for (const auto& c : report().integer_branch) {
    const double p = static_cast<double>(c.a1 - c.c2), k = static_cast<double>(c.array.k());
    EXPECT_NEAR((p - std::sqrt(p * p + 4 * k)) / 2, -3.0, 1e-12) << format_array(c.array);
    EXPECT_EQ(c.a1, 2 * c.c2 - 4);
  }
}

TEST(Taylor, RejectionsCarryReasons) {
  bool handshake = false, godsil = false;
  for (const auto& c : report().rejected) {
    EXPECT_FALSE(c.reason.empty()) << format_array(c.array);
    if (format_array(c.array) == "{7,3,1;1,3,7}") handshake = c.reason.find("odd") != std::string::npos;
    if (format_array(c.array) == "{63,22,1;1,22,63}") godsil = c.reason.find("k <=") != std::string::npos;
  }
  EXPECT_TRUE(handshake);
  EXPECT_TRUE(godsil);
}

TEST(Taylor, NamedGraphsRealizeTheirArrays) {
  for (const auto* branch : {&report().integer_branch, &report().irrational_branch}) {
    for (const auto& c : *branch) {
      ASSERT_FALSE(c.graph.empty()) << format_array(c.array);
    }
  }
  for (const char* name : {"hamming:3,2", "johnson:6,3", "halved_cube:6", "gosset", "icosahedron"}) {
    const auto res = check_distance_regular(construct(name));
    ASSERT_TRUE(res.distance_regular) << name;
    EXPECT_TRUE(array_tests(*res.array).antipodal_formal) << name;
  }
}

TEST(Taylor, WithoutVerificationSameArrays) {
  const auto quick = taylor_classify(300, false);
  EXPECT_EQ(arrays(quick.integer_branch), arrays(report().integer_branch));
  EXPECT_EQ(arrays(quick.irrational_branch), arrays(report().irrational_branch));
}
