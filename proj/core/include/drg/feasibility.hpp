#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "drg/exactnum.hpp"
#include "drg/intersection_array.hpp"
#include "drg/spectral.hpp"

namespace drg {

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);

struct CriterionResult {
  std::string id;
  std::string title;
  Verdict verdict = Verdict::NotApplicable;
  /// For failures: the first violated inequality with both sides evaluated.
  std::string detail;
};

/// Criterion ids are "1".."12" and "floor" (smallest eigenvalue >= -3).
struct CriteriaOptions {
  std::set<std::string> disabled;
  bool with_bcn444 = false;
};

struct FeasibilityReport {
  IntersectionArray array;
  DerivedParams derived;
  ArrayFlags flags;
  std::vector<CriterionResult> criteria;
  std::vector<CriterionResult> lemmas;
  std::optional<CriterionResult> bcn444;
  std::optional<Spectrum> spectrum;
  std::vector<std::string> notes;
  bool feasible = false;

  const CriterionResult* criterion(const std::string& id) const;
};

/// All search criteria plus the lemma checks, evaluated exactly.
FeasibilityReport criteria_1_to_12(const IntersectionArray& ia, const CriteriaOptions& opts = {});

/// Ids in evaluation order.
const std::vector<std::string>& criterion_ids();

// ---------------------------------------------------------------- bounds

/// k < m(a1 + m) - (m - 1)c2; requires m >= 2.
bool lemma1_bound(std::int64_t k, std::int64_t a1, std::int64_t c2, std::int64_t m);
bool lemma1_bound(const IntersectionArray& ia, std::int64_t m);

/// (t(a1+1) - k) / C(t,2) + 1; requires t >= 2.
Rational claw_c2_lower(std::int64_t t, std::int64_t a1, std::int64_t k);
/// ((t-m)(a1+1) - m(m-1) + C(t,2) + 1) / (C(t,2) - m + 1); requires 2 <= m < t.
Rational lemma6_c2_lower(std::int64_t t, std::int64_t m, std::int64_t a1);

struct TerwilligerResult {
  std::vector<CriterionResult> per_index;  // i = 1..D
  CriterionResult diameter_bound;          // D <= (k + c_D) / (a1 + 2)
  bool all_pass() const;
};

TerwilligerResult terwilliger_check(const IntersectionArray& ia);

/// b2 <= (b1 + 1)/2 and c3 >= b3 + 2c2 - 2 (b3 = 0 when D = 3).
CriterionResult lemma7_check(const IntersectionArray& ia);

struct DelsarteBound {
  std::optional<Rational> exact;
  double approx = 0.0;
  /// Largest integer clique size allowed by the bound.
  std::int64_t max_clique = 0;
};

/// 1 + k / |theta_min|; throws std::domain_error unless theta_min < 0.
DelsarteBound delsarte_max_clique(std::int64_t k, const AlgebraicValue& theta_min);

enum class GeometricVerdict { CertifiedNonGeometric, Inconclusive };

struct GeometricCheck {
  GeometricVerdict verdict = GeometricVerdict::Inconclusive;
  std::string reason;
};

/// theta_min must be a negative integer dividing k for a geometric graph.
GeometricCheck geometric_necessary(std::int64_t k, const AlgebraicValue& theta_min);
GeometricCheck geometric_necessary(const IntersectionArray& ia);

/// Fail ("eliminated") iff m1 < k and theta1 + 1 does not divide b1. Not
/// applicable unless theta1 and m1 are integers.
CriterionResult bcn444_divisibility(const IntersectionArray& ia, const Spectrum& s);
CriterionResult bcn444_divisibility(const IntersectionArray& ia);

/// a1 + 1 <= N (zeta - 1) delta / gamma^2 with zeta = (v-1)/k,
/// gamma = theta1/(a1+1), delta = k/(a1+1). Throws std::domain_error when
/// theta1 = 0.
bool bigguy_bound(const Rational& v, std::int64_t k, const AlgebraicValue& theta1, std::int64_t a1,
                  const Rational& N);

}  // namespace drg
