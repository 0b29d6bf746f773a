#include "drg/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace drg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "n/a";
  }
  return "?";
}

const CriterionResult* FeasibilityReport::criterion(const std::string& id) const {
  for (const auto& c : criteria)
    if (c.id == id) return &c;
  return nullptr;
}

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids{"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12", "floor"};
  return ids;
}

namespace {

Rational R(std::int64_t x) { return Rational(static_cast<long>(x)); }

std::string side(const std::string& expr, const Rational& value) {
  const std::string s = to_string(value);
  return expr == s ? s : expr + " = " + s;
}

std::string inequality(const std::string& lhs_expr, const Rational& lhs, const std::string& op,
                       const std::string& rhs_expr, const Rational& rhs) {
  return side(lhs_expr, lhs) + " " + op + " " + side(rhs_expr, rhs) + " is violated";
}

CriterionResult make(std::string id, std::string title) {
  CriterionResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.verdict = Verdict::Pass;
  return r;
}

void fail(CriterionResult& r, std::string detail) {
  if (r.verdict == Verdict::Fail) return;
  r.verdict = Verdict::Fail;
  r.detail = std::move(detail);
}

// Checks lhs op rhs and records the first failure.
void require(CriterionResult& r, const std::string& lhs_expr, const Rational& lhs, const std::string& op,
             const std::string& rhs_expr, const Rational& rhs) {
  const int c = cmp(lhs, rhs);
  bool ok = false;
  if (op == "<") ok = c < 0;
  if (op == "<=") ok = c <= 0;
  if (op == ">") ok = c > 0;
  if (op == ">=") ok = c >= 0;
  if (!ok) fail(r, inequality(lhs_expr, lhs, op, rhs_expr, rhs));
}

std::string idx(const char* name, int i) { return std::string(name) + std::to_string(i); }

std::string multiplicity_text(const SpectrumEntry& e) {
  if (e.multiplicity) return to_string(*e.multiplicity);
  std::ostringstream os;
  os << "~" << e.multiplicity_approx << " (irrational)";
  return os.str();
}

const std::map<std::string, std::string>& external_citations() {
  static const std::map<std::string, std::string> table{
      {"{6,4,1;1,1,6}", "c2 = 1 arrays are classified by the separate c2 = 1 analysis"},
      {"{27,16,1;1,4,27}", "nonexistence follows from a published multiplicity bound for antipodal covers"},
      {"{39,24,1;1,4,39}", "nonexistence is a published result on graphs with these parameters"},
      {"{45,26,3;1,6,39}", "primitive with v = 256; absent from the published tables of feasible arrays"},
  };
  return table;
}

}  // namespace

// ---------------------------------------------------------------- bounds

bool lemma1_bound(std::int64_t k, std::int64_t a1, std::int64_t c2, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("lemma1_bound requires m >= 2");
  return k < m * (a1 + m) - (m - 1) * c2;
}

bool lemma1_bound(const IntersectionArray& ia, std::int64_t m) {
  if (ia.diameter() < 2) throw std::invalid_argument("lemma1_bound requires c2");
  return lemma1_bound(ia.k(), ia.a(1), ia.c(2), m);
}

Rational claw_c2_lower(std::int64_t t, std::int64_t a1, std::int64_t k) {
  if (t < 2) throw std::invalid_argument("claw bound requires t >= 2");
  const Rational pairs = R(t * (t - 1) / 2);
  return (R(t * (a1 + 1) - k)) / pairs + 1;
}

Rational lemma6_c2_lower(std::int64_t t, std::int64_t m, std::int64_t a1) {
  if (m < 2 || m >= t) throw std::invalid_argument("lemma6_c2_lower requires 2 <= m < t");
  const std::int64_t pairs = t * (t - 1) / 2;
  return make_rational(BigInt(static_cast<long>((t - m) * (a1 + 1) - m * (m - 1) + pairs + 1)),
                       BigInt(static_cast<long>(pairs - m + 1)));
}

bool TerwilligerResult::all_pass() const {
  return diameter_bound.verdict != Verdict::Fail &&
         std::none_of(per_index.begin(), per_index.end(),
                      [](const CriterionResult& r) { return r.verdict == Verdict::Fail; });
}

TerwilligerResult terwilliger_check(const IntersectionArray& ia) {
  TerwilligerResult out;
  const int D = ia.diameter();
  const std::int64_t a1 = ia.a(1);
  for (int i = 1; i <= D; ++i) {
    auto r = make("terwilliger_" + std::to_string(i), "c_i - b_i >= c_{i-1} - b_{i-1} + a1 + 2");
    require(r, idx("c", i) + " - " + idx("b", i), R(ia.c(i) - ia.b(i)), ">=",
            idx("c", i - 1) + " - " + idx("b", i - 1) + " + a1 + 2", R(ia.c(i - 1) - ia.b(i - 1) + a1 + 2));
    out.per_index.push_back(std::move(r));
  }
  out.diameter_bound = make("terwilliger_diameter", "D <= (k + c_D) / (a1 + 2)");
  require(out.diameter_bound, "D", R(D), "<=", "(k + cD)/(a1 + 2)",
          Rational(R(ia.k() + ia.c(D))) / R(a1 + 2));
  return out;
}

CriterionResult lemma7_check(const IntersectionArray& ia) {
  auto r = make("lemma7", "b2 <= (b1 + 1)/2 and c3 >= b3 + 2c2 - 2");
  if (ia.diameter() < 3) {
    r.verdict = Verdict::NotApplicable;
    return r;
  }
  require(r, "b2", R(ia.b(2)), "<=", "(b1 + 1)/2", Rational(R(ia.b(1) + 1)) / 2);
  require(r, "c3", R(ia.c(3)), ">=", "b3 + 2c2 - 2", R(ia.b(3) + 2 * ia.c(2) - 2));
  return r;
}

DelsarteBound delsarte_max_clique(std::int64_t k, const AlgebraicValue& theta_min) {
  if (compare_to_rational(theta_min, 0) >= 0) throw std::domain_error("Delsarte bound needs theta_min < 0");
  DelsarteBound d;
  if (theta_min.is_exact()) {
    d.exact = Rational(Rational(1) - R(k) / theta_min.exact_value());
    d.approx = d.exact->get_d();
    d.max_clique = floor_of(*d.exact).get_si();
    return d;
  }
  d.approx = 1.0 + static_cast<double>(k) / -theta_min.approx();
  // Largest n with (n - 1)|theta| <= k, i.e. theta >= -k/(n - 1).
  auto admissible = [&](std::int64_t n) {
    return n <= 1 || compare_to_rational(theta_min, -R(k) / R(n - 1)) >= 0;
  };
  std::int64_t n = static_cast<std::int64_t>(std::floor(d.approx));
  while (!admissible(n)) --n;
  while (admissible(n + 1)) ++n;
  d.max_clique = n;
  return d;
}

GeometricCheck geometric_necessary(std::int64_t k, const AlgebraicValue& theta_min) {
  if (!theta_min.is_integer())
    return {GeometricVerdict::CertifiedNonGeometric, "theta_min = " + theta_min.to_string() + " is not an integer"};
  const BigInt t = theta_min.exact_value().get_num();
  if (t >= 0) return {GeometricVerdict::CertifiedNonGeometric, "theta_min is not negative"};
  if (BigInt(static_cast<long>(k)) % t != 0)
    return {GeometricVerdict::CertifiedNonGeometric,
            "theta_min = " + t.get_str() + " does not divide k = " + std::to_string(k)};
  return {GeometricVerdict::Inconclusive, "theta_min = " + t.get_str() + " divides k = " + std::to_string(k)};
}

GeometricCheck geometric_necessary(const IntersectionArray& ia) {
  return geometric_necessary(ia.k(), spectrum(ia).theta_min().theta);
}

CriterionResult bcn444_divisibility(const IntersectionArray& ia, const Spectrum& s) {
  auto r = make("bcn444", "m1 >= k or theta1 + 1 divides b1");
  const auto& e = s.theta(1);
  if (!e.theta.is_integer() || !e.multiplicity || e.multiplicity->get_den() != 1 || ia.diameter() < 2) {
    r.verdict = Verdict::NotApplicable;
    r.detail = "theta1 = " + e.theta.to_string() + " is not an integer";
    return r;
  }
  const BigInt theta1 = e.theta.exact_value().get_num();
  const BigInt m1 = e.multiplicity->get_num();
  const BigInt b1 = ia.b(1);
  if (m1 < ia.k() && (theta1 + 1 == 0 || b1 % (theta1 + 1) != 0)) {
    r.verdict = Verdict::Fail;
    r.detail = "m1 = " + m1.get_str() + " < k = " + std::to_string(ia.k()) + " and b1/(theta1 + 1) = " +
               b1.get_str() + "/" + BigInt(theta1 + 1).get_str() + " is not integral";
  }
  return r;
}

CriterionResult bcn444_divisibility(const IntersectionArray& ia) { return bcn444_divisibility(ia, spectrum(ia)); }

bool bigguy_bound(const Rational& v, std::int64_t k, const AlgebraicValue& theta1, std::int64_t a1,
                  const Rational& N) {
  if (compare_to_rational(theta1, 0) == 0) throw std::domain_error("gamma = 0");
  const Rational zeta = (v - 1) / R(k);
  const Rational delta = R(k) / R(a1 + 1);
  // a1+1 <= N(zeta-1)delta(a1+1)^2/theta1^2  <=>  theta1^2 <= N(zeta-1)delta(a1+1)
  const Rational B = N * (zeta - 1) * delta * R(a1 + 1);
  if (B <= 0) return false;
  const IntPoly q(std::vector<BigInt>{BigInt(-B.get_num()), 0, B.get_den()});
  const auto roots = isolate_real_roots(squarefree_part(q));
  return compare(theta1, roots.front()) >= 0 && compare(theta1, roots.back()) <= 0;
}

// ------------------------------------------------------------- criteria

FeasibilityReport criteria_1_to_12(const IntersectionArray& ia, const CriteriaOptions& opts) {
  FeasibilityReport rep;
  rep.array = ia;
  rep.derived = derive(ia);
  rep.flags = array_tests(ia);
  const int D = ia.diameter();
  const std::int64_t k = ia.k();
  const std::int64_t a1 = ia.a(1);
  const std::int64_t b1 = ia.b(1);
  const std::int64_t c2 = D >= 2 ? ia.c(2) : 0;
  auto enabled = [&](const std::string& id) { return opts.disabled.count(id) == 0; };
  auto off = [](CriterionResult r) {
    r.verdict = Verdict::NotApplicable;
    r.detail = "disabled";
    return r;
  };

  const bool needs_spectrum = opts.with_bcn444 || enabled("9") || enabled("10") || enabled("11") ||
                              enabled("12") || enabled("floor");
  if (needs_spectrum) rep.spectrum = spectrum(ia);

  // 1
  {
    auto r = make("1", "1 <= a1 < 100");
    require(r, "a1", R(a1), ">=", "1", 1);
    require(r, "a1", R(a1), "<", "100", 100);
    rep.criteria.push_back(enabled("1") ? r : off(r));
  }
  // 2
  {
    auto r = make("2", "2a1 + 3 <= k <= 3a1 - 2c2 + 8");
    require(r, "k", R(k), ">=", "2a1 + 3", R(2 * a1 + 3));
    require(r, "k", R(k), "<=", "3a1 - 2c2 + 8", R(3 * a1 - 2 * c2 + 8));
    rep.criteria.push_back(enabled("2") ? r : off(r));
  }
  // 3
  {
    auto r = make("3", "k_i integral and k_i a_i even");
    for (int i = 1; i <= D; ++i) {
      const Rational& ki = rep.derived.k_seq[static_cast<std::size_t>(i)];
      if (ki.get_den() != 1) {
        fail(r, idx("k", i) + " = " + to_string(ki) + " is not an integer");
        break;
      }
      const BigInt prod = ki.get_num() * ia.a(i);
      if (prod % 2 != 0) {
        fail(r, idx("k", i) + " * " + idx("a", i) + " = " + prod.get_str() + " is odd");
        break;
      }
    }
    rep.criteria.push_back(enabled("3") ? r : off(r));
  }
  // 4
  {
    auto r = make("4", "min{(a1+6)/5, (a1+2)/4} <= c2 <= (3a1 + 8 - k)/2");
    const Rational lo = std::min(Rational(Rational(R(a1 + 6)) / 5), Rational(Rational(R(a1 + 2)) / 4));
    require(r, "c2", R(c2), ">=", "min{(a1+6)/5, (a1+2)/4}", lo);
    require(r, "c2", R(c2), "<=", "(3a1 + 8 - k)/2", Rational(R(3 * a1 + 8 - k)) / 2);
    rep.criteria.push_back(enabled("4") ? r : off(r));
  }
  // 5
  {
    auto r = make("5", "monotone b and c in [1, k], b_i >= c_j for i + j <= D");
    const Validity v = formal_validity(ia);
    if (!v.ok) fail(r, v.reason);
    for (int i = 0; i < D && r.verdict == Verdict::Pass; ++i)
      require(r, idx("b", i), R(ia.b(i)), "<=", "k", R(k));
    for (int i = 1; i <= D && r.verdict == Verdict::Pass; ++i)
      require(r, idx("c", i), R(ia.c(i)), "<=", "k", R(k));
    rep.criteria.push_back(enabled("5") ? r : off(r));
  }
  // 6
  {
    auto r = make("6", "c_i - b_i >= c_{i-1} - b_{i-1} + a1 + 2 for 1 <= i <= D");
    for (const auto& t : terwilliger_check(ia).per_index)
      if (t.verdict == Verdict::Fail) fail(r, t.detail);
    rep.criteria.push_back(enabled("6") ? r : off(r));
  }
  // 7
  {
    auto r = make("7", "2c2 - 1 <= c3");
    if (D < 3) {
      r.verdict = Verdict::NotApplicable;
    } else {
      require(r, "2c2 - 1", R(2 * c2 - 1), "<=", "c3", R(ia.c(3)));
    }
    rep.criteria.push_back(enabled("7") ? r : off(r));
  }
  // 8
  {
    auto r = make("8", "(3a1 + 9 - k)(a2 + 3) - 3 b1 c2 >= 0");
    if (D < 2) {
      r.verdict = Verdict::NotApplicable;
    } else {
      const Rational lhs = R((3 * a1 + 9 - k) * (ia.a(2) + 3) - 3 * b1 * c2);
      require(r, "(3a1 + 9 - k)(a2 + 3) - 3b1c2", lhs, ">=", "0", 0);
    }
    rep.criteria.push_back(enabled("8") ? r : off(r));
  }
  // 9
  {
    auto r = make("9", "b1/2 - 1 < theta1 < b1 - 1 (D = 3)");
    if (D != 3 || !rep.spectrum) {
      r.verdict = Verdict::NotApplicable;
    } else {
      const AlgebraicValue& th1 = rep.spectrum->theta(1).theta;
      const Rational lo = Rational(R(b1)) / 2 - 1;
      const Rational hi = R(b1 - 1);
      if (compare_to_rational(th1, lo) <= 0)
        fail(r, "theta1 = " + th1.to_string() + " > b1/2 - 1 = " + to_string(lo) + " is violated");
      const auto upper = compare_to_rational(th1, hi);
      if (upper >= 0) fail(r, "theta1 = " + th1.to_string() + " < b1 - 1 = " + to_string(hi) + " is violated");
      if (upper == 0)
        rep.notes.push_back("theta1 = b1 - 1: boundary family with an external classification, "
                            "reported separately from this search");
    }
    rep.criteria.push_back(enabled("9") ? r : off(r));
  }
  // 10
  {
    auto r = make("10", "multiplicities are positive integers");
    if (!rep.spectrum) {
      r.verdict = Verdict::NotApplicable;
    } else {
      for (const auto& e : rep.spectrum->entries) {
        const bool ok = e.multiplicity && e.multiplicity->get_den() == 1 && *e.multiplicity > 0;
        if (!ok) {
          fail(r, "m(" + e.theta.to_string() + ") = " + multiplicity_text(e));
          break;
        }
      }
    }
    rep.criteria.push_back(enabled("10") ? r : off(r));
  }
  // 11
  {
    auto r = make("11", "some non-trivial eigenvalue is an integer (D = 3)");
    if (D != 3 || !rep.spectrum) {
      r.verdict = Verdict::NotApplicable;
    } else {
      const auto& es = rep.spectrum->entries;
      if (std::none_of(es.begin() + 1, es.end(), [](const SpectrumEntry& e) { return e.theta.is_integer(); }))
        fail(r, "theta1, theta2, theta3 are all irrational");
    }
    rep.criteria.push_back(enabled("11") ? r : off(r));
  }
  // 12
  {
    auto r = make("12", "algebraic conjugates share their multiplicity");
    if (!rep.spectrum) {
      r.verdict = Verdict::NotApplicable;
    } else {
      for (const auto& e : rep.spectrum->entries) {
        if (rep.spectrum->factors[e.factor_index].degree() >= 2 && !e.multiplicity) {
          fail(r, "conjugates of " + e.theta.to_string() + " have different multiplicities");
          break;
        }
      }
    }
    rep.criteria.push_back(enabled("12") ? r : off(r));
  }
  // floor
  {
    auto r = make("floor", "theta_min >= -3");
    if (!rep.spectrum) {
      r.verdict = Verdict::NotApplicable;
    } else {
      const AlgebraicValue& tmin = rep.spectrum->theta_min().theta;
      if (compare_to_rational(tmin, -3) < 0) fail(r, "theta_min = " + tmin.to_string() + " >= -3 is violated");
    }
    rep.criteria.push_back(enabled("floor") ? r : off(r));
  }

  // Informational lemma checks.
  if (D >= 2) {
    auto r = make("lemma1_m3", "k < 3(a1 + 3) - 2c2");
    require(r, "k", R(k), "<", "3(a1 + 3) - 2c2", R(3 * (a1 + 3) - 2 * c2));
    rep.lemmas.push_back(r);

    auto claw = make("claw_t4_m3", "c2 >= (a1 + 2)/4");
    require(claw, "c2", R(c2), ">=", "(a1 + 2)/4", lemma6_c2_lower(4, 3, a1));
    rep.lemmas.push_back(claw);

    auto c2b = make("c2_lower_5", "c2 >= (a1 + 6)/5");
    require(c2b, "c2", R(c2), ">=", "(a1 + 6)/5", Rational(R(a1 + 6)) / 5);
    rep.lemmas.push_back(c2b);
  }
  {
    const auto t = terwilliger_check(ia);
    auto r = make("terwilliger", "c_i - b_i >= c_{i-1} - b_{i-1} + a1 + 2 for all i");
    for (const auto& x : t.per_index)
      if (x.verdict == Verdict::Fail) fail(r, x.detail);
    rep.lemmas.push_back(r);
    rep.lemmas.push_back(t.diameter_bound);
  }
  rep.lemmas.push_back(lemma7_check(ia));
  if (rep.spectrum) {
    const auto& tmin = rep.spectrum->theta_min().theta;
    if (compare_to_rational(tmin, 0) < 0) {
      const auto d = delsarte_max_clique(k, tmin);
      auto r = make("delsarte", "clique size <= 1 + k/|theta_min|");
      std::ostringstream os;
      os << "bound = " << (d.exact ? to_string(*d.exact) : std::to_string(d.approx)) << ", max clique "
         << d.max_clique;
      r.detail = os.str();
      rep.lemmas.push_back(r);

      const auto g = geometric_necessary(k, tmin);
      auto gr = make("geometric_necessary", "theta_min is a negative integer dividing k");
      if (g.verdict == GeometricVerdict::CertifiedNonGeometric) gr.verdict = Verdict::Fail;
      gr.detail = g.reason;
      rep.lemmas.push_back(gr);
    }
    auto big = make("bigguy", "a1 + 1 <= N(zeta - 1)delta/gamma^2");
    const auto& e1 = rep.spectrum->theta(1);
    const auto& eD = rep.spectrum->theta_min();
    if (D >= 2 && e1.multiplicity && eD.multiplicity && compare_to_rational(e1.theta, 0) != 0) {
      const Rational N = R(k) / std::min(*e1.multiplicity, *eD.multiplicity);
      if (N <= 4) {
        if (!bigguy_bound(rep.derived.v, k, e1.theta, a1, N)) fail(big, "N = " + to_string(N));
        else big.detail = "N = " + to_string(N);
      } else {
        big.verdict = Verdict::NotApplicable;
        big.detail = "N = " + to_string(N) + " > 4";
      }
    } else {
      big.verdict = Verdict::NotApplicable;
    }
    rep.lemmas.push_back(big);
  }

  if (opts.with_bcn444 && rep.spectrum) rep.bcn444 = bcn444_divisibility(ia, *rep.spectrum);

  if (rep.flags.bipartite_formal) rep.notes.push_back("bipartite (a_i = 0 for all i)");
  if (rep.flags.antipodal_formal) rep.notes.push_back("antipodal (b_i = c_{D-i} for i != floor(D/2))");
  if (auto it = external_citations().find(format_array(ia)); it != external_citations().end())
    rep.notes.push_back("external citation: " + it->second);

  rep.feasible = std::none_of(rep.criteria.begin(), rep.criteria.end(),
                              [](const CriterionResult& r) { return r.verdict == Verdict::Fail; });
  if (rep.bcn444 && rep.bcn444->verdict == Verdict::Fail) rep.feasible = false;
  return rep;
}

}  // namespace drg
