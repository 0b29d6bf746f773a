#include <map>

#include "drg/graph.hpp"
#include "drg/search.hpp"

namespace drg {

namespace {

struct Known {
  std::string graph;
  std::string construction;
  bool geometric;
};

const std::map<std::string, Known>& known_graphs() {
  static const std::map<std::string, Known> m{
      {"{3,2,1;1,2,3}", {"3-cube", "hamming:3,2", true}},
      {"{9,4,1;1,4,9}", {"Johnson graph J(6,3)", "johnson:6,3", true}},
      {"{15,6,1;1,6,15}", {"halved 6-cube", "halved_cube:6", false}},
      {"{27,10,1;1,10,27}", {"Gosset graph", "gosset", false}},
      {"{5,2,1;1,2,5}", {"icosahedron", "icosahedron", false}},
  };
  return m;
}

// Godsil: an eigenvalue other than +-k with multiplicity m >= 3 forces
// k <= (m-1)(m+2)/2.
std::optional<std::string> godsil_violation(const IntersectionArray& ia, const Spectrum& sp) {
  const std::int64_t k = ia.k();
  for (std::size_t i = 1; i < sp.entries.size(); ++i) {
    const auto& m = sp.entries[i].multiplicity;
    if (!m || m->get_den() != 1) continue;
    const std::int64_t mult = m->get_num().get_si();
    if (mult < 3) continue;
    const std::int64_t bound = (mult - 1) * (mult + 2) / 2;
    if (k > bound)
      return "multiplicity " + std::to_string(mult) + " of " + sp.entries[i].theta.to_string() +
             " gives k <= " + std::to_string(bound) + " < " + std::to_string(k);
  }
  return std::nullopt;
}

}  // namespace

TaylorReport taylor_classify(std::int64_t k_max, bool verify_graphs) {
  if (k_max < 3) throw std::invalid_argument("k_max must be at least 3");
  TaylorReport rep;
  rep.k_max = k_max;
  for (std::int64_t k = 3; k <= k_max; ++k)
    for (std::int64_t c2 = 1; c2 < k; ++c2) {
      const std::int64_t a1 = k - c2 - 1;
      // Non-principal eigenvalues are the roots of x^2 - (a1 - c2)x - k, and -1.
      const std::int64_t s = a1 - c2;
      auto q = [&](std::int64_t x) { return x * x - s * x - k; };
      const bool at_least_minus3 = q(-3) >= 0 && 2 * -3 <= s;
      const bool below_minus2 = q(-2) < 0;
      if (!at_least_minus3 || !below_minus2) continue;

      const IntersectionArray ia({k, c2, 1}, {1, c2, k});
      TaylorCandidate cand{ia, c2, a1, {}, {}, false, {}};
      const Spectrum sp = spectrum(ia);
      cand.theta_min = sp.theta_min().theta.to_string();
      const bool integer_branch = q(-3) == 0;

      std::string reject;
      if (!sp.all_multiplicities_positive_integers()) {
        reject = "multiplicities not positive integers";
      } else if ((k * a1) % 2 != 0) {
        reject = "k*a1 = " + std::to_string(k * a1) + " is odd";
      } else if (auto g = godsil_violation(ia, sp)) {
        reject = *g;
      }
      if (!reject.empty()) {
        cand.reason = reject;
        rep.rejected.push_back(std::move(cand));
        continue;
      }

      const std::string text = format_array(ia);
      if (auto it = known_graphs().find(text); it != known_graphs().end()) {
        cand.graph = it->second.graph;
        cand.geometric = it->second.geometric;
        cand.reason = "known graph";
        if (verify_graphs) {
          const Graph g = construct(it->second.construction);
          const auto dr = check_distance_regular(g);
          if (!dr.distance_regular || *dr.array != ia) throw std::logic_error("construction mismatch for " + text);
          const auto geo = is_geometric_small(g, ia);
          cand.geometric = geo.verdict == Geometricity::Geometric;
          cand.reason = to_string(geo.verdict) + ": " + geo.reason;
        }
      } else {
        const auto nec = geometric_necessary(ia);
        cand.geometric = false;
        cand.reason = nec.verdict == GeometricVerdict::CertifiedNonGeometric ? nec.reason : "no known graph";
      }
      if (integer_branch) {
        rep.c2_values.push_back(c2);
        rep.integer_branch.push_back(cand);
      } else {
        rep.irrational_branch.push_back(cand);
      }
      if (!cand.geometric) rep.non_geometric.push_back(ia);
    }
  std::sort(rep.c2_values.begin(), rep.c2_values.end());
  std::sort(rep.non_geometric.begin(), rep.non_geometric.end(), search_order_less);
  return rep;
}

}  // namespace drg
