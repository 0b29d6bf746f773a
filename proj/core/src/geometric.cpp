#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "drg/graph.hpp"

namespace drg {

namespace {

using Bits = std::vector<std::uint64_t>;

int count(const Bits& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

bool empty(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}

struct CliqueSearch {
  const Graph& g;
  int min_size;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<int> r;
  std::vector<std::vector<int>> out;

  Bits meet(const Bits& s, int v) const {
    Bits res(s.size());
    auto row = g.row(v);
    for (std::size_t i = 0; i < s.size(); ++i) res[i] = s[i] & row[i];
    return res;
  }

  void run(Bits p, Bits x) {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (static_cast<int>(r.size()) + count(p) < min_size) return;
    if (empty(p)) {
      if (empty(x)) out.push_back(r);
      return;
    }
    // Pivot maximizing |P & N(u)| over P | X.
    int pivot = -1, best = -1;
    for (std::size_t w = 0; w < p.size(); ++w)
      for (std::uint64_t m = p[w] | x[w]; m; m &= m - 1) {
        const int u = static_cast<int>(w * 64) + std::countr_zero(m);
        const int c = count(meet(p, u));
        if (c > best) best = c, pivot = u;
      }
    auto prow = g.row(pivot);
    Bits cand(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) cand[i] = p[i] & ~prow[i];
    for (std::size_t w = 0; w < cand.size(); ++w)
      for (std::uint64_t m = cand[w]; m; m &= m - 1) {
        const int v = static_cast<int>(w * 64) + std::countr_zero(m);
        r.push_back(v);
        run(meet(p, v), meet(x, v));
        r.pop_back();
        p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        x[v / 64] |= std::uint64_t{1} << (v % 64);
        if (exhausted) return;
      }
  }
};

}  // namespace

std::string to_string(Geometricity g) {
  switch (g) {
    case Geometricity::Geometric: return "geometric";
    case Geometricity::NonGeometric: return "non-geometric";
    case Geometricity::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<std::vector<int>> cliques_at_least(const Graph& g, int min_size, std::uint64_t budget,
                                               bool* exhausted) {
  CliqueSearch s{g, min_size, budget};
  Bits p(g.words(), 0), x(g.words(), 0);
  for (int v = 0; v < g.order(); ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
  s.run(p, x);
  if (exhausted) *exhausted = s.exhausted;
  for (auto& c : s.out) std::sort(c.begin(), c.end());
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

GeometricResult is_geometric_small(const Graph& g, const IntersectionArray& ia, std::uint64_t budget) {
  GeometricResult res;
  if (g.order() > 200) throw std::invalid_argument("is_geometric_small requires n <= 200");

  const auto pre = geometric_necessary(ia);
  if (pre.verdict == GeometricVerdict::CertifiedNonGeometric) {
    res.verdict = Geometricity::NonGeometric;
    res.reason = pre.reason;
    return res;
  }
  const Spectrum sp = spectrum(ia);
  const Rational theta = sp.theta_min().theta.exact_value();
  const std::int64_t t = -theta.get_num().get_si();
  const std::int64_t k = ia.k();
  const std::int64_t s = 1 + k / t;
  res.delsarte_size = s;

  const std::size_t edges = g.edge_count();
  const std::size_t per_clique = static_cast<std::size_t>(s * (s - 1) / 2);
  if (edges % per_clique != 0) {
    res.verdict = Geometricity::NonGeometric;
    res.reason = std::to_string(edges) + " edges is not a multiple of C(" + std::to_string(s) + ",2) = " +
                 std::to_string(per_clique);
    return res;
  }

  bool exhausted = false;
  auto all = cliques_at_least(g, static_cast<int>(s), budget, &exhausted);
  if (exhausted) {
    res.verdict = Geometricity::Inconclusive;
    res.reason = "clique enumeration budget of " + std::to_string(budget) + " nodes exceeded";
    return res;
  }
  std::vector<std::vector<int>> cl;
  for (auto& c : all)
    if (static_cast<std::int64_t>(c.size()) == s) cl.push_back(std::move(c));
  res.cliques = cl.size();

  // Exact cover of the edges by Delsarte cliques.
  std::map<std::pair<int, int>, int> edge_id;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) edge_id.emplace(std::pair{u, v}, static_cast<int>(edge_id.size()));
  std::vector<std::vector<int>> clique_edges(cl.size());
  std::vector<std::vector<int>> by_edge(edges);
  for (std::size_t c = 0; c < cl.size(); ++c)
    for (std::size_t i = 0; i < cl[c].size(); ++i)
      for (std::size_t j = i + 1; j < cl[c].size(); ++j) {
        const int e = edge_id.at({cl[c][i], cl[c][j]});
        clique_edges[c].push_back(e);
        by_edge[e].push_back(static_cast<int>(c));
      }
  for (std::size_t e = 0; e < edges; ++e)
    if (by_edge[e].empty()) {
      for (const auto& [uv, id] : edge_id)
        if (id == static_cast<int>(e)) {
          res.verdict = Geometricity::NonGeometric;
          res.reason = "edge " + std::to_string(uv.first) + "-" + std::to_string(uv.second) +
                       " lies in no Delsarte clique of size " + std::to_string(s);
          return res;
        }
    }

  std::vector<char> covered(edges, 0);
  std::vector<int> chosen;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  auto usable = [&](int c) {
    for (int e : clique_edges[c])
      if (covered[e]) return false;
    return true;
  };
  std::function<bool(std::size_t)> dfs = [&](std::size_t left) -> bool {
    if (left == 0) return true;
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    int best_e = -1;
    std::size_t best_n = SIZE_MAX;
    for (std::size_t e = 0; e < edges; ++e) {
      if (covered[e]) continue;
      std::size_t n = 0;
      for (int c : by_edge[e]) n += usable(c);
      if (n < best_n) best_n = n, best_e = static_cast<int>(e);
      if (n == 0) return false;
    }
    for (int c : by_edge[best_e]) {
      if (!usable(c)) continue;
      for (int e : clique_edges[c]) covered[e] = 1;
      chosen.push_back(c);
      if (dfs(left - clique_edges[c].size())) return true;
      chosen.pop_back();
      for (int e : clique_edges[c]) covered[e] = 0;
      if (out_of_budget) return false;
    }
    return false;
  };
  if (dfs(edges)) {
    res.verdict = Geometricity::Geometric;
    res.reason = std::to_string(chosen.size()) + " Delsarte cliques of size " + std::to_string(s) +
                 " partition the edges";
    for (int c : chosen) res.cover.push_back(cl[c]);
  } else if (out_of_budget) {
    res.verdict = Geometricity::Inconclusive;
    res.reason = "exact cover budget of " + std::to_string(budget) + " nodes exceeded";
  } else {
    res.verdict = Geometricity::NonGeometric;
    res.reason = "no partition of the edges into " + std::to_string(cl.size()) + " candidate cliques of size " +
                 std::to_string(s);
  }
  return res;
}

}  // namespace drg
