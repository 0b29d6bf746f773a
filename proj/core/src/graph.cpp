#include "drg/graph.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <sstream>

namespace drg {

Graph::Graph(int n, std::string label) : n_(n), words_((n + 63) / 64), label_(std::move(label)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(int u, int v) {
  check(u);
  check(v);
  bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

bool Graph::has_edge(int u, int v) const {
  check(u);
  check(v);
  return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
  check(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check(v);
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w)
    for (std::uint64_t x = r[w]; x; x &= x - 1) out.push_back(w * 64 + std::countr_zero(x));
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph h(static_cast<int>(vertices.size()), label_);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<char> seen(n_, 0);
  for (int p : perm) {
    check(p);
    if (seen[p]++) throw std::invalid_argument("not a permutation");
  }
  Graph h(n_, label_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) h.add_edge(perm[u], perm[v]);
  return h;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  if (source < 0 || source >= g.order()) throw std::out_of_range("source out of range");
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int v : g.neighbors(members[i]))
        if (comp[v] < 0) {
          comp[v] = comp[s];
          members.push_back(v);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

DRCheckResult check_distance_regular(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("empty graph");
  DRCheckResult res;
  std::vector<std::int64_t> cs, as, bs;  // indexed by distance
  int diameter = -1;
  for (int x = 0; x < n; ++x) {
    const auto dist = bfs_distances(g, x);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end()) throw std::invalid_argument("graph is disconnected");
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (diameter < 0) {
      diameter = ecc;
      cs.assign(diameter + 1, -1);
      as.assign(diameter + 1, -1);
      bs.assign(diameter + 1, -1);
    } else if (ecc != diameter) {
      res.violation = DRViolation{x, -1, ecc, "eccentricity " + std::to_string(ecc) + " differs from " +
                                                  std::to_string(diameter)};
      return res;
    }
    for (int y = 0; y < n; ++y) {
      const int i = dist[y];
      std::int64_t c = 0, a = 0, b = 0;
      for (int z : g.neighbors(y)) {
        if (dist[z] == i - 1) ++c;
        else if (dist[z] == i) ++a;
        else ++b;
      }
      auto expect = [&](std::vector<std::int64_t>& slot, std::int64_t got, const char* name) {
        if (slot[i] < 0) {
          slot[i] = got;
          return true;
        }
        if (slot[i] == got) return true;
        res.violation = DRViolation{x, y, i, std::string(name) + "_" + std::to_string(i) + " = " +
                                                 std::to_string(got) + ", expected " + std::to_string(slot[i])};
        return false;
      };
      if (!expect(cs, c, "c") || !expect(as, a, "a") || !expect(bs, b, "b")) return res;
    }
  }
  if (diameter == 0) {
    res.violation = DRViolation{0, -1, 0, "single vertex has no intersection array"};
    return res;
  }
  std::vector<std::int64_t> b(bs.begin(), bs.begin() + diameter), c(cs.begin() + 1, cs.end());
  res.distance_regular = true;
  res.array = IntersectionArray(std::move(b), std::move(c));
  return res;
}

std::vector<double> adjacency_spectrum_numeric(const Graph& g) {
  const int n = g.order();
  if (n > 5000) throw std::invalid_argument("graph too large for dense eigensolve");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

Graph local_graph(const Graph& g, int x) {
  Graph h = g.induced(g.neighbors(x));
  h.set_label(g.label().empty() ? "local" : "local(" + g.label() + ")");
  return h;
}

StructureCheck c2one_structure_check(const Graph& g) {
  StructureCheck out;
  const auto dr = check_distance_regular(g);
  if (!dr.distance_regular) {
    out.detail = "not distance-regular";
    return out;
  }
  const auto& ia = *dr.array;
  if (ia.diameter() < 2 || ia.c(2) != 1) {
    out.detail = "c2 != 1";
    return out;
  }
  const std::int64_t k = ia.k(), a1 = ia.a(1);
  if (k % (a1 + 1) != 0) {
    out.verdict = Verdict::Fail;
    out.detail = "t = k/(a1+1) = " + std::to_string(k) + "/" + std::to_string(a1 + 1) + " is not an integer";
    return out;
  }
  for (int x = 0; x < g.order(); ++x) {
    const Graph loc = local_graph(g, x);
    for (const auto& comp : components(loc)) {
      const auto sz = static_cast<std::int64_t>(comp.size());
      bool clique = sz == a1 + 1;
      for (int v : comp)
        if (loc.degree(v) != sz - 1) clique = false;
      if (!clique) {
        out.verdict = Verdict::Fail;
        out.detail = "local graph at " + std::to_string(x) + " has a component of size " + std::to_string(sz) +
                     " that is not an (a1+1)-clique";
        return out;
      }
    }
  }
  out.verdict = Verdict::Pass;
  std::ostringstream os;
  os << "every local graph is " << k / (a1 + 1) << " disjoint " << a1 + 1 << "-cliques";
  out.detail = os.str();
  return out;
}

}  // namespace drg
