#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "drg/graph.hpp"

namespace drg {

namespace {

std::vector<unsigned> subsets(int n, int k) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1 && n <= 5000, "complete graph order out of range");
  Graph g(n, "K" + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3 && n <= 5000, "cycle length out of range");
  Graph g(n, "C" + std::to_string(n));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph kneser(int n, int k) {
  require(n >= 1 && n <= 8 && k >= 1 && 2 * k <= n, "kneser parameters out of range");
  const auto vs = subsets(n, k);
  Graph g(static_cast<int>(vs.size()), "kneser:" + std::to_string(n) + "," + std::to_string(k));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if ((vs[i] & vs[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph odd_graph(int m) {
  require(m >= 2 && m <= 4, "odd graph index out of range");
  Graph g = kneser(2 * m - 1, m - 1);
  g.set_label("odd:" + std::to_string(m));
  return g;
}

Graph petersen() {
  Graph g = kneser(5, 2);
  g.set_label("petersen");
  return g;
}

Graph johnson(int n, int k) {
  require(n >= 2 && n <= 12 && k >= 1 && k < n, "johnson parameters out of range");
  const auto vs = subsets(n, k);
  Graph g(static_cast<int>(vs.size()), "johnson:" + std::to_string(n) + "," + std::to_string(k));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (std::popcount(vs[i] & vs[j]) == k - 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph hamming(int d, int q) {
  require(d >= 1 && q >= 2 && std::pow(q, d) <= 5000, "hamming parameters out of range");
  int n = 1;
  for (int i = 0; i < d; ++i) n *= q;
  Graph g(n, "hamming:" + std::to_string(d) + "," + std::to_string(q));
  for (int u = 0; u < n; ++u) {
    int place = 1;
    for (int i = 0; i < d; ++i, place *= q) {
      const int digit = (u / place) % q;
      for (int x = digit + 1; x < q; ++x) g.add_edge(u, u + (x - digit) * place);
    }
  }
  return g;
}

Graph halved_cube(int n) {
  require(n >= 3 && n <= 8, "halved cube dimension out of range");
  std::vector<unsigned> words;
  for (unsigned w = 0; w < (1u << n); ++w)
    if (std::popcount(w) % 2 == 0) words.push_back(w);
  Graph g(static_cast<int>(words.size()), "halved_cube:" + std::to_string(n));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (std::popcount(words[i] ^ words[j]) == 2) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph shrikhande() {
  Graph g(16, "shrikhande");
  const std::array<std::pair<int, int>, 3> gens{{{1, 0}, {0, 1}, {1, 1}}};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (auto [dx, dy] : gens) g.add_edge(4 * x + y, 4 * ((x + dx) % 4) + (y + dy) % 4);
  return g;
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const int na = a.order(), nb = b.order();
  Graph g(na * nb, a.label() + "x" + b.label());
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      for (int i2 : a.neighbors(i))
        if (i2 > i) g.add_edge(i * nb + j, i2 * nb + j);
      for (int j2 : b.neighbors(j))
        if (j2 > j) g.add_edge(i * nb + j, i * nb + j2);
    }
  return g;
}

Graph doob_diam3() {
  Graph g = cartesian_product(shrikhande(), complete_graph(4));
  g.set_label("doob_diam3");
  return g;
}

Graph icosahedron() {
  // Cyclic permutations of (0, +-1, +-phi); neighbours at squared distance 4.
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> pts;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      const std::array<double, 3> p{0.0, s1 * 1.0, s2 * phi};
      for (int r = 0; r < 3; ++r) pts.push_back({p[r % 3], p[(r + 1) % 3], p[(r + 2) % 3]});
    }
  Graph g(12, "icosahedron");
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) {
      double d2 = 0;
      for (int c = 0; c < 3; ++c) d2 += (pts[i][c] - pts[j][c]) * (pts[i][c] - pts[j][c]);
      if (std::abs(d2 - 4.0) < 1e-9) g.add_edge(i, j);
    }
  return g;
}

Graph dodecahedron() {
  // Faces of the icosahedron, adjacent when they share an edge.
  const Graph ico = icosahedron();
  std::vector<std::array<int, 3>> faces;
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      for (int c = b + 1; c < 12; ++c)
        if (ico.has_edge(a, b) && ico.has_edge(b, c) && ico.has_edge(a, c)) faces.push_back({a, b, c});
  Graph g(static_cast<int>(faces.size()), "dodecahedron");
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      int common = 0;
      for (int x : faces[i])
        common += static_cast<int>(std::count(faces[j].begin(), faces[j].end(), x));
      if (common == 2) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

Graph hoffman_singleton() {
  // Pentagons P_h (j ~ j+-1) and pentagrams Q_i (j ~ j+-2), h, i, j in Z5;
  // vertex j of P_h joined to vertex h*i + j of Q_i.
  Graph g(50, "hoffman_singleton");
  auto P = [](int h, int j) { return 5 * h + j; };
  auto Q = [](int i, int j) { return 25 + 5 * i + j; };
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) {
      g.add_edge(P(h, j), P(h, (j + 1) % 5));
      g.add_edge(Q(h, j), Q(h, (j + 2) % 5));
      for (int i = 0; i < 5; ++i) g.add_edge(P(h, j), Q(i, (h * i + j) % 5));
    }
  return g;
}

Graph second_subconstituent(const Graph& g, int x) {
  const auto dist = bfs_distances(g, x);
  std::vector<int> vs;
  for (int v = 0; v < g.order(); ++v)
    if (dist[v] == 2) vs.push_back(v);
  Graph h = g.induced(vs);
  h.set_label("second_subconstituent(" + g.label() + "," + std::to_string(x) + ")");
  return h;
}

Graph sylvester() {
  const Graph hs = hoffman_singleton();
  const int x = 0, y = hs.neighbors(0).front();
  const auto dx = bfs_distances(hs, x), dy = bfs_distances(hs, y);
  std::vector<int> vs;
  for (int v = 0; v < hs.order(); ++v)
    if (dx[v] == 2 && dy[v] == 2) vs.push_back(v);
  Graph g = hs.induced(vs);
  g.set_label("sylvester");
  return g;
}

Graph gosset() {
  std::vector<unsigned> pairs = subsets(8, 2);
  const int m = static_cast<int>(pairs.size());
  Graph g(2 * m, "gosset");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i < j && std::popcount(pairs[i] & pairs[j]) == 1) {
        g.add_edge(i, j);
        g.add_edge(m + i, m + j);
      }
      if ((pairs[i] & pairs[j]) == 0) g.add_edge(i, m + j);
    }
  return g;
}

Graph coxeter() {
  const std::array<unsigned, 7> lines{0b0000111, 0b0011001, 0b0101010, 0b1001100,
                                      0b0110100, 0b1010010, 0b1100001};
  std::vector<unsigned> vs;
  for (unsigned s : subsets(7, 3))
    if (std::find(lines.begin(), lines.end(), s) == lines.end()) vs.push_back(s);
  Graph g(static_cast<int>(vs.size()), "coxeter");
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if ((vs[i] & vs[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

std::vector<std::string> construction_names() {
  return {"complete:n",   "cycle:n",     "kneser:n,k",   "odd:m",       "petersen",
          "johnson:n,k",  "hamming:d,q", "halved_cube:n", "shrikhande",  "doob_diam3",
          "icosahedron",  "dodecahedron", "hoffman_singleton", "second_subconstituent:x",
          "sylvester",    "gosset",      "taylor_double_T8", "coxeter"};
}

Graph construct(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad parameter \"" + tok + "\" in \"" + spec + "\"");
      }
      if (used != tok.size()) throw std::invalid_argument("bad parameter \"" + tok + "\" in \"" + spec + "\"");
      params.push_back(v);
    }
  }
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("\"" + name + "\" takes " + std::to_string(count) + " parameter(s)");
  };
  static const std::map<std::string, std::function<Graph()>> fixed{
      {"petersen", petersen},
      {"shrikhande", shrikhande},
      {"doob_diam3", doob_diam3},
      {"icosahedron", icosahedron},
      {"dodecahedron", dodecahedron},
      {"hoffman_singleton", hoffman_singleton},
      {"sylvester", sylvester},
      {"gosset", gosset},
      {"taylor_double_T8", gosset},
      {"coxeter", coxeter},
  };
  if (auto it = fixed.find(name); it != fixed.end()) {
    want(0);
    return it->second();
  }
  if (name == "complete") return want(1), complete_graph(params[0]);
  if (name == "cycle") return want(1), cycle_graph(params[0]);
  if (name == "kneser") return want(2), kneser(params[0], params[1]);
  if (name == "odd") return want(1), odd_graph(params[0]);
  if (name == "johnson") return want(2), johnson(params[0], params[1]);
  if (name == "hamming") return want(2), hamming(params[0], params[1]);
  if (name == "halved_cube") return want(1), halved_cube(params[0]);
  if (name == "second_subconstituent") {
    if (params.size() > 1) throw std::invalid_argument("second_subconstituent takes at most one parameter");
    const int x = params.empty() ? 0 : params[0];
    require(x >= 0 && x < 50, "vertex out of range");
    return second_subconstituent(hoffman_singleton(), x);
  }
  throw std::invalid_argument("unknown construction \"" + name + "\"");
}

}  // namespace drg
