#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drg/feasibility.hpp"
#include "drg/intersection_array.hpp"

namespace drg {

/// Undirected simple graph; adjacency rows are bitsets of 64-bit words.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::string label = {});

  int order() const { return n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Throws std::out_of_range for bad vertices, std::invalid_argument for loops.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::size_t edge_count() const;

  std::span<const std::uint64_t> row(int v) const;
  int words() const { return words_; }

  /// Subgraph induced on the given vertices, in that order.
  Graph induced(const std::vector<int>& vertices) const;
  /// Same graph with vertex v renamed to perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  void check(int v) const;
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::string label_;
};

/// BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

struct DRViolation {
  int x = -1;
  int y = -1;
  int i = -1;
  std::string what;
};

struct DRCheckResult {
  bool distance_regular = false;
  std::optional<IntersectionArray> array;
  std::optional<DRViolation> violation;
};

/// Throws std::invalid_argument for disconnected or empty graphs.
DRCheckResult check_distance_regular(const Graph& g);

/// Eigenvalues of the adjacency matrix, descending. Requires n <= 5000.
std::vector<double> adjacency_spectrum_numeric(const Graph& g);

/// Induced subgraph on the neighbours of x.
Graph local_graph(const Graph& g, int x);

struct StructureCheck {
  Verdict verdict = Verdict::NotApplicable;
  std::string detail;
};

/// For distance-regular graphs with c2 = 1: every local graph is a disjoint
/// union of (a1+1)-cliques and t = k/(a1+1) is an integer.
StructureCheck c2one_structure_check(const Graph& g);

/// Connected components as vertex lists.
std::vector<std::vector<int>> components(const Graph& g);

// ---------------------------------------------------------------- graph6

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string encode_graph6(const Graph& g, bool header = false);
/// One graph; an optional ">>graph6<<" header and a single trailing newline
/// are accepted, anything else after the data is an error.
Graph decode_graph6(std::string_view text);
/// One graph per non-empty line.
std::vector<Graph> read_graph6_file(const std::string& path);

// ---------------------------------------------------------- constructions

Graph complete_graph(int n);
Graph cycle_graph(int n);
/// Vertices are k-subsets of {0..n-1}, adjacent when disjoint; n <= 8.
Graph kneser(int n, int k);
/// Odd graph O_m = Kneser(2m-1, m-1).
Graph odd_graph(int m);
Graph petersen();
Graph johnson(int n, int k);
Graph hamming(int d, int q);
/// Even-weight words of length n adjacent at Hamming distance 2; n <= 8.
Graph halved_cube(int n);
Graph shrikhande();
Graph cartesian_product(const Graph& a, const Graph& b);
/// Shrikhande graph times K4.
Graph doob_diam3();
Graph icosahedron();
Graph dodecahedron();
Graph hoffman_singleton();
/// Vertices at distance 2 from x.
Graph second_subconstituent(const Graph& g, int x);
/// Hoffman-Singleton vertices at distance 2 from both ends of an edge.
Graph sylvester();
/// Two copies of the edges of K8; same copy adjacent when meeting in one
/// point, different copies adjacent when disjoint.
Graph gosset();
/// 3-subsets of a 7-set that are not Fano lines, adjacent when disjoint.
Graph coxeter();

/// "name" or "name:p1,p2". Throws std::invalid_argument for unknown names
/// and std::out_of_range for unsupported parameters.
Graph construct(const std::string& spec);
/// Names accepted by construct().
std::vector<std::string> construction_names();

// ------------------------------------------------------------ geometricity

enum class Geometricity { Geometric, NonGeometric, Inconclusive };
std::string to_string(Geometricity g);

struct GeometricResult {
  Geometricity verdict = Geometricity::Inconclusive;
  std::string reason;
  std::int64_t delsarte_size = 0;
  std::size_t cliques = 0;
  std::vector<std::vector<int>> cover;
};

/// Exact cover of the edge set by Delsarte cliques. Requires n <= 200;
/// `budget` limits search nodes, after which the verdict is Inconclusive.
GeometricResult is_geometric_small(const Graph& g, const IntersectionArray& ia, std::uint64_t budget = 20'000'000);

/// All maximal cliques with at least min_size vertices.
std::vector<std::vector<int>> cliques_at_least(const Graph& g, int min_size, std::uint64_t budget,
                                               bool* exhausted = nullptr);

}  // namespace drg
