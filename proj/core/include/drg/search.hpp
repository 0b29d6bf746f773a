#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "drg/exactnum.hpp"
#include "drg/feasibility.hpp"
#include "drg/intersection_array.hpp"
#include "drg/spectral.hpp"

namespace drg {

// ------------------------------------------------------- array searches

struct SearchConfig {
  int diameter = 3;
  /// a1 ranges over [a1_min, a1_max).
  std::int64_t a1_min = 1;
  std::int64_t a1_max = 100;
  /// Criterion ids ("1".."12", "floor") to switch off.
  std::set<std::string> disabled;
  /// 0 selects std::thread::hardware_concurrency().
  int workers = 0;
  /// Called for every accepted array as soon as it is certified, from a
  /// worker thread but never concurrently.
  std::function<void(const IntersectionArray&)> sink;
};

struct SearchStats {
  std::uint64_t candidates = 0;   // arrays reaching the integer kernel
  std::uint64_t kernel_pass = 0;  // arrays sent to exact certification
  std::uint64_t accepted = 0;
  double seconds = 0.0;
};

struct SearchResult {
  std::vector<IntersectionArray> arrays;  // sorted by search_order_less
  SearchStats stats;
};

/// Enumerates 1 <= a1 (per config), 2a1+3 <= k <= 3a1+4, then c2 and the
/// remaining entries over formally valid arrays, pruning with every enabled
/// criterion before exact certification by criteria_1_to_12.
SearchResult search(const SearchConfig& cfg);
SearchResult search_d3(SearchConfig cfg);
SearchResult search_d4(SearchConfig cfg);

/// Integer fast path used by the search. Returns false when some enabled
/// criterion certainly fails; true means "needs exact certification".
bool kernel_may_pass(const IntersectionArray& ia, const std::set<std::string>& disabled);

// ------------------------------------------------------ c2 = 1 analysis

struct C2OnePairs {
  std::set<std::pair<std::int64_t, std::int64_t>> pairs;  // (k, a1)
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>> by_t;
  std::int64_t t_max = 0;
};

/// t = k/(a1+1) >= 3, a1 <= t - 2, k <= 3a1 + 6.
C2OnePairs c2one_pairs(std::int64_t t_max = 12);

using Assignment = std::map<std::string, std::int64_t>;

struct ScanVariable {
  std::string name;
  std::function<std::int64_t(const Assignment&)> lo;
  std::function<std::int64_t(const Assignment&)> hi;
};

struct PartialArrayScan {
  std::string id;
  std::string description;
  std::vector<ScanVariable> loops;
  std::function<Tridiag(const Assignment&)> matrix;
  std::function<std::string(const Assignment&)> label;
  Rational threshold = -3;
  /// Survivors have min eig > threshold when strict, >= when not.
  bool strict = true;
};

struct ScanRow {
  Assignment values;
  std::string label;
  AlgebraicValue min_eig;
  bool survivor = false;
};

struct ScanReport {
  std::string id;
  std::vector<ScanRow> rows;
  std::vector<std::string> survivors;
};

/// Throws std::invalid_argument when the loop bounds admit no assignment.
ScanReport scan_c2one_case(const PartialArrayScan& spec);

/// "5-0", "6-0", "8-1", "8-1-head", "12-2".
const std::vector<std::string>& case_ids();
/// Throws std::invalid_argument for unknown ids.
PartialArrayScan case_scan(const std::string& id);

// ---------------------------------------------------------- Taylor graphs

struct TaylorCandidate {
  IntersectionArray array;
  std::int64_t c2 = 0;
  std::int64_t a1 = 0;
  std::string theta_min;
  std::string graph;  // known graph with this array, if any
  bool geometric = false;
  std::string reason;  // why it was kept or dropped
};

struct TaylorReport {
  std::int64_t k_max = 0;
  std::vector<std::int64_t> c2_values;           // theta3 = -3 branch
  std::vector<TaylorCandidate> integer_branch;   // survivors of theta3 = -3
  std::vector<TaylorCandidate> irrational_branch;
  std::vector<TaylorCandidate> rejected;
  std::vector<IntersectionArray> non_geometric;  // final answer
};

/// Scans Taylor arrays {k,c2,1;1,c2,k} with k <= k_max and -3 <= theta3 < -2.
/// When verify_graphs is set, the named graphs are constructed and their
/// geometricity decided by exact clique cover.
TaylorReport taylor_classify(std::int64_t k_max = 300, bool verify_graphs = true);

}  // namespace drg
