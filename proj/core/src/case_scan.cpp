#include <sstream>

#include "drg/search.hpp"

namespace drg {

namespace {

Tridiag from_rows(const std::vector<std::int64_t>& sub, const std::vector<std::int64_t>& diag,
                  const std::vector<std::int64_t>& super) {
  Tridiag t;
  for (auto x : sub) t.sub.emplace_back(static_cast<long>(x));
  for (auto x : diag) t.diag.emplace_back(static_cast<long>(x));
  for (auto x : super) t.super.emplace_back(static_cast<long>(x));
  return t;
}

std::string partial(const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c) {
  std::ostringstream os;
  os << "{";
  for (auto x : b) os << x << ",";
  os << "...;";
  for (auto x : c) os << x << ",";
  os << "...}";
  return os.str();
}

ScanVariable var(std::string name, std::function<std::int64_t(const Assignment&)> lo,
                 std::function<std::int64_t(const Assignment&)> hi) {
  return {std::move(name), std::move(lo), std::move(hi)};
}

auto constant(std::int64_t v) {
  return [v](const Assignment&) { return v; };
}

auto value_of(std::string name, std::int64_t offset = 0) {
  return [name = std::move(name), offset](const Assignment& a) { return a.at(name) + offset; };
}

// 5x5 scan for (k, a1) in {(5,0), (6,0), (8,1)}: rows (0,k), (1,a1,b1),
// (c2,k-b2-c2,b2), (c3,k-c3-b3,b3), (c4,a4) with a4 = k - c4.
PartialArrayScan five_by_five(std::string id, std::int64_t k, std::int64_t a1, std::int64_t b2_max,
                              std::int64_t c_min) {
  PartialArrayScan s;
  s.id = std::move(id);
  const std::int64_t b1 = k - a1 - 1;
  s.description = "k = " + std::to_string(k) + ", a1 = " + std::to_string(a1) + ", c2 = 1; b2 in [1," +
                  std::to_string(b2_max) + "], b3 in [1,b2], c4 in [" + std::to_string(c_min) +
                  ",b3-1], c3 in [" + std::to_string(c_min) + ",c4], a4 = k - c4";
  s.loops = {var("b2", constant(1), constant(b2_max)), var("b3", constant(1), value_of("b2")),
             var("c4", constant(c_min), value_of("b3", -1)), var("c3", constant(c_min), value_of("c4"))};
  s.matrix = [=](const Assignment& v) {
    const auto b2 = v.at("b2"), b3 = v.at("b3"), c3 = v.at("c3"), c4 = v.at("c4");
    return from_rows({1, 1, c3, c4}, {0, a1, k - b2 - 1, k - c3 - b3, k - c4}, {k, b1, b2, b3});
  };
  s.label = [=](const Assignment& v) {
    return partial({k, b1, v.at("b2"), v.at("b3")}, {1, 1, v.at("c3"), v.at("c4")});
  };
  return s;
}

}  // namespace

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids{"5-0", "6-0", "8-1", "8-1-head", "12-2"};
  return ids;
}

PartialArrayScan case_scan(const std::string& id) {
  if (id == "5-0") return five_by_five(id, 5, 0, 4, 1);
  if (id == "6-0") return five_by_five(id, 6, 0, 5, 1);
  if (id == "8-1") return five_by_five(id, 8, 1, 5, 2);
  if (id == "8-1-head") {
    PartialArrayScan s;
    s.id = id;
    s.description = "k = 8, a1 = 1, c2 = 1: 3x3 head with a2 in [0,7]";
    s.loops = {var("a2", constant(0), constant(7))};
    s.matrix = [](const Assignment& v) { return from_rows({1, 1}, {0, 1, v.at("a2")}, {8, 6}); };
    s.label = [](const Assignment& v) { return "a2 = " + std::to_string(v.at("a2")); };
    return s;
  }
  if (id == "12-2") {
    PartialArrayScan s;
    s.id = id;
    s.description =
        "k = 12, a1 = 2, c2 = 1, b2 = b3 = b4 = 4; c3 in [2,4], c4 in [c3,4], c5 in [3,4], a5 in {8-c5, 9-c5}";
    s.loops = {var("c3", constant(2), constant(4)), var("c4", value_of("c3"), constant(4)),
               var("c5", constant(3), constant(4)),
               var("a5", [](const Assignment& v) { return 8 - v.at("c5"); },
                   [](const Assignment& v) { return 9 - v.at("c5"); })};
    s.matrix = [](const Assignment& v) {
      const auto c3 = v.at("c3"), c4 = v.at("c4"), c5 = v.at("c5"), a5 = v.at("a5");
      return from_rows({1, 1, c3, c4, c5}, {0, 2, 7, 8 - c3, 8 - c4, a5}, {12, 9, 4, 4, 4});
    };
    s.label = [](const Assignment& v) {
      return partial({12, 9, 4, 4, 4}, {1, 1, v.at("c3"), v.at("c4"), v.at("c5")}) +
             " a5 = " + std::to_string(v.at("a5"));
    };
    return s;
  }
  throw std::invalid_argument("unknown case id \"" + id + "\"");
}

ScanReport scan_c2one_case(const PartialArrayScan& spec) {
  ScanReport rep;
  rep.id = spec.id;
  Assignment cur;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == spec.loops.size()) {
      const Tridiag t = spec.matrix(cur);
      ScanRow row;
      row.values = cur;
      row.label = spec.label(cur);
      row.min_eig = truncation_min_eig(t, t.order());
      // Exact threshold test through Sturm counts.
      const int below = spec.strict ? count_eigenvalues_at_most(t, spec.threshold)
                                    : count_eigenvalues_below(t, spec.threshold);
      row.survivor = below == 0;
      if (row.survivor) rep.survivors.push_back(row.label);
      rep.rows.push_back(std::move(row));
      return;
    }
    const auto& v = spec.loops[depth];
    const std::int64_t lo = v.lo(cur), hi = v.hi(cur);
    for (std::int64_t x = lo; x <= hi; ++x) {
      cur[v.name] = x;
      rec(depth + 1);
    }
    cur.erase(v.name);
  };
  rec(0);
  if (rep.rows.empty()) throw std::invalid_argument("scan " + spec.id + " has an empty domain");
  return rep;
}

}  // namespace drg
