// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "drg/feasibility.hpp"
#include "drg/graph.hpp"
#include "drg/report_json.hpp"
#include "drg/search.hpp"
#include "drg/spectral.hpp"
#include "support/numeric_oracle.hpp"
#include "support/random_arrays.hpp"

using namespace drg;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<std::string> kD3List{
    "{6,4,1;1,1,6}",    "{7,4,1;1,2,7}",    "{9,6,1;1,2,9}",     "{15,8,1;1,4,15}",   "{15,10,1;1,2,15}",
    "{18,12,1;1,2,18}", "{27,16,1;1,4,27}", "{39,24,1;1,4,39}",  "{45,26,3;1,6,39}",  "{45,24,1;1,8,45}",
    "{45,24,2;1,10,36}", "{51,30,1;1,6,51}", "{60,35,9;1,6,42}", "{87,48,1;1,12,87}", "{207,120,1;1,20,207}"};

struct Outcome {
  bool pass = true;
  std::ostringstream why;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) why << what;
      else why << "; " << what;
      pass = false;
    }
  }
};

std::set<std::string> texts(const std::vector<IntersectionArray>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(format_array(x));
  return out;
}

void d3_search(Outcome& o) {
  const auto t0 = Clock::now();
  const auto r = search(SearchConfig{});
  const double dt = since(t0);
  const auto got = texts(r.arrays);
  o.require(got == std::set<std::string>(kD3List.begin(), kD3List.end()),
            std::to_string(got.size()) + " arrays, expected the 15");
  o.require(dt < 60.0, "took " + std::to_string(dt) + " s");
  o.why << (o.pass ? "" : "; ") << r.arrays.size() << " arrays in " << std::fixed << std::setprecision(1) << dt << " s";
}

void d4_search(Outcome& o) {
  SearchConfig cfg;
  cfg.diameter = 4;
  const auto t0 = Clock::now();
  const auto r = search(cfg);
  const double dt = since(t0);
  o.require(r.arrays.empty(), std::to_string(r.arrays.size()) + " arrays found");
  o.require(dt < 600.0, "took " + std::to_string(dt) + " s");
  o.why << (o.pass ? "" : "; ") << r.arrays.size() << " arrays in " << std::fixed << std::setprecision(1) << dt << " s";
}

void spectra(Outcome& o) {
  const std::vector<std::pair<std::string, std::string>> want{
      {"{15,8,1;1,4,15}", "{[15]^1, [5]^12, [-1]^15, [-3]^20}"},
      {"{27,16,1;1,4,27}", "{[27]^1, [9]^28, [-1]^27, [-3]^84}"},
      {"{45,24,1;1,8,45}", "{[45]^1, [15]^23, [-1]^45, [-3]^115}"},
      {"{45,24,2;1,10,36}", "{[45]^1, [15]^16, [5]^18, [-3]^125}"},
      {"{51,30,1;1,6,51}", "{[51]^1, [17]^39, [-1]^51, [-3]^221}"},
      {"{60,35,9;1,6,42}", "{[60]^1, [24]^35, [6]^50, [-3]^400}"},
      {"{87,48,1;1,12,87}", "{[87]^1, [29]^33, [-1]^87, [-3]^319}"},
      {"{207,120,1;1,20,207}", "{[207]^1, [69]^52, [-1]^207, [-3]^1196}"},
  };
  for (const auto& [array, expect] : want) {
    const auto got = format_spectrum(spectrum(parse_array(array)));
    o.require(got == expect, array + " -> " + got);
  }
}

void elimination(Outcome& o) {
  const std::set<std::string> eliminated{"{15,8,1;1,4,15}",  "{45,24,1;1,8,45}",  "{45,24,2;1,10,36}",
                                         "{51,30,1;1,6,51}",  "{60,35,9;1,6,42}",  "{87,48,1;1,12,87}",
                                         "{207,120,1;1,20,207}"};
  for (const auto& a : kD3List) {
    const bool fails = bcn444_divisibility(parse_array(a)).verdict == Verdict::Fail;
    o.require(fails == (eliminated.count(a) == 1), a + (fails ? " eliminated" : " kept"));
  }
}

void case_scans(Outcome& o) {
  const std::map<std::string, std::set<std::string>> want{
      {"5-0", {"{5,4,3,3,...;1,1,1,1,...}", "{5,4,3,2,...;1,1,1,1,...}", "{5,4,2,2,...;1,1,1,1,...}"}},
      {"6-0", {"{6,5,2,2,...;1,1,1,1,...}"}},
      {"8-1", {"{8,6,3,3,...;1,1,2,2,...}"}},
      {"12-2", {}},
  };
  for (const auto& [id, expect] : want) {
    const auto t0 = Clock::now();
    const auto rep = scan_c2one_case(case_scan(id));
    const double dt = since(t0);
    o.require(std::set<std::string>(rep.survivors.begin(), rep.survivors.end()) == expect,
              id + ": " + std::to_string(rep.survivors.size()) + " survivors");
    o.require(dt < 5.0, id + " took " + std::to_string(dt) + " s");
    if (id == "12-2")
      for (const auto& row : rep.rows)
        o.require(compare_to_rational(row.min_eig, Rational(-3)) == std::strong_ordering::less,
                  "12-2 row " + row.label + " not strictly below -3");
  }
  const auto head = scan_c2one_case(case_scan("8-1-head"));
  o.require(head.rows.size() == 8, "8-1-head has " + std::to_string(head.rows.size()) + " rows");
  for (const auto& row : head.rows) {
    const bool at_most = compare_to_rational(row.min_eig, Rational(-3)) != std::strong_ordering::greater;
    o.require(at_most == (row.values.at("a2") <= 1), "8-1-head threshold wrong at " + row.label);
  }
}

void pairs(Outcome& o) {
  const std::set<std::pair<std::int64_t, std::int64_t>> want{{3, 0}, {4, 0}, {5, 0}, {6, 0},
                                                              {6, 1}, {8, 1}, {12, 2}};
  o.require(c2one_pairs().pairs == want, "pair set differs");
}

void taylor(Outcome& o) {
  const auto rep = taylor_classify();
  o.require(rep.c2_values == std::vector<std::int64_t>{2, 4, 6, 10}, "c2 values differ");
  for (const auto& c : rep.integer_branch)
    o.require(c.geometric == (c.c2 <= 4), format_array(c.array) + " geometric flag wrong");
  std::set<std::string> ng;
  for (const auto& c : rep.integer_branch)
    if (!c.geometric) ng.insert(format_array(c.array));
  o.require(ng == std::set<std::string>{"{15,6,1;1,6,15}", "{27,10,1;1,10,27}"}, "integer branch leftovers differ");
  o.require(rep.irrational_branch.size() == 1 && format_array(rep.irrational_branch[0].array) == "{5,2,1;1,2,5}",
            "irrational branch differs");
}

void graphs(Outcome& o) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"odd:4", "{4,3,3;1,1,2}"},         {"halved_cube:6", "{15,6,1;1,6,15}"},
      {"halved_cube:7", "{21,10,3;1,6,15}"}, {"gosset", "{27,10,1;1,10,27}"},
      {"icosahedron", "{5,2,1;1,2,5}"},   {"doob_diam3", "{9,6,3;1,2,3}"},
      {"second_subconstituent:0", "{6,5,1;1,1,6}"}, {"sylvester", "{5,4,2;1,1,4}"},
  };
  for (const auto& [name, want] : cases) {
    const auto t0 = Clock::now();
    const auto g = construct(name);
    const auto r = check_distance_regular(g);
    const double dt = since(t0);
    const std::string got = r.distance_regular ? format_array(*r.array) : "not distance-regular";
    o.require(got == want, name + " -> " + got);
    o.require(dt < 10.0, name + " took " + std::to_string(dt) + " s");
    if (name == "icosahedron") {
      const double tmin = adjacency_spectrum_numeric(g).back();
      o.require(std::abs(tmin + std::sqrt(5.0)) < 1e-9, "icosahedron theta_min " + std::to_string(tmin));
    }
  }
}

void geometricity(Outcome& o) {
  auto verdict = [](const Graph& g) { return is_geometric_small(g, *check_distance_regular(g).array).verdict; };
  o.require(verdict(hamming(3, 4)) == Geometricity::Geometric, "H(3,4) not geometric");
  o.require(verdict(doob_diam3()) == Geometricity::NonGeometric, "Doob graph not non-geometric");
  o.require(verdict(icosahedron()) == Geometricity::NonGeometric, "icosahedron not non-geometric");
}

void properties(Outcome& o) {
  std::mt19937_64 rng(424242);
  int failures = 0, d4_checked = 0;
  auto note = [&](bool ok, const std::string& what, const IntersectionArray& ia) {
    if (!ok && failures++ < 3) o.require(false, what + " at " + format_array(ia));
  };
  for (int i = 0; i < 10000; ++i) {
    const auto ia = drg::testing::random_valid_array(rng, 3 + i % 2);
    const auto L = matrix_L(ia);
    const auto s = spectrum(ia);
    const auto& theta_d = s.theta_min().theta;
    for (int j = 1; j <= ia.diameter(); ++j)
      note(compare(truncation_min_eig(L, j), theta_d) == std::strong_ordering::greater, "interlacing", ia);
    const auto a = drg::testing::general_eigenvalues(L.dense());
    const auto b = drg::testing::symmetric_eigenvalues(symmetrize(L).dense());
    bool close = a.size() == b.size();
    for (std::size_t t = 0; close && t < a.size(); ++t) close = std::abs(a[t] - b[t]) <= 1e-10 * std::max(1.0, std::abs(a[t]));
    note(close, "symmetrization", ia);
    const Rational v = derive(ia).v;
    const Moments m = exact_moments(s);
    note(m.sum_m == v && m.sum_m_theta == 0 && m.sum_m_theta2 == v * Rational(static_cast<long>(ia.k())), "moments",
         ia);
    note(compare_to_rational(s.theta(1).theta, theta1_diag_bound(ia)) != std::strong_ordering::less, "diag bound", ia);
    if (ia.diameter() == 4) {
      ++d4_checked;
      note(compare_to_rational(s.theta(1).theta, Rational(static_cast<long>(ia.a(1) + 1))) !=
               std::strong_ordering::less,
           "theta1 >= a1 + 1", ia);
    }
  }
  if (failures > 0) o.why << "; " << failures << " failures";
  else o.why << "10000 arrays, " << d4_checked << " of them D = 4";
}

void bounds(Outcome& o) {
  for (std::int64_t a1 = 0; a1 <= 200; ++a1)
    o.require(lemma6_c2_lower(4, 3, a1) == make_rational(a1 + 2, 4), "lemma6 at a1 = " + std::to_string(a1));
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> da(0, 200), dc(1, 60);
  for (int i = 0; i < 100; ++i) {
    const auto a1 = da(rng), c2 = dc(rng);
    o.require(!lemma1_bound(3 * a1 - 2 * c2 + 9, a1, c2, 3), "lemma1 holds at k = 3a1-2c2+9");
    o.require(lemma1_bound(3 * a1 - 2 * c2 + 8, a1, c2, 3), "lemma1 fails at k = 3a1-2c2+8");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"D=3 search returns exactly the 15 arrays", d3_search},
      {"D=4 search returns nothing", d4_search},
      {"exact spectra of the listed arrays", spectra},
      {"divisibility filter eliminates exactly seven arrays", elimination},
      {"c2 = 1 case scans", case_scans},
      {"(k, a1) pairs for c2 = 1", pairs},
      {"Taylor classification", taylor},
      {"constructed graphs have the expected arrays", graphs},
      {"geometricity of H(3,4), Doob, icosahedron", geometricity},
      {"property suites on 10000 random arrays", properties},
      {"bound identities", bounds},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << ". " << criteria[i].first;
    const std::string why = o.why.str();
    if (!why.empty()) std::cout << " (" << why << ")";
    std::cout << " [" << std::fixed;
    std::cout.precision(1);
    std::cout << since(t0) << " s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
