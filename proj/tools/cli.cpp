#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "drg/catalog.hpp"
#include "drg/feasibility.hpp"
#include "drg/graph.hpp"
#include "drg/report_json.hpp"
#include "drg/search.hpp"

namespace drg::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataAbsent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int diameter = 3;
  std::int64_t a1_max = 100;
  std::string format = "text";
  int workers = 0;
  std::vector<std::string> disable;
  bool with_bcn444 = false;
  std::string data_dir = default_data_dir();
  std::string construct;
  std::string graph6;
  std::string catalog;
  std::int64_t k_max = 300;
  std::int64_t t_max = 12;
  bool header = false;
  bool no_geometric = false;
  bool no_verify = false;
  std::string array;
  std::string case_id;
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Reads --config before the real parse so that explicit flags override it.
void apply_config(const std::vector<std::string>& args, Options& o) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file " + path);
  json j;
  try {
    in >> j;
    if (!j.is_object()) throw InputError("config file must hold a JSON object");
    for (const auto& [key, v] : j.items()) {
      if (key == "diameter") o.diameter = v.get<int>();
      else if (key == "a1_max") o.a1_max = v.get<std::int64_t>();
      else if (key == "format") o.format = v.get<std::string>();
      else if (key == "workers") o.workers = v.get<int>();
      else if (key == "with_bcn444") o.with_bcn444 = v.get<bool>();
      else if (key == "data_dir") o.data_dir = v.get<std::string>();
      else if (key == "construct") o.construct = v.get<std::string>();
      else if (key == "graph6") o.graph6 = v.get<std::string>();
      else if (key == "k_max") o.k_max = v.get<std::int64_t>();
      else if (key == "t_max") o.t_max = v.get<std::int64_t>();
      else if (key == "disable") {
        o.disable.clear();
        if (v.is_string()) {
          std::stringstream ss(v.get<std::string>());
          for (std::string tok; std::getline(ss, tok, ',');) o.disable.push_back(tok);
        } else {
          o.disable = v.get<std::vector<std::string>>();
        }
      } else {
        throw InputError("unknown config key \"" + key + "\"");
      }
    }
  } catch (const json::exception& e) {
    throw InputError("bad config file " + path + ": " + e.what());
  }
}

std::set<std::string> disabled_set(const Options& o) {
  std::set<std::string> out;
  const auto& ids = criterion_ids();
  for (const auto& d : o.disable) {
    if (d.empty()) continue;
    if (std::find(ids.begin(), ids.end(), d) == ids.end()) throw InputError("unknown criterion id \"" + d + "\"");
    out.insert(d);
  }
  return out;
}

void check_format(const Options& o) {
  if (o.format != "text" && o.format != "json" && o.format != "csv")
    throw InputError("format must be text, json or csv");
}

IntersectionArray parse_input(const std::string& text) {
  try {
    return parse_array(text);
  } catch (const ParseError& e) {
    throw InputError(std::string("cannot parse array: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid array: ") + e.what());
  }
}

// ------------------------------------------------------------------ check

int cmd_check(const Options& o, std::ostream& out) {
  const auto ia = parse_input(o.array);
  CriteriaOptions opts;
  opts.disabled = disabled_set(o);
  opts.with_bcn444 = o.with_bcn444;
  const auto rep = criteria_1_to_12(ia, opts);
  if (o.format == "json") {
    out << report_to_json(rep, 2) << "\n";
  } else if (o.format == "csv") {
    out << "kind,id,title,verdict,detail\n";
    auto row = [&](const char* kind, const CriterionResult& c) {
      out << kind << "," << csv_quote(c.id) << "," << csv_quote(c.title) << "," << to_string(c.verdict) << ","
          << csv_quote(c.detail) << "\n";
    };
    for (const auto& c : rep.criteria) row("criterion", c);
    if (rep.bcn444) row("criterion", *rep.bcn444);
    for (const auto& c : rep.lemmas) row("lemma", c);
  } else {
    out << format_array(rep.array) << "  D = " << rep.array.diameter() << "  v = " << to_string(rep.derived.v)
        << "\n";
    auto row = [&](const CriterionResult& c) {
      out << "  " << std::left << std::setw(22) << c.id << std::setw(6) << to_string(c.verdict) << c.title;
      if (!c.detail.empty()) out << "  [" << c.detail << "]";
      out << "\n";
    };
    out << "criteria:\n";
    for (const auto& c : rep.criteria) row(c);
    if (rep.bcn444) row(*rep.bcn444);
    out << "lemmas:\n";
    for (const auto& c : rep.lemmas) row(c);
    if (rep.spectrum) out << "spectrum: " << format_spectrum(*rep.spectrum) << "\n";
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
    out << "verdict: " << (rep.feasible ? "feasible" : "infeasible") << "\n";
  }
  return rep.feasible ? kOk : kInfeasible;
}

// ----------------------------------------------------------------- search

int cmd_search(const Options& o, std::ostream& out) {
  if (o.diameter != 3 && o.diameter != 4) throw InputError("--diameter must be 3 or 4");
  if (o.a1_max < 2) throw InputError("--a1-max must be at least 2");
  if (o.workers < 0) throw InputError("--workers must be non-negative");
  SearchConfig cfg;
  cfg.diameter = o.diameter;
  cfg.a1_max = o.a1_max;
  cfg.workers = o.workers;
  cfg.disabled = disabled_set(o);
  if (o.format == "text") {
    cfg.sink = [&](const IntersectionArray& ia) { out << "found " << format_array(ia) << std::endl; };
  } else if (o.format == "json") {
    cfg.sink = [&](const IntersectionArray& ia) {
      out << json{{"event", "found"}, {"array", format_array(ia)}}.dump() << std::endl;
    };
  }
  const auto res = search(cfg);
  if (o.format == "json") {
    for (const auto& ia : res.arrays) {
      auto j = json::parse(spectrum_to_json(ia, spectrum(ia)));
      out << json{{"event", "result"}, {"array", format_array(ia)}, {"spectrum", j["spectrum"]}}.dump() << "\n";
    }
    out << json{{"event", "summary"},
                {"diameter", o.diameter},
                {"count", res.arrays.size()},
                {"candidates", res.stats.candidates},
                {"certified", res.stats.kernel_pass},
                {"seconds", res.stats.seconds}}
               .dump()
        << "\n";
  } else if (o.format == "csv") {
    out << "array,diameter,k,v,spectrum\n";
    for (const auto& ia : res.arrays) {
      const auto sp = spectrum(ia);
      out << csv_quote(format_array(ia)) << "," << ia.diameter() << "," << ia.k() << "," << to_string(sp.v) << ","
          << csv_quote(format_spectrum(sp)) << "\n";
    }
  } else {
    out << "sorted:\n";
    for (const auto& ia : res.arrays) out << "  " << format_array(ia) << "  " << format_spectrum(spectrum(ia)) << "\n";
    out << res.arrays.size() << " arrays (diameter " << o.diameter << ", " << res.stats.candidates
        << " candidates, " << res.stats.kernel_pass << " certified exactly, " << std::fixed << std::setprecision(1)
        << res.stats.seconds << " s)\n";
  }
  return kOk;
}

// --------------------------------------------------------------- spectrum

int cmd_spectrum(const Options& o, std::ostream& out) {
  const auto ia = parse_input(o.array);
  const auto sp = spectrum(ia);
  if (o.format == "json") {
    out << spectrum_to_json(ia, sp, 2) << "\n";
  } else if (o.format == "csv") {
    out << "theta,approx,multiplicity\n";
    for (const auto& e : sp.entries)
      out << csv_quote(e.theta.to_string()) << "," << std::setprecision(12) << e.theta.approx() << ","
          << (e.multiplicity ? to_string(*e.multiplicity) : "~" + std::to_string(e.multiplicity_approx)) << "\n";
  } else {
    out << format_array(ia) << "  v = " << to_string(sp.v) << "\n";
    out << "characteristic polynomial: " << sp.char_poly.to_string() << "\n";
    for (const auto& e : sp.entries) {
      out << "  " << std::left << std::setw(24) << e.theta.to_string() << " multiplicity ";
      if (e.multiplicity) out << to_string(*e.multiplicity);
      else out << "irrational (~" << e.multiplicity_approx << ")";
      out << "\n";
    }
    out << format_spectrum(sp) << "\n";
  }
  return kOk;
}

// ----------------------------------------------------------- verify-graph

struct NamedGraphs {
  std::vector<Graph> graphs;
  std::optional<IntersectionArray> expected;
};

NamedGraphs load_source(const Options& o) {
  const int sources = !o.construct.empty() + !o.graph6.empty() + !o.catalog.empty();
  if (sources != 1) throw InputError("give exactly one of --construct, --graph6, --catalog");
  NamedGraphs ng;
  if (!o.construct.empty()) {
    try {
      ng.graphs.push_back(construct(o.construct));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    } catch (const std::out_of_range& e) {
      throw InputError(e.what());
    }
  } else if (!o.graph6.empty()) {
    if (!std::filesystem::exists(o.graph6)) throw DataAbsent("data absent: " + o.graph6);
    try {
      ng.graphs = read_graph6_file(o.graph6);
    } catch (const Graph6Error& e) {
      throw InputError(std::string("bad graph6 data: ") + e.what());
    }
    for (std::size_t i = 0; i < ng.graphs.size(); ++i)
      ng.graphs[i].set_label(std::filesystem::path(o.graph6).filename().string() + "#" + std::to_string(i + 1));
    if (ng.graphs.empty()) throw InputError("no graphs in " + o.graph6);
  } else {
    const CatalogEntry* e = nullptr;
    try {
      e = &catalog_entry(o.catalog);
    } catch (const std::invalid_argument& err) {
      throw InputError(err.what());
    }
    ng.expected = parse_array(e->array);
    if (e->source == SourceKind::Open) throw DataAbsent("data absent: " + e->title);
    if (e->source == SourceKind::Construction) {
      ng.graphs.push_back(construct(e->construction));
    } else {
      std::optional<std::vector<Graph>> loaded;
      try {
        loaded = load_data_graphs(e->name, o.data_dir);
      } catch (const std::runtime_error& err) {
        throw InputError(err.what());
      }
      if (!loaded) throw DataAbsent("data absent: no graph6 file for \"" + e->name + "\" in " + o.data_dir);
      ng.graphs = std::move(*loaded);
    }
  }
  return ng;
}

int cmd_verify_graph(const Options& o, std::ostream& out) {
  const auto ng = load_source(o);
  bool ok = true;
  json all = json::array();
  for (const auto& g : ng.graphs) {
    if (components(g).size() != 1) throw InputError(g.label() + " is disconnected");
    const auto v = verify_graph(g, !o.no_geometric);
    std::optional<Spectrum> sp;
    if (v.array) sp = spectrum(*v.array);
    bool good = v.array.has_value() && v.detail.empty();
    if (ng.expected && (!v.array || *v.array != *ng.expected)) good = false;
    ok = ok && good;
    std::optional<GeometricResult> geo;
    if (!o.no_geometric && v.array && g.order() <= 200) geo = is_geometric_small(g, *v.array);
    if (o.format == "json") {
      json j;
      j["graph"] = g.label();
      j["order"] = g.order();
      j["distance_regular"] = v.array.has_value();
      if (v.array) {
        j["array"] = format_array(*v.array);
        j["theta_min"] = sp->theta_min().theta.to_string();
        j["theta_min_numeric"] = *v.theta_min_numeric;
      }
      if (geo) {
        j["geometricity"] = to_string(geo->verdict);
        j["geometricity_reason"] = geo->reason;
      }
      if (!v.detail.empty()) j["detail"] = v.detail;
      if (ng.expected) j["expected"] = format_array(*ng.expected);
      j["ok"] = good;
      all.push_back(j);
    } else {
      out << "graph: " << g.label() << " (" << g.order() << " vertices, " << g.edge_count() << " edges)\n";
      if (v.array) {
        out << "array: " << format_array(*v.array) << "\n";
        out << "theta_min: " << sp->theta_min().theta.to_string() << " (numeric " << std::setprecision(12)
            << *v.theta_min_numeric << ")\n";
        if (geo) out << "geometricity: " << to_string(geo->verdict) << " (" << geo->reason << ")\n";
      }
      if (!v.detail.empty()) out << v.detail << "\n";
      if (ng.expected && v.array && *v.array != *ng.expected)
        out << "expected " << format_array(*ng.expected) << "\n";
    }
  }
  if (o.format == "json") out << all.dump(2) << "\n";
  return ok ? kOk : kInfeasible;
}

int cmd_verify_catalog(const Options& o, std::ostream& out) {
  bool ok = true;
  if (o.format == "csv") out << "item,name,array,status,seconds\n";
  json all = json::array();
  for (const auto& e : catalog()) {
    const auto v = verify_entry(e, o.data_dir, !o.no_geometric);
    if (v.status == VerifyStatus::Mismatch || v.status == VerifyStatus::DigestMismatch) ok = false;
    if (o.format == "csv") {
      out << e.item << "," << e.name << "," << csv_quote(e.array) << "," << to_string(v.status) << "," << v.seconds
          << "\n";
    } else if (o.format == "json") {
      all.push_back({{"item", e.item}, {"name", e.name}, {"title", e.title}, {"array", e.array},
                     {"status", to_string(v.status)}, {"detail", v.detail}, {"seconds", v.seconds}});
    } else {
      out << "(" << e.item << ") " << std::left << std::setw(32) << e.title << std::setw(32) << e.array
          << to_string(v.status);
      for (const auto& g : v.graphs)
        if (g.geometricity) out << ", " << to_string(*g.geometricity);
      out << "\n";
    }
  }
  if (o.format == "json") out << all.dump(2) << "\n";
  return ok ? kOk : kInfeasible;
}

int cmd_export(const Options& o, std::ostream& out) {
  const auto ng = load_source(o);
  for (const auto& g : ng.graphs) out << encode_graph6(g, o.header) << "\n";
  return kOk;
}

// -------------------------------------------------------------- scan-case

int cmd_scan_case(const Options& o, std::ostream& out) {
  PartialArrayScan spec;
  try {
    spec = case_scan(o.case_id);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto rep = scan_c2one_case(spec);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"label", r.label},
                      {"min_eig", r.min_eig.to_string()},
                      {"min_eig_approx", r.min_eig.approx()},
                      {"survivor", r.survivor}});
    out << json{{"case", rep.id}, {"description", spec.description}, {"rows", rows}, {"survivors", rep.survivors}}
               .dump(2)
        << "\n";
  } else if (o.format == "csv") {
    out << "label,min_eig,min_eig_approx,survivor\n";
    for (const auto& r : rep.rows)
      out << csv_quote(r.label) << "," << csv_quote(r.min_eig.to_string()) << "," << std::setprecision(12)
          << r.min_eig.approx() << "," << (r.survivor ? "yes" : "no") << "\n";
  } else {
    out << "case " << rep.id << ": " << spec.description << "\n";
    for (const auto& r : rep.rows)
      out << "  " << std::left << std::setw(40) << r.label << std::setw(10) << std::fixed << std::setprecision(6)
          << r.min_eig.approx() << (r.survivor ? "  survives" : "") << "\n";
    out << rep.survivors.size() << " survivors";
    if (!rep.survivors.empty()) out << ":";
    out << "\n";
    for (const auto& s : rep.survivors) out << "  " << s << "\n";
  }
  return kOk;
}

int cmd_c2one_pairs(const Options& o, std::ostream& out) {
  if (o.t_max < 3) throw InputError("--t-max must be at least 3");
  const auto p = c2one_pairs(o.t_max);
  if (o.format == "json") {
    json pairs = json::array();
    for (auto [k, a1] : p.pairs) pairs.push_back({{"k", k}, {"a1", a1}});
    out << json{{"t_max", p.t_max}, {"pairs", pairs}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "k,a1,t\n";
    for (auto [k, a1] : p.pairs) out << k << "," << a1 << "," << k / (a1 + 1) << "\n";
  } else {
    for (const auto& [t, row] : p.by_t) {
      if (row.empty()) continue;
      out << "t = " << t << ":";
      for (auto [k, a1] : row) out << " (" << k << "," << a1 << ")";
      out << "\n";
    }
    out << "pairs:";
    for (auto [k, a1] : p.pairs) out << " (" << k << "," << a1 << ")";
    out << "\n";
  }
  return kOk;
}

int cmd_taylor(const Options& o, std::ostream& out) {
  if (o.k_max < 3) throw InputError("--k-max must be at least 3");
  const auto rep = taylor_classify(o.k_max, !o.no_verify);
  auto cand_json = [](const TaylorCandidate& c) {
    return json{{"array", format_array(c.array)}, {"c2", c.c2},           {"a1", c.a1},
                {"theta_min", c.theta_min},       {"graph", c.graph},     {"geometric", c.geometric},
                {"reason", c.reason}};
  };
  if (o.format == "json") {
    json ib = json::array(), rb = json::array(), ng = json::array();
    for (const auto& c : rep.integer_branch) ib.push_back(cand_json(c));
    for (const auto& c : rep.irrational_branch) rb.push_back(cand_json(c));
    for (const auto& a : rep.non_geometric) ng.push_back(format_array(a));
    out << json{{"k_max", rep.k_max},      {"c2_values", rep.c2_values}, {"integer_branch", ib},
                {"irrational_branch", rb}, {"rejected", rep.rejected.size()}, {"non_geometric", ng}}
               .dump(2)
        << "\n";
    return kOk;
  }
  auto line = [&](const TaylorCandidate& c) {
    out << "  " << std::left << std::setw(22) << format_array(c.array) << std::setw(14) << c.theta_min
        << std::setw(24) << c.graph << (c.geometric ? "geometric" : "non-geometric") << "  (" << c.reason << ")\n";
  };
  out << "theta3 = -3 branch, c2 in {";
  for (std::size_t i = 0; i < rep.c2_values.size(); ++i) out << (i ? "," : "") << rep.c2_values[i];
  out << "}:\n";
  for (const auto& c : rep.integer_branch) line(c);
  out << "-3 < theta3 < -2 branch:\n";
  for (const auto& c : rep.irrational_branch) line(c);
  out << "rejected by multiplicity, handshake or multiplicity-degree bound: " << rep.rejected.size()
      << " arrays with k <= " << rep.k_max << "\n";
  for (const auto& c : rep.rejected)
    if (c.reason.rfind("multiplicities", 0) != 0) out << "  " << format_array(c.array) << ": " << c.reason << "\n";
  out << "non-geometric:";
  for (const auto& a : rep.non_geometric) out << " " << format_array(a);
  out << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    apply_config(args, o);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App app{"Feasibility, spectra and verification for distance-regular graphs", "drgtool"};
  app.require_subcommand(1);
  std::string config;
  app.add_option("--config", config, "JSON file with default option values");

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format: text, json or csv");
  };
  auto add_disable = [&](CLI::App* s) {
    s->add_option("--disable", o.disable, "Comma-separated criterion ids to switch off")->delimiter(',');
  };
  auto add_sources = [&](CLI::App* s) {
    s->add_option("--construct", o.construct, "Built-in construction, e.g. halved_cube:6");
    s->add_option("--graph6", o.graph6, "graph6 file (one graph per line)");
    s->add_option("--catalog", o.catalog, "Catalog entry name or item letter");
    s->add_option("--data-dir", o.data_dir, "Directory holding manifest.json and graph6 files");
  };

  auto* check = app.add_subcommand("check", "Evaluate the feasibility criteria for one array");
  check->add_option("array", o.array, "Intersection array, e.g. \"{7,4,1;1,2,7}\"")->required();
  check->add_flag("--with-bcn444", o.with_bcn444, "Also apply the multiplicity divisibility elimination");
  add_disable(check);
  add_format(check);

  auto* search = app.add_subcommand("search", "Enumerate feasible arrays of diameter 3 or 4");
  search->add_option("--diameter", o.diameter, "3 or 4");
  search->add_option("--a1-max", o.a1_max, "Exclusive upper bound on a1");
  search->add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)");
  add_disable(search);
  add_format(search);

  auto* spec = app.add_subcommand("spectrum", "Exact eigenvalues and multiplicities of an array");
  spec->add_option("array", o.array, "Intersection array")->required();
  add_format(spec);

  auto* verify = app.add_subcommand("verify-graph", "Check distance-regularity, spectrum and geometricity");
  add_sources(verify);
  verify->add_flag("--no-geometric", o.no_geometric, "Skip the clique-cover test");
  add_format(verify);

  auto* vcat = app.add_subcommand("verify-catalog", "Verify every catalog graph that can be built or loaded");
  vcat->add_option("--data-dir", o.data_dir, "Directory holding manifest.json and graph6 files");
  vcat->add_flag("--no-geometric", o.no_geometric, "Skip the clique-cover test");
  add_format(vcat);

  auto* scan = app.add_subcommand("scan-case", "Quotient-matrix scan for a c2 = 1 case");
  scan->add_option("case", o.case_id, "5-0, 6-0, 8-1, 8-1-head or 12-2")->required();
  add_format(scan);

  auto* pairs = app.add_subcommand("c2one-pairs", "Admissible (k, a1) pairs when c2 = 1");
  pairs->add_option("--t-max", o.t_max, "Largest t = k/(a1+1)");
  add_format(pairs);

  auto* taylor = app.add_subcommand("taylor", "Classify Taylor arrays with -3 <= theta3 < -2");
  taylor->add_option("--k-max", o.k_max, "Largest valency scanned");
  taylor->add_flag("--no-verify", o.no_verify, "Do not construct the known graphs");
  add_format(taylor);

  auto* exp = app.add_subcommand("export-graph6", "Print a graph in graph6 format");
  add_sources(exp);
  exp->add_flag("--header", o.header, "Prefix the >>graph6<< header");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    check_format(o);
    if (check->parsed()) return cmd_check(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (spec->parsed()) return cmd_spectrum(o, out);
    if (verify->parsed()) return cmd_verify_graph(o, out);
    if (vcat->parsed()) return cmd_verify_catalog(o, out);
    if (scan->parsed()) return cmd_scan_case(o, out);
    if (pairs->parsed()) return cmd_c2one_pairs(o, out);
    if (taylor->parsed()) return cmd_taylor(o, out);
    if (exp->parsed()) return cmd_export(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DataAbsent& e) {
    err << e.what() << "\n";
    return kDataAbsent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace drg::cli
