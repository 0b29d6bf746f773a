#include "drg/report_json.hpp"

#include <json.hpp>

namespace drg {

namespace {

using json = nlohmann::ordered_json;

json criterion_json(const CriterionResult& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["title"] = r.title;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json spectrum_entries(const Spectrum& s) {
  json out = json::array();
  for (const auto& e : s.entries) {
    json j;
    j["theta"] = e.theta.to_string();
    j["approx"] = e.theta.approx();
    if (e.multiplicity) {
      j["multiplicity"] = to_string(*e.multiplicity);
    } else {
      j["multiplicity"] = nullptr;
      j["multiplicity_approx"] = e.multiplicity_approx;
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

std::string report_to_json(const FeasibilityReport& rep, int indent) {
  json j;
  j["array"] = format_array(rep.array);
  j["diameter"] = rep.array.diameter();
  j["feasible"] = rep.feasible;
  json derived;
  derived["a"] = rep.derived.a;
  json ks = json::array();
  for (const auto& k : rep.derived.k_seq) ks.push_back(to_string(k));
  derived["k"] = ks;
  derived["v"] = to_string(rep.derived.v);
  derived["t"] = to_string(rep.derived.t);
  j["derived"] = derived;
  j["flags"] = {{"bipartite", rep.flags.bipartite_formal}, {"antipodal", rep.flags.antipodal_formal}};
  json crit;
  for (const auto& c : rep.criteria) crit[c.id] = criterion_json(c);
  j["criteria"] = crit;
  json lem;
  for (const auto& c : rep.lemmas) lem[c.id] = criterion_json(c);
  j["lemmas"] = lem;
  if (rep.bcn444) j["bcn444"] = criterion_json(*rep.bcn444);
  if (rep.spectrum) j["spectrum"] = spectrum_entries(*rep.spectrum);
  j["notes"] = rep.notes;
  return j.dump(indent);
}

std::string spectrum_to_json(const IntersectionArray& ia, const Spectrum& s, int indent) {
  json j;
  j["array"] = format_array(ia);
  j["v"] = to_string(s.v);
  j["char_poly"] = s.char_poly.to_string();
  j["spectrum"] = spectrum_entries(s);
  return j.dump(indent);
}

std::string format_spectrum(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const auto& e = s.entries[i];
    if (i) out += ", ";
    out += "[" + e.theta.to_string() + "]^";
    out += e.multiplicity ? to_string(*e.multiplicity) : "~" + std::to_string(e.multiplicity_approx);
  }
  return out + "}";
}

}  // namespace drg
