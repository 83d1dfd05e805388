#include "setsys/report.hpp"

namespace setsys {

Json to_json(const Natural& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

std::string rational_string(const ExactRational& v) {
  const Natural num = boost::multiprecision::numerator(v);
  const Natural den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Json to_json(const ExactRational& v) {
  if (boost::multiprecision::denominator(v) == 1) return to_json(Natural(boost::multiprecision::numerator(v)));
  return rational_string(v);
}

Json to_json(const SetFamily& fam) {
  Json j;
  j["n"] = fam.n();
  Json members = Json::array();
  for (const auto& m : fam.members()) members.push_back(m.elements());
  j["members"] = std::move(members);
  return j;
}

Json to_json(const SubspaceFamily& fam) {
  Json j;
  j["q"] = fam.field()->q();
  j["n"] = fam.n();
  Json members = Json::array();
  for (const auto& m : fam.members()) {
    Json rows = Json::array();
    for (const auto& row : m.basis()) {
      std::string s;
      for (auto x : row) s += "0123456789abcdef"[x];
      rows.push_back(s);
    }
    members.push_back(Json{{"dim", m.dim()}, {"basis", rows}});
  }
  j["members"] = std::move(members);
  return j;
}

Json to_json(const TheoremReport& rep) {
  Json j;
  j["theorem"] = rep.name();
  Json hyps = Json::array();
  for (const auto& h : rep.hypotheses)
    hyps.push_back(Json{{"key", h.key}, {"description", h.description}, {"verdict", to_string(h.verdict)}});
  j["hypotheses"] = std::move(hyps);
  j["bound"] = to_json(rep.bound);
  j["effective_bound"] = to_json(rep.effective_bound);
  j["family_size"] = to_json(rep.family_size);
  j["applicable"] = rep.applicable;
  j["within_bound"] = rep.within_bound;
  j["tight"] = rep.tight;
  if (rep.common_core) j["common_core"] = *rep.common_core;
  j["notes"] = rep.notes;
  return j;
}

Json to_json(const SearchResult& res) {
  Json j;
  j["max_size"] = to_json(res.max_size);
  j["certified"] = res.certified;
  j["nodes_explored"] = res.nodes_explored;
  j["witness"] = res.witness ? to_json(*res.witness) : Json(nullptr);
  return j;
}

Json to_json(const QSearchResult& res) {
  Json j;
  j["max_size"] = to_json(res.max_size);
  j["certified"] = res.certified;
  j["nodes_explored"] = res.nodes_explored;
  j["witness"] = res.witness ? to_json(*res.witness) : Json(nullptr);
  return j;
}

Json to_json(const CellOutcome& cell) {
  Json j;
  j["cell"] = cell.cell.to_string();
  if (cell.search) j["search"] = to_json(*cell.search);
  if (cell.error) j["error"] = *cell.error;
  Json reps = Json::array();
  for (const auto& r : cell.reports) reps.push_back(to_json(r));
  j["reports"] = std::move(reps);
  j["anomalies"] = cell.anomalies;
  return j;
}

Json to_json(const PartitionResult& part) {
  Json j;
  j["k"] = part.k;
  j["B"] = to_json(part.B);
  Json c = Json::array();
  for (const auto& s : part.C) c.push_back(s.elements());
  j["C"] = std::move(c);
  j["F"] = to_json(part.F);
  Json order = Json::array();
  for (auto i : part.reorder) order.push_back(i + 1);
  j["order"] = std::move(order);
  j["tuples_scanned"] = part.tuples_scanned;
  return j;
}

Json ReportDocument::to_json() const {
  Json j;
  j["schema_version"] = "1";
  j["invocation"] = invocation;
  j["results"] = results;
  j["anomalies"] = anomalies;
  return j;
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace setsys
