#include "dreg/report.hpp"

namespace dreg {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(to_json(c));
  return a;
}

Json to_json(const std::vector<MultiPoly>& polys) {
  Json a = Json::array();
  for (const auto& f : polys) a.push_back(f.to_string());
  return a;
}

Json to_json(const RankResult& r) {
  if (r.infinite) return "INFINITE";
  return r.value;
}

Json to_json(const ComponentRecord& r) {
  Json j;
  j["chart"] = r.chart;
  j["component"] = r.label;
  j["componentPoly"] = r.component.to_string();
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(to_json(p));
  j["points"] = pts;
  j["grRanks"] = r.gr_ranks;
  j["irrMult"] = r.irr_mult;
  j["status"] = to_string(r.status);
  if (!r.note.empty()) j["note"] = r.note;
  if (r.oracle_regular || !r.oracle_note.empty()) {
    Json o;
    o["regular"] = r.oracle_regular ? Json(*r.oracle_regular) : Json(nullptr);
    if (!r.oracle_note.empty()) o["note"] = r.oracle_note;
    j["lineOracle"] = o;
  }
  return j;
}

Json to_json(const Divisor& d) {
  Json a = Json::array();
  for (const auto& e : d.entries) a.push_back({{"mult", e.mult}, {"poly", e.label}});
  return a;
}

Json to_json(const SingularLocus& s) {
  return {{"codim1", to_json(s.codim1)},
          {"mayHaveDeeperComponents", s.may_have_deeper_components},
          {"deeperStrata", to_json(s.deeper_strata)}};
}

Json to_json(const RegularityReport& r) {
  Json j;
  j["rank"] = to_json(r.rank);
  Json recs = Json::array();
  for (const auto& rec : r.records) recs.push_back(to_json(rec));
  j["records"] = recs;
  j["infinityChecked"] = r.infinity_checked;
  j["charts"] = r.charts;
  j["divisor"] = to_json(r.divisor);
  j["verdict"] = to_string(r.verdict);
  j["caveats"] = r.caveats;
  j["singularLocus"] = to_json(r.locus);
  return j;
}

std::string emit(Json doc) {
  doc["schema"] = kReportSchema;
  return doc.dump(2) + "\n";
}

std::string emit_report(const RegularityReport& report) { return emit(to_json(report)); }

std::string emit_report(const Divisor& divisor) {
  return emit(Json{{"divisor", to_json(divisor)}});
}

std::string emit_report(const RankResult& rank) { return emit(Json{{"rank", to_json(rank)}}); }

}  // namespace dreg
