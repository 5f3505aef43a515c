#include "rauzy/io.hpp"

#include <json.hpp>

namespace rauzy {

using nlohmann::json;  // std::map-backed: keys serialize sorted, so dumps are stable

std::string diagram_to_cache(const RauzyDiagram& d) {
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "rauzy-diagram";
  j["reduced"] = d.reduced;
  j["builder"] = "bfs/top-first";
  json verts = json::array(), edges = json::array();
  for (const GP& v : d.vertices) verts.push_back(v.str());
  for (const auto& e : d.edges) edges.push_back({e[0], e[1]});
  j["vertices"] = verts;
  j["edges"] = edges;
  std::string body = j.dump();
  json wrapped;
  wrapped["hash"] = fnv1a(body);
  wrapped["payload"] = j;
  return wrapped.dump(2) + "\n";
}

RauzyDiagram diagram_from_cache(const std::string& text) {
  json wrapped = json::parse(text);
  json j = wrapped.at("payload");
  uint64_t h = wrapped.at("hash").get<uint64_t>();
  if (h != fnv1a(j.dump())) throw domain_error("diagram cache hash mismatch");
  if (j.at("schema").get<int>() != kSchemaVersion)
    throw domain_error("unsupported diagram cache schema");
  RauzyDiagram d;
  d.reduced = j.at("reduced").get<bool>();
  for (const auto& v : j.at("vertices")) {
    GP pi = GP::parse(v.get<std::string>());
    d.index.emplace(pi.str(), static_cast<int>(d.vertices.size()));
    d.vertices.push_back(std::move(pi));
  }
  for (const auto& e : j.at("edges")) d.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  if (d.edges.size() != d.vertices.size()) throw domain_error("diagram cache edge table mismatch");
  return d;
}

std::string parameter_point_to_json(const ParameterPoint& p) {
  json j;
  j["schema"] = kSchemaVersion;
  j["pi"] = p.pi.str();
  json xs = json::array(), ys = json::array();
  for (const Rat& v : p.x) xs.push_back(rat_str(v));
  for (const Rat& v : p.y) ys.push_back(rat_str(v));
  j["x"] = xs;
  j["y"] = ys;
  return j.dump(2) + "\n";
}

ParameterPoint parameter_point_from_json(const std::string& text) {
  json j = json::parse(text);
  ParameterPoint p;
  p.pi = GP::parse(j.at("pi").get<std::string>());
  for (const auto& v : j.at("x")) p.x.push_back(parse_rat(v.get<std::string>()));
  for (const auto& v : j.at("y")) p.y.push_back(parse_rat(v.get<std::string>()));
  return p;
}

std::string trajectory_to_json(const Trajectory& t) {
  json j;
  j["schema"] = kSchemaVersion;
  j["word"] = word_str(t.word);
  json s = json::array();
  for (const Rat& v : t.scales) s.push_back(rat_str(v));
  j["scales"] = s;
  return j.dump(2) + "\n";
}

std::string matrix_to_json(const IMat& m, const std::string& kind, const std::string& basis_note) {
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  if (!basis_note.empty()) j["basis"] = basis_note;
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (size_t k = 0; k < m.cols(); ++k) r.push_back(int_str(m(i, k)));
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

IMat matrix_from_json(const std::string& text) {
  json j = json::parse(text);
  const json& rows = j.contains("rows") ? j.at("rows") : j;
  size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
  IMat m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < c; ++k) {
      const json& cell = rows[i][k];
      if (cell.is_string()) m(i, k) = Int(cell.get<std::string>());
      else m(i, k) = Int(cell.get<long>());
    }
  return m;
}

std::string matrix_to_csv(const IMat& m) {
  std::string out;
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += int_str(m(i, j));
    }
    out += "\n";
  }
  return out;
}

namespace {

json pinching_json(const PinchingEvidence& e) {
  json j;
  j["status"] = e.status == CheckStatus::Pass ? "pass"
               : e.status == CheckStatus::Fail ? "fail"
                                               : "inconclusive";
  j["detail"] = e.detail;
  j["charpoly"] = e.charpoly.str();
  j["tracepoly"] = e.trace_poly.str("s");
  j["reciprocal"] = e.reciprocal;
  j["realDistinctModuli"] = e.real_distinct_moduli;
  j["galoisLowerBoundReached"] = e.galois_max;
  j["primeBudget"] = e.prime_budget;
  json pp = json::array(), qp = json::array();
  for (const auto& [p, pat] : e.p_patterns) pp.push_back({{"p", p}, {"degrees", pat}});
  for (const auto& [p, pat] : e.q_patterns) qp.push_back({{"p", p}, {"degrees", pat}});
  j["charpolyPatterns"] = pp;
  j["tracepolyPatterns"] = qp;
  return j;
}

}  // namespace

std::string certificate_to_json(const std::string& component, const DensityCertificate& c) {
  json j;
  j["schema"] = kSchemaVersion;
  j["component"] = component;
  j["status"] = c.status == CheckStatus::Pass ? "valid"
               : c.status == CheckStatus::Fail ? "invalid"
                                                : "inconclusive";
  j["pinching"] = pinching_json(c.pinching);
  j["infiniteOrder"] = {{"infinite", c.order.infinite}, {"detail", c.order.detail}};
  j["nonCommuting"] = c.non_commuting;
  j["formsPreserved"] = c.forms_preserved;
  json irr;
  irr["ok"] = c.irreducibility.ok;
  irr["failure"] = c.irreducibility.failure;
  irr["spanningSubset"] = c.irreducibility.spanning_subset;
  json tree = json::array();
  for (auto [a, b] : c.irreducibility.tree) tree.push_back({a, b});
  irr["intersectionTree"] = tree;
  irr["twistSetCovers"] = c.irreducibility.twist_set_covers;
  j["strongIrreducibility"] = irr;
  j["detail"] = c.detail;
  return j.dump(2) + "\n";
}

std::string spectrum_to_json(const SpectrumEstimate& e) {
  json j;
  j["schema"] = kSchemaVersion;
  j["exponents"] = e.exponents;
  j["stderr"] = e.stderrs;
  j["ci95"] = [&] {
    json a = json::array();
    for (double s : e.stderrs) a.push_back(2 * s);
    return a;
  }();
  j["samples"] = e.samples;
  j["totalTime"] = e.total_time;
  j["tieIncidents"] = e.tie_incidents;
  j["lowConfidence"] = e.low_confidence;
  j["theta"] = word_str(e.theta);
  j["symmetryResiduals"] = e.symmetry_residuals();
  return j.dump(2) + "\n";
}

std::string extension_to_json(const ExtensionWitness& w) {
  json j;
  j["schema"] = kSchemaVersion;
  j["sigma"] = w.sigma.str();
  j["tau"] = w.tau.str();
  json ins = json::array();
  for (int a : w.inserted) ins.push_back(w.tau.name(a));
  j["inserted"] = ins;
  j["kind"] = w.kind == ExtensionKind::TypePreserving ? "type-preserving" : "type-changing";
  j["sigmaStratum"] = w.sigma_stratum.str();
  j["tauStratum"] = w.tau_stratum.str();
  return j.dump(2) + "\n";
}

}  // namespace rauzy
