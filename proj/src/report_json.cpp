#include "sse/report_json.hpp"

#include <cmath>
#include <sstream>

namespace sse {

Json json_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

Json to_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(json_real(v[i]));
  return a;
}

Json to_json_matrix(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(json_real(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RoundingResult& r) {
  Json j;
  j["found"] = r.found;
  j["set"] = r.found ? Json(r.set.members) : Json();
  j["phi"] = r.found ? Json(r.phi_value.str()) : Json();
  j["mu"] = r.found ? Json(r.mu.str()) : Json();
  j["bound"] = r.bound ? json_real(*r.bound) : Json();
  j["bound_vacuous"] = r.bound_vacuous;
  j["threshold"] = r.threshold ? json_real(*r.threshold) : Json();
  if (r.certified) j["certified"] = *r.certified;
  return j;
}

namespace {

Json optional_real(const std::optional<double>& x) {
  return x ? json_real(*x) : Json();
}

Json base_row(const Report& report) {
  Json row;
  row["claim"] = report.claim;
  Json inputs;
  inputs["graph"] = {{"id", report.graph.id}, {"n", report.graph.n}, {"d", report.graph.d}};
  inputs["delta"] = optional_real(report.delta);
  inputs["epsilon"] = optional_real(report.epsilon);
  inputs["p"] = optional_real(report.p);
  inputs["q"] = optional_real(report.q);
  inputs["seed"] = report.seed;
  if (report.lambda) inputs["lambda"] = json_real(*report.lambda);
  if (report.restarts > 0) inputs["restarts"] = report.restarts;
  if (report.trials > 0) inputs["trials"] = report.trials;
  if (report.constant_c) inputs["constant_c"] = json_real(*report.constant_c);
  row["inputs"] = std::move(inputs);
  row["verdict"] = to_string(report.verdict);
  Json evidence;
  evidence["phi_delta"] = report.phi_delta ? Json(report.phi_delta->str()) : Json();
  evidence["witness_set"] = report.witness_set ? Json(report.witness_set->members) : Json();
  evidence["norm_lower"] = optional_real(report.norm_lower);
  evidence["norm_upper"] = optional_real(report.norm_upper);
  evidence["bound_rhs"] = optional_real(report.bound_rhs);
  evidence["vacuous_flags"] = report.vacuous_flags;
  if (report.witness_vector) evidence["witness_vector"] = to_json(*report.witness_vector);
  if (!report.metrics.empty()) {
    Json metrics;
    for (const auto& [key, value] : report.metrics) metrics[key] = json_real(value);
    evidence["metrics"] = std::move(metrics);
  }
  row["evidence"] = std::move(evidence);
  Json tolerances;
  for (const auto& [key, value] : report.tolerances) tolerances[key] = json_real(value);
  row["tolerances"] = std::move(tolerances);
  row["runtime_ms"] = report.runtime_ms;
  return row;
}

}  // namespace

Json report_rows(const Report& report) {
  Json rows = Json::array();
  if (report.pairs.empty()) {
    rows.push_back(base_row(report));
    return rows;
  }
  for (const PairOutcome& pair : report.pairs) {
    Json row = base_row(report);
    row["inputs"]["p"] = json_real(pair.p);
    row["inputs"]["q"] = json_real(pair.q);
    row["verdict"] = to_string(pair.verdict);
    row["evidence"]["norm_lower"] = json_real(pair.norm_lower);
    row["evidence"]["norm_upper"] = optional_real(pair.norm_upper);
    if (pair.witness) row["evidence"]["witness_vector"] = to_json(*pair.witness);
    if (pair.rounding) row["evidence"]["rounding"] = to_json(*pair.rounding);
    if (!pair.note.empty()) row["evidence"]["note"] = pair.note;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json reports_document(const std::vector<Report>& reports) {
  Json rows = Json::array();
  for (const Report& report : reports)
    for (auto& row : report_rows(report)) rows.push_back(std::move(row));
  Json doc;
  doc["reports"] = std::move(rows);
  return doc;
}

namespace {

std::string csv_scalar(const Json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string reports_csv(const std::vector<Report>& reports) {
  std::ostringstream out;
  out << "claim,graph,n,d,delta,epsilon,p,q,seed,verdict,phi_delta,witness_set,"
         "norm_lower,norm_upper,bound_rhs,vacuous_flags,runtime_ms\n";
  const Json doc = reports_document(reports);
  for (const Json& row : doc["reports"]) {
    const Json& inputs = row["inputs"];
    const Json& evidence = row["evidence"];
    std::string witness;
    if (evidence["witness_set"].is_array()) {
      for (const auto& v : evidence["witness_set"]) {
        if (!witness.empty()) witness += ' ';
        witness += v.dump();
      }
    }
    std::string flags;
    for (const auto& f : evidence["vacuous_flags"]) {
      if (!flags.empty()) flags += ';';
      flags += f.get<std::string>();
    }
    out << csv_quote(csv_scalar(row["claim"])) << ','
        << csv_quote(csv_scalar(inputs["graph"]["id"])) << ','
        << csv_scalar(inputs["graph"]["n"]) << ',' << csv_scalar(inputs["graph"]["d"]) << ','
        << csv_scalar(inputs["delta"]) << ',' << csv_scalar(inputs["epsilon"]) << ','
        << csv_scalar(inputs["p"]) << ',' << csv_scalar(inputs["q"]) << ','
        << csv_scalar(inputs["seed"]) << ',' << csv_scalar(row["verdict"]) << ','
        << csv_quote(csv_scalar(evidence["phi_delta"])) << ',' << csv_quote(witness) << ','
        << csv_scalar(evidence["norm_lower"]) << ',' << csv_scalar(evidence["norm_upper"])
        << ',' << csv_scalar(evidence["bound_rhs"]) << ',' << csv_quote(flags) << ','
        << csv_scalar(row["runtime_ms"]) << '\n';
  }
  return out.str();
}

void zero_runtimes(Json& document) {
  if (document.is_object()) {
    if (document.contains("runtime_ms")) document["runtime_ms"] = 0;
    for (auto& [key, value] : document.items()) zero_runtimes(value);
  } else if (document.is_array()) {
    for (auto& value : document) zero_runtimes(value);
  }
}

std::string dump_document(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace sse
