#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sse/theorems.hpp"

namespace sse {

// Insertion-ordered JSON keeps report bytes deterministic for fixed
// inputs and seeds; runtime_ms is the single volatile field.
using Json = nlohmann::ordered_json;

/// Infinities are encoded as the strings "inf"/"-inf" (JSON has no
/// infinity literal).
Json json_real(double x);

Json to_json(const Eigen::VectorXd& v);
Json to_json_matrix(const Eigen::MatrixXd& m);  // row-major nested arrays
Json to_json(const RoundingResult& r);

/// One schema row per (p,q) pair:
/// {claim, inputs:{graph, delta, epsilon, p, q, seed}, verdict,
///  evidence:{phi_delta, witness_set, norm_lower, norm_upper, bound_rhs,
///  vacuous_flags}, tolerances, runtime_ms}.
Json report_rows(const Report& report);

/// {"reports": [row...]} over all reports, rows in input order.
Json reports_document(const std::vector<Report>& reports);

/// Flattened one-verdict-per-row CSV of the same rows.
std::string reports_csv(const std::vector<Report>& reports);

/// Zeroes every runtime_ms in a document, the field excluded from
/// byte-identity comparisons.
void zero_runtimes(Json& document);

std::string dump_document(const Json& document);

}  // namespace sse
