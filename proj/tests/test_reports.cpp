#include <doctest.h>

#include <algorithm>

#include "sse/report_json.hpp"
#include "test_support.hpp"

using namespace sse;

namespace {

Report sample_report() {
  const FamilySpec spec = FamilySpec::complete(8);
  const Graph g = generate(spec);
  return verify_main(g, GraphRef::of(spec, g), 1.0 / 16, 0.18, {{2.0, 4.0}, {2.0, kInfinity}});
}

}  // namespace

TEST_CASE("infinities are encoded as strings") {
  CHECK(json_real(kInfinity) == "inf");
  CHECK(json_real(-kInfinity) == "-inf");
  CHECK(json_real(0.5) == Json(0.5));
}

TEST_CASE("vector and matrix serialization is row-major") {
  Eigen::MatrixXd m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  CHECK(to_json_matrix(m).dump() == "[[1.0,2.0,3.0],[4.0,5.0,6.0]]");
  Eigen::VectorXd v(2);
  v << 7, 8;
  CHECK(to_json(v).dump() == "[7.0,8.0]");
}

TEST_CASE("report rows carry the stable schema keys, one row per pair") {
  const Report report = sample_report();
  const Json rows = report_rows(report);
  REQUIRE(rows.size() == 2);
  for (const Json& row : rows) {
    for (const char* key : {"claim", "inputs", "verdict", "evidence", "tolerances",
                            "runtime_ms"})
      CHECK(row.contains(key));
    for (const char* key : {"graph", "delta", "epsilon", "p", "q", "seed"})
      CHECK(row["inputs"].contains(key));
    for (const char* key : {"phi_delta", "witness_set", "norm_lower", "norm_upper",
                            "bound_rhs", "vacuous_flags"})
      CHECK(row["evidence"].contains(key));
  }
  CHECK(rows[0]["claim"] == "main_theorem");
  CHECK(rows[0]["inputs"]["q"] == Json(4.0));
  CHECK(rows[1]["inputs"]["q"] == "inf");
  CHECK(rows[0]["evidence"]["phi_delta"] == "6/7");
}

TEST_CASE("csv flattens one verdict per row") {
  const std::vector<Report> reports = {sample_report()};
  const std::string csv = reports_csv(reports);
  const auto lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == 3);  // header + two pairs
  CHECK(csv.rfind("claim,graph,n,d,delta,epsilon,p,q,seed,verdict", 0) == 0);
  CHECK(csv.find("main_theorem,complete:8,8,7") != std::string::npos);
  CHECK(csv.find(",holds,") != std::string::npos);
}

TEST_CASE("identical inputs and seeds give byte-identical documents") {
  Json a = reports_document({sample_report()});
  Json b = reports_document({sample_report()});
  zero_runtimes(a);
  zero_runtimes(b);
  CHECK(dump_document(a) == dump_document(b));
}

TEST_CASE("rounding results serialize threshold and certification") {
  const Graph cu = generate(FamilySpec::clique_union(2, 3));
  const RoundingResult r = round_witness(cu, testsupport::indicator(6, {0, 1, 2}), 0.5, 0.01);
  const Json j = to_json(r);
  CHECK(j["found"] == true);
  CHECK(j["set"] == Json({0, 1, 2}));
  CHECK(j["phi"] == "0");
  CHECK(j["mu"] == "1/2");
  CHECK(j["certified"] == true);
}
