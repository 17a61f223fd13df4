#include <doctest.h>

#include <stdexcept>

#include "commands.hpp"

using namespace defml;
using namespace defml::cli;

TEST_CASE("h parameter parsing") {
  CHECK(HParam::parse("sym", false).symbolic);
  const HParam q = HParam::parse("3/2", false);
  CHECK_FALSE(q.symbolic);
  CHECK(q.value == Rational(3, 2));
  CHECK(q.text == "3/2");
  CHECK(HParam::parse("2", false).value == Rational(2));
  CHECK(HParam::parse("0.5", true).value == Rational(1, 2));
  CHECK_THROWS_AS(HParam::parse("0.5", false), std::invalid_argument);
  CHECK_THROWS_AS(HParam::parse("x", true), std::invalid_argument);
}

TEST_CASE("family tokens") {
  CHECK(family_from_token("g") == FamilyKind::G);
  CHECK(family_from_token("g-monic") == FamilyKind::GMonic);
  CHECK(family_from_token("phi") == FamilyKind::Phi);
  CHECK(family_from_token("phi-monic") == FamilyKind::PhiMonic);
  CHECK_THROWS_AS(family_from_token("psi"), std::invalid_argument);
  for (const auto k : {FamilyKind::G, FamilyKind::GMonic, FamilyKind::Phi,
                       FamilyKind::PhiMonic})
    CHECK(family_from_token(family_token(k)) == k);
}

TEST_CASE("coeffs document") {
  const OutputDocument doc = cmd_coeffs(FamilyKind::G, 0, HParam::sym());
  CHECK(doc.exit_code == 0);
  REQUIRE(doc.json["members"].size() == 1);
  CHECK(doc.json["members"][0]["text"] == "1");
  CHECK(doc.json["tool"] == "defml");
  CHECK(doc.json["params"]["family"] == "g");

  // Symbolic table, degree-3 row carries the h^2 term.
  const OutputDocument g5 = cmd_coeffs(FamilyKind::G, 5, HParam::sym());
  const auto& m3 = g5.json["members"][3]["terms"];
  REQUIRE(m3.size() == 2);
  CHECK(m3[0]["y"] == 1);
  CHECK(m3[0]["h"] == 2);
  CHECK(m3[0]["c"] == "2/3");
  CHECK(m3[1]["y"] == 3);
  CHECK(m3[1]["h"] == 0);
  CHECK(m3[1]["c"] == "4/3");

  // Monic phi at h=1 matches the published table row for n=4.
  const OutputDocument p5 =
      cmd_coeffs(FamilyKind::PhiMonic, 5, HParam::parse("1", false));
  const auto& m4 = p5.json["members"][4]["terms"];
  REQUIRE(m4.size() == 3);
  CHECK(m4[0]["c"] == "3/2");
  CHECK(m4[1]["c"] == "-5");
  CHECK(m4[2]["c"] == "1");
}

TEST_CASE("zeros document and exit codes") {
  const OutputDocument doc =
      cmd_zeros(FamilyKind::PhiMonic, 3, HParam::parse("1", true), 1e-8);
  CHECK(doc.exit_code == 0);
  CHECK(doc.json["all_pass"] == true);
  REQUIRE(doc.json["zeros"].size() == 3);
  CHECK(doc.json["zeros"][1]["value"] == 0.0);

  const OutputDocument gdoc =
      cmd_zeros(FamilyKind::G, 3, HParam::parse("1", true), 1e-8);
  CHECK(gdoc.json["zeros"][0]["re"] == 0.0);

  CHECK_THROWS_AS(cmd_zeros(FamilyKind::Phi, 3, HParam::parse("1", true), 1e-8),
                  std::invalid_argument);
  CHECK_THROWS_AS(cmd_zeros(FamilyKind::G, 3, HParam::sym(), 1e-8),
                  std::invalid_argument);
  CHECK_THROWS_AS(cmd_zeros(FamilyKind::G, 0, HParam::parse("1", true), 1e-8),
                  std::invalid_argument);
}

TEST_CASE("quad document") {
  const OutputDocument doc = cmd_quad(2, HParam::parse("1", true), 3, 1e-8);
  CHECK(doc.exit_code == 0);
  CHECK(doc.json["all_pass"] == true);
  REQUIRE(doc.json["nodes"].size() == 2);
  REQUIRE(doc.json["moments"].size() == 4);
  CHECK(doc.json["moments"][0]["expected"] == 0.5);
  CHECK(doc.json["moments"][1]["measured"] == 0.0);
  CHECK_THROWS_AS(cmd_quad(0, HParam::parse("1", true), 1, 1e-8),
                  std::invalid_argument);
}

TEST_CASE("verify document schema and exit codes") {
  const OutputDocument doc = cmd_verify("hyper", 6, {}, 1e-8);
  CHECK(doc.exit_code == 0);
  CHECK(doc.json["all_pass"] == true);
  REQUIRE(doc.json["reports"].size() == 50);
  const auto& rep = doc.json["reports"][0];
  for (const char* key : {"identity", "params", "measured", "claimed_paper",
                          "claimed_derived", "abs_dev", "rel_dev", "tol", "pass"})
    CHECK(rep.contains(key));
  CHECK(rep["params"].contains("n"));
  CHECK(rep["params"].contains("m"));
  CHECK(rep["params"].contains("h"));

  CHECK_THROWS_AS(cmd_verify("bogus", 5, {}, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(cmd_verify("all", 5, {}, 0.0), std::invalid_argument);
}

TEST_CASE("orthogonality suite respects the h list") {
  const std::vector<HParam> hs = {HParam::parse("1", true)};
  const OutputDocument doc = cmd_verify("orthogonality", 2, hs, 1e-8);
  CHECK(doc.exit_code == 0);
  bool saw_summary = false;
  for (const auto& rep : doc.json["reports"]) {
    CHECK(rep["params"]["h"] == "1");
    if (rep["identity"] == "phi.orthogonality.diagonal_constant") {
      saw_summary = true;
      CHECK(rep["measured"] == "both");
    }
  }
  CHECK(saw_summary);
}

TEST_CASE("identical invocations render byte-identical output") {
  const OutputDocument a = cmd_quad(4, HParam::parse("3/2", true), 7, 1e-8);
  const OutputDocument b = cmd_quad(4, HParam::parse("3/2", true), 7, 1e-8);
  CHECK(a.render(OutputFormat::Json) == b.render(OutputFormat::Json));
  CHECK(a.render(OutputFormat::Csv) == b.render(OutputFormat::Csv));
}

TEST_CASE("csv and json carry identical numeric content") {
  const OutputDocument doc =
      cmd_zeros(FamilyKind::PhiMonic, 5, HParam::parse("2", true), 1e-8);
  // CSV data rows: index,value,residual -- compare against the JSON array.
  const auto& zeros = doc.json["zeros"];
  REQUIRE(doc.csv_rows.size() == zeros.size() + 1);  // header
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const auto& row = doc.csv_rows[i + 1];
    CHECK(row[1] == zeros[i]["value"].dump());
    CHECK(row[2] == zeros[i]["residual"].dump());
  }

  const OutputDocument v = cmd_verify("hyper", 4, {}, 1e-8);
  const auto& reports = v.json["reports"];
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& row = v.csv_rows[i + 1];
    CHECK(row[7] == reports[i]["abs_dev"].dump());
    CHECK(row[10] == (reports[i]["pass"].get<bool>() ? "true" : "false"));
  }
}
