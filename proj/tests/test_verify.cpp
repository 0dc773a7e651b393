#include <set>
#include <sstream>

#include "doctest.h"
#include "qts/stirling.hpp"
#include "qts/verify.hpp"

using namespace qts;

namespace {

// Identity ids the suite must register, one per verified statement.
const std::vector<std::string> kManifest = {
    "poch_negative_index", "flip",           "w_rect",           "w_staircase",
    "w_vanishing",         "w_symmetry",     "duality",          "w_bar_limit",
    "binomial_rect",       "gaussian_reduction", "binomial_theorem", "bracket_binomial_relation",
    "qt_number",           "change_of_basis_u", "change_of_basis_v", "uv_inversion",
    "flip_h",              "flip_g",         "uv_limits",        "diagonal",
    "zero_column",         "stirling_inversion", "expansion_s1",  "expansion_s2",
    "classical_reduction", "x0_sums",        "root_vanishing",   "s1_row_sum",
    "adjacent_weight",
};

SuiteConfig box(int n, int p) {
  SuiteConfig cfg;
  cfg.n_max = n;
  cfg.part_max = p;
  return cfg;
}

}  // namespace

TEST_CASE("x = 0 sums") {
  CHECK(check_x0_sums(Partition{0}).passed);
  CHECK(check_x0_sums(Partition{1}).passed);
  const IdentityReport r = check_x0_sums(Partition{2, 1});
  CHECK(r.passed);
  CHECK(r.index["first_kind_readings"] == nlohmann::json::array({"minus"}));
  // With n = 1 the two readings coincide.
  CHECK(check_x0_sums(Partition{3}).index["first_kind_readings"].size() == 2);
  CHECK(!x0_sum_first_kind_residual(Partition{1, 1}, true).is_zero());
  CHECK(x0_sum_first_kind_residual(Partition{1, 1}, false).is_zero());
}

TEST_CASE("root vanishing") {
  CHECK(check_root_vanishing(Partition{2}, 1, 1).passed);
  CHECK(check_root_vanishing(Partition{1, 1}, 2, 0).passed);
  CHECK(check_root_vanishing(Partition{1, 1}, 2, 0).index["restricted"] == true);
  CHECK(check_root_vanishing(Partition{2, 1}, 1, 1).passed);
  CHECK(check_root_vanishing(Partition{2, 0}, 1, 0).index["restricted"] == false);
  CHECK_THROWS_AS(check_root_vanishing(Partition{2, 1}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_root_vanishing(Partition{2, 1}, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_root_vanishing(Partition{2, 1}, 0, 0), std::invalid_argument);
  CHECK(check_s1_row_sum(Partition{2}).passed);
  CHECK(check_s1_row_sum(Partition{3, 1}).passed);
  CHECK_THROWS_AS(check_s1_row_sum(Partition{1, 1}), std::invalid_argument);
}

TEST_CASE("restricted root forms do not extend to n = 4") {
  // At X = t^{-1} the surviving limit brackets have mu_3 = 0, a larger set
  // than the stated support mu_2 = mu_3 = mu_4 = 0.
  const IdentityReport r = check_root_vanishing(Partition{2, 1, 1, 1}, 2, 0);
  CHECK(!r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->find("expansion") == std::string::npos);
  CHECK(r.witness->find("restricted s1") != std::string::npos);
}

TEST_CASE("suite runs") {
  for (const SuiteConfig& cfg : {box(1, 3), box(2, 2)}) {
    const auto reports = run_suite(cfg);
    CHECK(reports.size() > 50);
    for (const IdentityReport& r : reports) {
      CHECK_MESSAGE(r.passed, r.to_json(false).dump());
      CHECK(r.witness.has_value() == !r.passed);
    }
  }
}

TEST_CASE("default ranges") {
  const SuiteConfig cfg;
  CHECK(cfg.max_n() == 3);
  CHECK(cfg.max_part(1) == 3);
  CHECK(cfg.max_part(2) == 3);
  CHECK(cfg.max_part(3) == 2);
  CHECK(box(3, 1).max_part(1) == 1);
  CHECK(cfg.partitions(2).size() == 10);
}

TEST_CASE("identity filtering") {
  SuiteConfig cfg = box(2, 2);
  cfg.identities = {"diagonal"};
  const auto reports = run_suite(cfg);
  CHECK(reports.size() == partitions_in_box(1, 2).size() + partitions_in_box(2, 2).size());
  for (const IdentityReport& r : reports) CHECK(r.identity_id == "diagonal");
  cfg.identities = {"no_such_identity"};
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(box(0, 2)), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(box(1, -1)), std::invalid_argument);
}

TEST_CASE("registry matches the manifest") {
  std::vector<std::string> registered;
  for (const RegisteredIdentity& r : identity_registry()) registered.push_back(r.id);
  CHECK(registered == kManifest);
  CHECK(std::set<std::string>(registered.begin(), registered.end()).size() == registered.size());
  // Every registered id produces at least one report at the default bounds.
  std::set<std::string> seen;
  for (const IdentityReport& r : run_suite(SuiteConfig{})) seen.insert(r.identity_id);
  for (const std::string& id : kManifest) {
    const bool covered = seen.count(id) || (id == "qt_number" && seen.count("bracket_rect"));
    CHECK_MESSAGE(covered, id);
  }
}

TEST_CASE("suite output is deterministic") {
  const SuiteConfig cfg = box(2, 2);
  const std::string a = suite_json(cfg, run_suite(cfg), false).dump();
  clear_stirling_caches();
  const std::string b = suite_json(cfg, run_suite(cfg), false).dump();
  CHECK(a == b);
  SuiteConfig other = cfg;
  other.seed = 99;
  const auto doc = suite_json(other, run_suite(other), false);
  CHECK(doc["summary"]["failed"] == 0);
}

TEST_CASE("tables") {
  const auto s1_rows = table_entries(TableKind::s1, Partition{1});
  REQUIRE(s1_rows.size() == 3);
  CHECK(s1_rows[1].nu == Partition{1});
  CHECK(s1_rows[1].mu == Partition{0});
  CHECK(s1_rows[2].value.is_one());

  const auto empty = table_entries(TableKind::s2, Partition{0, 0});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].value.is_one());

  const auto gauss = table_entries(TableKind::binomial, Partition{2});
  REQUIRE(gauss.size() == 6);
  CHECK(gauss[3].value.is_one());
  CHECK(gauss[4].value == RationalFn::parse("1+q"));
  CHECK(gauss[5].value.is_one());

  std::ostringstream js;
  emit_table(TableKind::s1, Partition{2, 1}, TableFormat::json, js);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["n"] == 2);
  CHECK(doc["bound"] == nlohmann::json::array({2, 1}));
  CHECK(doc["entries"].size() == table_entries(TableKind::s1, Partition{2, 1}).size());
  CHECK(js.str().find("\"n\"") < js.str().find("\"entries\""));
  for (const auto& e : doc["entries"]) {
    CHECK(RationalFn::parse(e["value"].get<std::string>()) ==
          s1(Partition(e["nu"].get<std::vector<int>>()), Partition(e["mu"].get<std::vector<int>>())));
  }

  std::ostringstream csv;
  emit_table(TableKind::binomial, Partition{2}, TableFormat::csv, csv);
  CHECK(csv.str().rfind("nu,mu,value\n", 0) == 0);
  CHECK(csv.str().find("\"[2]\",\"[1]\",\"q + 1\"\n") != std::string::npos);

  CHECK(parse_table_kind("bracket") == TableKind::bracket);
  CHECK_THROWS_AS(parse_table_kind("s3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_table_format("xml"), std::invalid_argument);
}

TEST_CASE("point evaluation") {
  CHECK(eval_point("qt_number([2,1])", BigRational(1, 2), BigRational(1, 3)) == BigRational(11, 10));
  CHECK(eval_point("s1([2,1],[2,1])", BigRational(3, 7), BigRational(-2, 5)) == 1);
  CHECK(eval_point("s2((3,1), (3,1))", 5, 2) == 1);
  CHECK(eval_point("binomial([2],[1])", 2, 0) == 3);
  CHECK(eval_point("(1-q)/(1-t) + X", 2, 3, 5) == BigRational(11, 2));
  CHECK(eval_expression("w_bar([2,1],[3,2])") == RationalFn::parse("-2*(t-1)*(2*t+1)"));
  CHECK(eval_expression("u([1],[1])") == u_matrix(Partition{1}, Partition{1}));
  CHECK_THROWS_AS(eval_point("1/(1-q)", 1, 0), PoleError);
  CHECK_THROWS_AS(eval_expression("s1([2,1])"), std::invalid_argument);
  CHECK_THROWS_AS(eval_expression("nope([1])"), std::invalid_argument);
  CHECK_THROWS_AS(eval_expression("s1([1],[1,0])"), AmbientMismatch);
}
