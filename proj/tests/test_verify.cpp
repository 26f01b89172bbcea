#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qcartan/verify/sweeps.hpp"

using namespace qcartan;
using namespace qcartan::verify;

namespace {

CheckReport passing(const std::string& task) {
  CheckReport r;
  r.task = task;
  r.set_sides({"1", "2"}, {"1", "2"});
  return r;
}

Json without_timings(CheckReport r) {
  r.millis = 0;
  r.extra.erase("property_millis");
  return to_json(r);
}

}  // namespace

TEST(Report, JsonCarriesVersionedSchema) {
  auto r = passing("graded");
  r.params = Json{{"ell", 2}, {"n", 3}};
  r.local_case = 2;
  auto j = to_json(r);
  for (const char* key : {"schema", "task", "params", "lhs", "rhs", "equal", "assertions", "failed_assertions", "millis",
                          "phi_choice", "order_version", "status", "case"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(j["phi_choice"], "glaisher");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(to_json(from_json(j)), j);
}

TEST(Report, SetSidesKeepsEqualConsistent) {
  CheckReport r;
  r.set_sides({"1", "3"}, {"1", "2"});
  EXPECT_FALSE(r.equal);
  EXPECT_FALSE(r.passed());
  r.set_sides({"1"}, {"1"});
  EXPECT_TRUE(r.passed());
  r.check(false, "something");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failed_assertions, std::vector<std::string>{"something"});
}

TEST(Report, CsvRowPerReport) {
  auto header = csv_header();
  auto row = to_csv_row(passing("kor"));
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
  EXPECT_NE(row.find("kor"), std::string::npos);
}

TEST(ExitCode, Semantics) {
  EXPECT_EQ(exit_code({}), 0);
  EXPECT_EQ(exit_code({passing("a"), passing("b")}), 0);
  auto bad = passing("b");
  bad.set_sides({"1"}, {"2"});
  EXPECT_EQ(exit_code({passing("a"), bad}), 1);
  auto viol = passing("c");
  viol.status = Status::IntegralityViolation;
  EXPECT_EQ(exit_code({bad, viol}), 3);
  auto skipped = CheckReport();
  skipped.status = Status::SkippedBudget;
  EXPECT_EQ(exit_code({passing("a"), skipped}), 0);
  auto err = passing("d");
  err.status = Status::Error;
  EXPECT_EQ(exit_code({err}), 1);
}

TEST(Checks, GradedSmallCases) {
  auto r0 = check_graded(2, 0);
  EXPECT_TRUE(r0.passed());
  EXPECT_EQ(r0.lhs, std::vector<std::string>{"1"});
  auto r2 = check_graded(2, 2);
  EXPECT_TRUE(r2.passed());
  ASSERT_EQ(r2.lhs.size(), 2u);
  EXPECT_EQ(r2.lhs[0], "1");
  EXPECT_EQ(r2.lhs[1], (qint(2) * qint(4)).normalized().to_string());
}

TEST(Checks, ClassicalChainForTwoColorsDegreeThree) {
  auto r = check_kor(2, 3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.lhs, (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(r.extra["r_multiset"], Json({"1", "2"}));
}

TEST(Checks, SpecializedAndLocalExamples) {
  EXPECT_TRUE(check_specialized(2, 4, mpq_class(2, 3)).passed());
  EXPECT_TRUE(check_specialized(6, 5, 5).passed());
  auto l = check_local(2, 2, 2, 3);
  EXPECT_TRUE(l.passed());
  EXPECT_EQ(l.local_case, std::optional<int>(1));
  EXPECT_TRUE(check_local(2, 3, 3, 2).passed());
}

TEST(Checks, LocalCaseClassification) {
  EXPECT_EQ(local_case(2, 3, 2), 1);
  EXPECT_EQ(local_case(5, 2, 2), 2);
  EXPECT_EQ(local_case(7, 2, 2), 3);
  EXPECT_EQ(local_case(5, 3, 3), 3);
}

TEST(Checks, UnitCaseHasZeroExponents) {
  auto r = check_local(3, 4, 5, 3);
  ASSERT_EQ(r.local_case, std::optional<int>(3));
  EXPECT_TRUE(r.passed());
  for (const auto& s : r.lhs) EXPECT_EQ(s, "1");
}

TEST(Checks, CartanBlocksConjectureAndFitting) {
  EXPECT_TRUE(check_cartan_blocks(2, 2).passed());
  EXPECT_TRUE(check_cartan_blocks(3, 2).passed());
  auto c = check_conjecture(3, 4);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.lhs.size(), parts_filtered(PartitionFilter::class_regular(3), 4).size());
  EXPECT_TRUE(check_fitting(3, 3, {mpq_class(2), mpq_class(-1, 3)}).passed());
}

TEST(Checks, QMatrixFactsUpToEightColors) {
  for (int ell = 1; ell <= 8; ++ell) {
    CheckReport r;
    q_matrix_facts(ell, r);
    EXPECT_TRUE(r.failed_assertions.empty()) << ell;
    EXPECT_GT(r.assertions, 0);
  }
}

TEST(Checks, DeterminantUnitGuard) {
  LMatrix a = LMatrix::diagonal({qint(2), qint(3)});
  LMatrix b = LMatrix::diagonal({qint(2).shifted(3), qint(3) * LaurentPoly(mpq_class(-2, 5))});
  EXPECT_TRUE(det_unit_guard(a, b));
  EXPECT_FALSE(det_unit_guard(a, LMatrix::diagonal({qint(2), qint(2)})));
}

TEST(RunTasks, OrderPreservedAcrossWorkers) {
  std::vector<Task> ts;
  for (int i = 0; i < 20; ++i)
    ts.push_back({"t", Json{{"i", i}}, [i] {
                    auto r = passing("t");
                    r.params = Json{{"i", i}};
                    return r;
                  },
                  ""});
  auto out = run_tasks(ts, {4, std::nullopt});
  ASSERT_EQ(out.size(), 20u);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(out[i].params["i"], i);
}

TEST(RunTasks, BudgetSkipsRestOfFamily) {
  auto slow = [] {
    auto r = passing("slow");
    r.millis = 5000;
    return r;
  };
  std::vector<Task> ts{{"slow", Json::object(), slow, "f"},
                       {"slow", Json::object(), slow, "f"},
                       {"other", Json::object(), [] { return passing("other"); }, "g"}};
  auto out = run_tasks(ts, {1, 1.0});
  EXPECT_EQ(out[0].status, Status::Ok);
  EXPECT_EQ(out[1].status, Status::SkippedBudget);
  EXPECT_EQ(out[2].status, Status::Ok);
  EXPECT_EQ(exit_code(out), 0);
}

TEST(Properties, SmallBoundsPass) {
  auto r = run_property_suite(1, {4, 12, 20});
  EXPECT_TRUE(r.passed()) << to_json(r).dump();
}

TEST(Properties, SameSeedSameReport) {
  PropertyBounds b{4, 12, 20};
  EXPECT_EQ(without_timings(run_property_suite(9, b)), without_timings(run_property_suite(9, b)));
}

TEST(Properties, ZeroBoundsAreVacuous) {
  auto r = run_property_suite(1, {0, 0, 0});
  EXPECT_TRUE(r.passed());
}

TEST(Sweeps, IntegerListParsing) {
  EXPECT_EQ(parse_int_list("5"), std::vector<int>{5});
  EXPECT_EQ(parse_int_list("2..4"), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(parse_int_list("2-4"), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(parse_int_list("6,1,3..4,3"), (std::vector<int>{1, 3, 4, 6}));
  EXPECT_EQ(parse_int_list("-2"), std::vector<int>{-2});
  for (const char* bad : {"", "x", "4..2", "1,,2", "3.5", "1,"}) EXPECT_THROW(parse_int_list(bad), std::invalid_argument) << bad;
}

TEST(Sweeps, ThetaListParsing) {
  auto t = parse_theta_list("2,1/2,-4/6");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[2], mpq_class(-2, 3));
  for (const char* bad : {"", "0", "1/0", "a", "2,"}) EXPECT_THROW(parse_theta_list(bad), std::invalid_argument) << bad;
}

TEST(Sweeps, DefaultGridSizes) {
  SweepOptions o;
  EXPECT_EQ(graded_tasks(o).size(), 45u);
  EXPECT_EQ(kor_tasks(o).size(), 32u);
  EXPECT_EQ(specialized_tasks(o).size(), 240u);
  EXPECT_EQ(cartan_block_tasks(o).size(), 13u);
  EXPECT_EQ(conjecture_tasks(o).size(), 14u);
  EXPECT_EQ(fitting_tasks(o).size(), 10u);
  EXPECT_EQ(property_tasks(o).size(), 1u);
  for (const auto& t : local_tasks(o)) {
    long p = t.params["p"];
    mpq_class th(t.params["theta"].get<std::string>());
    EXPECT_EQ(mpz_divisible_ui_p(th.get_num().get_mpz_t(), p), 0);
    EXPECT_EQ(mpz_divisible_ui_p(th.get_den().get_mpz_t(), p), 0);
  }
}

TEST(Sweeps, FittingSelectionDependsOnSeed) {
  SweepOptions a, b;
  b.seed = 2;
  auto pa = fitting_tasks(a), pa2 = fitting_tasks(a), pb = fitting_tasks(b);
  for (size_t i = 0; i < pa.size(); ++i) EXPECT_EQ(pa[i].params, pa2[i].params);
  bool differs = false;
  for (size_t i = 0; i < pa.size(); ++i) differs = differs || pa[i].params != pb[i].params;
  EXPECT_TRUE(differs);
}

TEST(Sweeps, LocalCoverageReport) {
  std::vector<CheckReport> rs(3);
  for (int c = 1; c <= 3; ++c) {
    rs[c - 1] = passing("local");
    rs[c - 1].params = Json{{"p", 2}, {"theta", "3"}, {"ell", c}};
    rs[c - 1].local_case = c;
  }
  EXPECT_TRUE(local_case_coverage(rs).passed());
  rs.pop_back();
  EXPECT_FALSE(local_case_coverage(rs).passed());
}
