#include "doctest.h"
#include "fixtures.hpp"
#include "wsdisco/error.hpp"
#include "wsdisco/evalharness.hpp"

using namespace wsdisco;
using fixtures::TempDir;

TEST_CASE("precision and recall arithmetic") {
  std::set<std::string> retrieved = {"a", "b", "c", "d"};
  std::set<std::string> relevant = {"a", "b", "x", "y", "z", "w", "v", "u"};
  CHECK(precision(retrieved, relevant) == 0.5);
  CHECK(recall(retrieved, relevant) == 0.25);

  CHECK(precision({"a"}, {"a"}) == 1.0);
  CHECK(recall({"a", "b"}, {"a"}) == 1.0);
  CHECK(precision({"a"}, {"b"}) == 0.0);
  CHECK(recall({"a"}, {"b"}) == 0.0);
}

TEST_CASE("degenerate inputs raise typed errors") {
  try {
    precision({}, {"a"});
    FAIL("expected EmptyRetrieval");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyRetrieval);
  }
  try {
    recall({"a"}, {});
    FAIL("expected EmptyRelevantSet");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyRelevantSet);
  }
}

namespace {

Store tiny_labeled_store(const TempDir& dir) {
  Store store = Store::create(dir.str());
  auto add = [&](const std::string& id, const std::string& category,
                 std::map<std::string, double> b_terms,
                 std::map<std::string, double> rbtt_terms) {
    ServiceRecord svc = fixtures::service(id);
    svc.category = category;
    store.put_service(svc);
    store.put_representation(fixtures::rep(id, RepKind::B, std::move(b_terms)));
    store.put_representation(fixtures::rep(id, RepKind::RBTT, std::move(rbtt_terms)));
  };
  // Weather: w1 found by both, w2 only by B, w3 by neither
  add("w1", "Weather", {{"weather", 2}}, {{"weather", 1}});
  add("w2", "Weather", {{"weather", 1}, {"nois", 1}}, {{"nois", 1}});
  add("w3", "Weather", {{"forecast", 1}}, {{"forecast", 1}});
  // SMS: s1 found by both; s1 is also B-noise for Weather
  add("s1", "SMS", {{"sm", 1}, {"weather", 1}}, {{"sm", 1}});
  add("s2", "SMS", {{"text", 1}}, {{"text", 1}});
  return store;
}

}  // namespace

TEST_CASE("category experiment on a tiny corpus") {
  TempDir dir;
  Store store = tiny_labeled_store(dir);
  ExperimentReport report = run_category_experiment(store, {"Weather", "SMS"},
                                                    {RepKind::B, RepKind::RBTT});

  // Weather/B retrieves w1, w2, s1 -> P 2/3, R 2/3
  const EvalCell& wb = report.cell("Weather", RepKind::B);
  CHECK(*wb.precision_pct == doctest::Approx(100.0 * 2 / 3));
  CHECK(wb.recall_pct == doctest::Approx(100.0 * 2 / 3));
  // Weather/RBTT retrieves w1 only -> P 1, R 1/3
  const EvalCell& wr = report.cell("Weather", RepKind::RBTT);
  CHECK(*wr.precision_pct == doctest::Approx(100.0));
  CHECK(wr.recall_pct == doctest::Approx(100.0 / 3));
  // SMS/B and SMS/RBTT retrieve s1 -> P 1, R 1/2
  CHECK(*report.cell("SMS", RepKind::B).precision_pct == doctest::Approx(100.0));
  CHECK(report.cell("SMS", RepKind::B).recall_pct == doctest::Approx(50.0));

  CHECK(report.undefined_cells == 0);
  CHECK(*report.average_precision(RepKind::B) ==
        doctest::Approx((100.0 * 2 / 3 + 100.0) / 2));
  CHECK(report.average_recall(RepKind::B) == doctest::Approx((100.0 * 2 / 3 + 50.0) / 2));

  // average rows recompute from cells exactly
  double manual = (*report.cell("Weather", RepKind::B).precision_pct +
                   *report.cell("SMS", RepKind::B).precision_pct) /
                  2.0;
  CHECK(*report.average_precision(RepKind::B) == manual);
}

TEST_CASE("undefined cells render as a dash and are excluded from averages") {
  TempDir dir;
  Store store = Store::create(dir.str());
  ServiceRecord svc = fixtures::service("x1");
  svc.category = "Ghost";
  store.put_service(svc);
  store.put_representation(fixtures::rep("x1", RepKind::B, {{"unrelated", 1}}));

  ExperimentReport report = run_category_experiment(store, {"Ghost"}, {RepKind::B});
  CHECK(report.undefined_cells == 1);
  CHECK(!report.cell("Ghost", RepKind::B).precision_pct.has_value());
  CHECK(report.cell("Ghost", RepKind::B).recall_pct == 0.0);
  CHECK(!report.average_precision(RepKind::B).has_value());

  std::string md = to_markdown(report);
  CHECK(md.find("—") != std::string::npos);
  CHECK(md.find("excluded") != std::string::npos);
  std::string csv = to_csv(report);
  CHECK(csv.find("Ghost,B,,0.00") != std::string::npos);
}

TEST_CASE("unknown inputs raise typed errors") {
  TempDir dir;
  Store store = tiny_labeled_store(dir);
  try {
    run_category_experiment(store, {"Nope"}, {RepKind::B});
    FAIL("expected UnknownCategory");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownCategory);
  }
  try {
    run_category_experiment(store, {"Weather"}, {RepKind::SR});
    FAIL("expected MissingRepresentation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingRepresentation);
  }
}

TEST_CASE("report formats") {
  TempDir dir;
  Store store = tiny_labeled_store(dir);
  ExperimentReport report = run_category_experiment(store, {"Weather", "SMS"},
                                                    {RepKind::B, RepKind::RBTT});
  std::string csv = to_csv(report);
  CHECK(csv.rfind("category,rep_kind,precision_pct,recall_pct\n", 0) == 0);
  CHECK(csv.find("Weather,B,66.67,66.67") != std::string::npos);
  CHECK(csv.find("Average,B,") != std::string::npos);

  std::string md = to_markdown(report);
  CHECK(md.rfind("| Categories | B P % | B R % | RBTT P % | RBTT R % |", 0) == 0);
  CHECK(md.find("| Weather | 66.67 | 66.67 | 100.00 | 33.33 |") != std::string::npos);
  CHECK(md.find("| Average |") != std::string::npos);
}
