#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wsdisco/depgraph.hpp"
#include "wsdisco/error.hpp"

using namespace wsdisco;
namespace fs = std::filesystem;

namespace {

TermStats stats_with(std::map<std::string, std::vector<std::string>> postings, std::size_t M) {
  TermStats s;
  s.M = M;
  s.postings = std::move(postings);
  return s;
}

OperationRecord op(const std::string& name, std::vector<std::string> inputs,
                   std::vector<std::string> outputs) {
  OperationRecord o;
  o.name = name;
  for (auto& p : inputs) o.inputs.push_back({p, "", true});
  for (auto& p : outputs) o.outputs.push_back({p, "", true});
  return o;
}

}  // namespace

TEST_CASE("ngd hand case") {
  // f(x)=10, f(y)=20, f(x,y)=5, M=100 -> log4/log10
  std::vector<std::string> shared, only_x, only_y;
  for (int i = 0; i < 5; ++i) shared.push_back("b" + std::to_string(i));
  std::vector<std::string> x = shared, y = shared;
  for (int i = 0; i < 5; ++i) x.push_back("x" + std::to_string(i));
  for (int i = 0; i < 15; ++i) y.push_back("y" + std::to_string(i));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  TermStats stats = stats_with({{"x", x}, {"y", y}}, 100);

  double expected = std::log(4.0) / std::log(10.0);
  CHECK(ngd("x", "y", stats) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(ngd("x", "y", stats) - expected) < 1e-12);
}

TEST_CASE("ngd degenerate cases") {
  TermStats stats = stats_with({{"a", {"s1", "s2"}}, {"b", {"s3"}}}, 10);
  CHECK(ngd("a", "a", stats) == 0.0);
  CHECK(std::isinf(ngd("a", "b", stats)));   // no co-occurrence
  CHECK(std::isinf(ngd("a", "zzz", stats))); // unseen term

  // identical distribution: f(x)=f(y)=f(x,y)=k
  TermStats same = stats_with({{"a", {"s1", "s2"}}, {"b", {"s1", "s2"}}}, 10);
  CHECK(ngd("a", "b", same) == 0.0);
}

TEST_CASE("ngd symmetry") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::string> ids;
    for (int i = 0; i < 8; ++i) ids.push_back("s" + std::to_string(i));
    std::vector<std::string> x, y;
    for (const auto& id : ids) {
      if (rng() % 2) x.push_back(id);
      if (rng() % 2) y.push_back(id);
    }
    if (x.empty() || y.empty()) continue;
    TermStats stats = stats_with({{"x", x}, {"y", y}}, 8);
    CHECK(ngd("x", "y", stats) == ngd("y", "x", stats));
  }
}

TEST_CASE("similarity worked examples") {
  TermStats stats;
  stats.M = 2;
  SimilarityConfig exact{SimMethod::ExactStem, 0.8};
  CHECK(similarity("City", "City", exact, stats) == 1.0);
  CHECK(similarity("CityName", "ZipCode", exact, stats) == 0.0);
  CHECK(similarity("CityName", "City", exact, stats) == doctest::Approx(0.75));
  CHECK(similarity("", "City", exact, stats) == 0.0);
  CHECK(similarity("123", "City", exact, stats) == 0.0);  // no tokens survive
}

TEST_CASE("similarity is within [0,1] and reflexive") {
  TermStats stats = stats_with({{"citi", {"s1", "s2"}}, {"name", {"s1"}}}, 4);
  for (SimMethod method : {SimMethod::ExactStem, SimMethod::CorpusNGD}) {
    SimilarityConfig cfg{method, 0.8};
    for (const char* name : {"City", "CityName", "cityName2Code"}) {
      double self = similarity(name, name, cfg, stats);
      CHECK(self == 1.0);
    }
    double s = similarity("CityName", "City", cfg, stats);
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
  }
}

TEST_CASE("operation_depends definition checks") {
  TermStats stats;
  SimilarityConfig cfg{SimMethod::ExactStem, 0.9};

  OperationRecord provider = op("GetCity", {}, {"City", "Temp"});
  OperationRecord consumer = op("UseCity", {"City"}, {});
  CHECK(operation_depends(provider, consumer, cfg, stats));

  OperationRecord no_inputs = op("Nullary", {}, {});
  CHECK(!operation_depends(provider, no_inputs, cfg, stats));

  OperationRecord price = op("UsePrice", {"Price"}, {});
  CHECK(!operation_depends(op("GetCity", {}, {"City"}), price, cfg, stats));
}

TEST_CASE("adding provider outputs never falsifies dependence") {
  TermStats stats;
  SimilarityConfig cfg{SimMethod::ExactStem, 0.9};
  std::mt19937_64 rng(5);
  const char* pool[] = {"City", "Temp", "Price", "ZipCode", "Forecast", "Rate"};

  for (int round = 0; round < 200; ++round) {
    std::vector<std::string> outs, ins;
    for (const char* p : pool) {
      if (rng() % 2) outs.push_back(p);
      if (rng() % 3 == 0) ins.push_back(p);
    }
    OperationRecord f_i = op("P", {}, outs);
    OperationRecord f_j = op("C", ins, {});
    bool before = operation_depends(f_i, f_j, cfg, stats);
    f_i.outputs.push_back({"ExtraOutput", "", true});
    bool after = operation_depends(f_i, f_j, cfg, stats);
    if (before) CHECK(after);
  }
}

namespace {

struct GraphFixtureDirs {
  fs::path base;
  GraphFixtureDirs() {
    base = fs::temp_directory_path() / ("wsdisco_graph_" + std::to_string(::getpid()));
    fs::create_directories(base);
  }
  ~GraphFixtureDirs() {
    std::error_code ec;
    fs::remove_all(base, ec);
  }
};

Store random_corpus_store(const fs::path& dir, std::uint64_t seed, bool with_reps) {
  std::mt19937_64 rng(seed);
  Store store = Store::create(dir.string());

  const char* params[] = {"City", "CityName", "Temp", "Price", "ZipCode",
                          "Code", "Forecast", "Weather", "Amount", "Rate"};
  const char* terms[] = {"citi", "temp", "price", "zip", "code", "forecast", "weather", "rate"};

  int n = 1 + static_cast<int>(rng() % 10);
  for (int i = 0; i < n; ++i) {
    ServiceRecord svc;
    svc.id = "svc" + std::to_string(i);
    svc.name = svc.id;
    svc.wsdl_uri = "http://x/" + svc.id;
    int ops = static_cast<int>(rng() % 3);
    for (int o = 0; o < ops; ++o) {
      OperationRecord rec;
      rec.name = "op" + std::to_string(o);
      int ni = static_cast<int>(rng() % 3);
      int no = static_cast<int>(rng() % 4);
      for (int p = 0; p < ni; ++p) rec.inputs.push_back({params[rng() % 10], "", true});
      for (int p = 0; p < no; ++p) rec.outputs.push_back({params[rng() % 10], "", true});
      svc.operations.push_back(std::move(rec));
    }
    store.put_service(svc);
    if (with_reps) {
      Representation rep;
      rep.service_id = svc.id;
      rep.kind = RepKind::B;
      for (const char* t : terms)
        if (rng() % 3 == 0) rep.terms[t] = 1.0 + static_cast<double>(rng() % 3);
      if (rep.terms.empty()) rep.terms["citi"] = 1.0;
      store.put_representation(rep);
    }
  }
  return store;
}

}  // namespace

TEST_CASE("dependency graph equals the exhaustive pairwise oracle") {
  GraphFixtureDirs dirs;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    bool use_ngd = seed % 2 == 1;
    fs::path dir = dirs.base / ("store" + std::to_string(seed));
    fs::create_directories(dir);
    Store store = random_corpus_store(dir, seed, use_ngd);

    SimilarityConfig cfg;
    cfg.method = use_ngd ? SimMethod::CorpusNGD : SimMethod::ExactStem;
    cfg.alpha = use_ngd ? 0.5 : 0.8;

    TermStats stats;
    if (use_ngd) stats = store.term_stats(RepKind::B);

    DependencyGraph graph = build_dependency_graph(store, cfg);
    auto expected = oracles::dependency_edges(store.services(), cfg, stats);

    CAPTURE(seed);
    CHECK(graph.edges == expected);
    CHECK(graph.nodes.size() == store.services().size());
    for (const auto& [from, to] : graph.edges) CHECK(from != to);
  }
}

TEST_CASE("three-service fixture edge set") {
  GraphFixtureDirs dirs;
  fs::path dir = dirs.base / "fixture3";
  fs::create_directories(dir);
  Store store = Store::create(dir.string());

  ServiceRecord s1;
  s1.id = "S1";
  s1.wsdl_uri = "u1";
  s1.operations.push_back(op("Produce", {}, {"City"}));
  ServiceRecord s2;
  s2.id = "S2";
  s2.wsdl_uri = "u2";
  s2.operations.push_back(op("Consume", {"City"}, {"Temp"}));
  ServiceRecord s3;
  s3.id = "S3";
  s3.wsdl_uri = "u3";
  s3.operations.push_back(op("Else", {"Price"}, {"Rate"}));
  for (const auto& s : {s1, s2, s3}) store.put_service(s);

  SimilarityConfig cfg{SimMethod::ExactStem, 0.9};
  DependencyGraph g = build_dependency_graph(store, cfg);
  CHECK(g.edges == std::set<std::pair<std::string, std::string>>{{"S1", "S2"}});
  CHECK(g.out_degree("S1") == 1);
  CHECK(g.out_degree("S2") == 0);
  CHECK(g.nodes.size() == 3);
}

TEST_CASE("cycles are allowed, single service has no edges") {
  GraphFixtureDirs dirs;
  fs::path dir = dirs.base / "cycle";
  fs::create_directories(dir);
  Store store = Store::create(dir.string());

  ServiceRecord a;
  a.id = "A";
  a.wsdl_uri = "ua";
  a.operations.push_back(op("MakeCity", {"Rate"}, {"City"}));
  ServiceRecord b;
  b.id = "B";
  b.wsdl_uri = "ub";
  b.operations.push_back(op("MakeRate", {"City"}, {"Rate"}));
  store.put_service(a);
  store.put_service(b);

  SimilarityConfig cfg{SimMethod::ExactStem, 0.9};
  DependencyGraph g = build_dependency_graph(store, cfg);
  CHECK(g.has_edge("A", "B"));
  CHECK(g.has_edge("B", "A"));

  store.delete_service("B");
  DependencyGraph single = build_dependency_graph(store, cfg);
  CHECK(single.edges.empty());
}

TEST_CASE("empty store raises EmptyCorpus") {
  GraphFixtureDirs dirs;
  fs::path dir = dirs.base / "empty";
  fs::create_directories(dir);
  Store store = Store::create(dir.string());
  try {
    build_dependency_graph(store, SimilarityConfig{});
    FAIL("expected EmptyCorpus");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyCorpus);
  }
}
