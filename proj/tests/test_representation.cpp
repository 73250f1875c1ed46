#include <algorithm>
#include <random>

#include "doctest.h"
#include "wsdisco/representation.hpp"

using namespace wsdisco;

namespace {

ServiceRecord service_with_type(const std::string& type_name) {
  ServiceRecord s;
  s.id = "s1";
  s.declared_types.push_back({TypeKind::ComplexType, type_name, {}});
  return s;
}

}  // namespace

TEST_CASE("baseline from a type name") {
  Representation rep = build_baseline(service_with_type("CountryCurrency"));
  CHECK(rep.kind == RepKind::B);
  CHECK(rep.terms == std::map<std::string, double>{{"countri", 1}, {"currenc", 1}});
}

TEST_CASE("baseline keeps non-stopword operation names") {
  ServiceRecord s;
  s.id = "s1";
  OperationRecord op;
  op.name = "Add";
  s.operations.push_back(op);
  Representation rep = build_baseline(s);
  CHECK(rep.terms == std::map<std::string, double>{{"add", 1}});
}

TEST_CASE("empty service yields empty multiset") {
  ServiceRecord s;
  s.id = "s1";
  CHECK(build_baseline(s).terms.empty());
}

TEST_CASE("baseline covers docs, op docs, op names, type members") {
  ServiceRecord s;
  s.id = "s1";
  s.documentation = "weather lookups";
  OperationRecord op;
  op.name = "GetForecast";
  op.documentation = "city forecast";
  s.operations.push_back(op);
  s.declared_types.push_back({TypeKind::Element, "WeatherAlert", {"Severity"}});
  // endpoints are excluded
  s.endpoints.push_back({"Port", "http://host/x", "Binding", BindingStyle::RPC, "transport"});

  Representation rep = build_baseline(s);
  CHECK(rep.terms.count("weather"));
  CHECK(rep.terms.count("lookup"));
  CHECK(rep.terms.count("forecast"));
  CHECK(rep.terms.count("citi"));
  CHECK(rep.terms.count("alert"));
  CHECK(rep.terms.count("sever"));
  CHECK(rep.terms["weather"] == 2);   // doc + type name
  CHECK(rep.terms["forecast"] == 2);  // op name + op doc
  CHECK(!rep.terms.count("host"));
  CHECK(!rep.terms.count("port"));
  CHECK(!rep.terms.count("transport"));
}

TEST_CASE("baseline is insensitive to operation order") {
  ServiceRecord s;
  s.id = "s1";
  for (const char* name : {"GetForecast", "SendAlert", "CityLookup"}) {
    OperationRecord op;
    op.name = name;
    s.operations.push_back(op);
  }
  Representation base = build_baseline(s);

  std::mt19937 rng(7);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(s.operations.begin(), s.operations.end(), rng);
    CHECK(build_baseline(s).terms == base.terms);
  }
}
