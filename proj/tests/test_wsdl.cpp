#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wsdisco/error.hpp"
#include "wsdisco/wsdl.hpp"

using namespace wsdisco;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const std::string& name) {
  return slurp(std::string(WSDISCO_SOURCE_DIR) + "/tests/data/wsdl/" + name);
}

}  // namespace

TEST_CASE("WSDL 1.1 single-service fixture") {
  auto services = parse_wsdl(fixture("weather11.wsdl"), "http://example.com/weather?wsdl");
  REQUIRE(services.size() == 1);
  const ServiceRecord& svc = services[0];

  CHECK(svc.name == "Weather");
  CHECK(svc.wsdl_version == WsdlVersion::V1_1);
  CHECK(svc.documentation == "Weather lookup web service.");
  CHECK(svc.id.size() == 16);

  REQUIRE(svc.endpoints.size() == 1);
  CHECK(svc.endpoints[0].name == "WeatherPort");
  CHECK(svc.endpoints[0].address == "http://example.com/weather.asmx");
  CHECK(svc.endpoints[0].binding_name == "WeatherBinding");
  CHECK(svc.endpoints[0].binding_style == BindingStyle::Document);
  CHECK(svc.endpoints[0].transport == "http://schemas.xmlsoap.org/soap/http");

  REQUIRE(svc.operations.size() == 1);
  const OperationRecord& op = svc.operations[0];
  CHECK(op.name == "GetWeather");
  CHECK(op.documentation == "Returns the forecast for the given city.");
  REQUIRE(op.inputs.size() == 1);
  REQUIRE(op.outputs.size() == 1);
  CHECK(op.inputs[0].name == "City");
  CHECK(op.inputs[0].type_ref == "string");
  CHECK(op.inputs[0].external);  // xsd built-in
  CHECK(op.outputs[0].name == "Forecast");
  CHECK(!op.outputs[0].external);  // declared element

  REQUIRE(svc.declared_types.size() == 2);
  CHECK(svc.declared_types[0].kind == TypeKind::Element);
  CHECK(svc.declared_types[0].name == "Forecast");
  CHECK(svc.declared_types[0].member_names ==
        std::vector<std::string>{"Temperature", "Conditions"});
  CHECK(svc.declared_types[1].kind == TypeKind::Enumeration);
  CHECK(svc.declared_types[1].name == "Units");
  CHECK(svc.declared_types[1].member_names == std::vector<std::string>{"Metric", "Imperial"});
}

TEST_CASE("WSDL 2.0 fixture") {
  auto services = parse_wsdl(fixture("currency20.wsdl"), "http://example.com/currency?wsdl");
  REQUIRE(services.size() == 1);
  const ServiceRecord& svc = services[0];
  CHECK(svc.name == "CurrencyConverter");
  CHECK(svc.wsdl_version == WsdlVersion::V2_0);
  REQUIRE(svc.operations.size() == 1);
  CHECK(svc.operations[0].name == "GetExchangeRate");
  REQUIRE(svc.operations[0].inputs.size() == 1);
  CHECK(svc.operations[0].inputs[0].name == "CurrencyCode");
  CHECK(!svc.operations[0].inputs[0].external);
  REQUIRE(svc.endpoints.size() == 1);
  CHECK(svc.endpoints[0].address == "http://example.com/currency");
  CHECK(svc.endpoints[0].binding_style == BindingStyle::Unknown);
}

TEST_CASE("documentation defaults to empty strings") {
  std::string doc = R"(<definitions xmlns="http://schemas.xmlsoap.org/wsdl/" name="X">
    <portType name="P"><operation name="Do"/></portType>
    <service name="S"><port name="p" binding="b"/></service>
  </definitions>)";
  auto services = parse_wsdl(doc, "file.wsdl");
  REQUIRE(services.size() == 1);
  CHECK(services[0].documentation.empty());
  REQUIRE(services[0].operations.size() == 1);
  CHECK(services[0].operations[0].documentation.empty());
}

TEST_CASE("truncated XML raises ParseError") {
  std::string doc = fixture("weather11.wsdl").substr(0, 400);
  CHECK_THROWS_WITH_AS(parse_wsdl(doc, "broken.wsdl"), doctest::Contains("malformed"), Error);
  try {
    parse_wsdl(doc, "broken.wsdl");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("non-WSDL root raises UnsupportedVersion") {
  try {
    parse_wsdl("<html><body/></html>", "page.html");
    FAIL("expected UnsupportedVersion");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedVersion);
  }
}

TEST_CASE("document without services raises ParseError") {
  std::string doc = R"(<definitions xmlns="http://schemas.xmlsoap.org/wsdl/" name="X"/>)";
  try {
    parse_wsdl(doc, "empty.wsdl");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("parse_wsdl is deterministic") {
  std::string doc = fixture("weather11.wsdl");
  auto a = parse_wsdl(doc, "u");
  auto b = parse_wsdl(doc, "u");
  REQUIRE(a.size() == b.size());
  CHECK(a[0].id == b[0].id);
  CHECK(a[0].operations.size() == b[0].operations.size());
  CHECK(a[0].declared_types.size() == b[0].declared_types.size());
}

TEST_CASE("multi-service documents get distinct ids") {
  std::string doc = R"(<definitions xmlns="http://schemas.xmlsoap.org/wsdl/" name="X">
    <portType name="P"><operation name="Do"/></portType>
    <service name="A"><port name="p" binding="b"/></service>
    <service name="B"><port name="p" binding="b"/></service>
  </definitions>)";
  auto services = parse_wsdl(doc, "http://example.com/multi?wsdl");
  REQUIRE(services.size() == 2);
  CHECK(services[0].id != services[1].id);
}

TEST_CASE("canonical_uri lowercases scheme and authority only") {
  CHECK(canonical_uri("HTTP://Example.COM/Weather.ASMX?WSDL") ==
        "http://example.com/Weather.ASMX?WSDL");
  CHECK(canonical_uri("  local/file.wsdl ") == "local/file.wsdl");
  CHECK(service_id("HTTP://Example.COM/x", "S", false) ==
        service_id("http://example.com/x", "S", false));
  CHECK(service_id("http://example.com/x", "A", true) !=
        service_id("http://example.com/x", "B", true));
}
