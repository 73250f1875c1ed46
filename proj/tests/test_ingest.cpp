#include <fstream>
#include <thread>

#include "doctest.h"
#include "fixtures.hpp"
#include "httplib.h"
#include "wsdisco/error.hpp"
#include "wsdisco/ingest.hpp"

using namespace wsdisco;
using fixtures::TempDir;

namespace {

const char* kMinimalWsdl = R"(<definitions xmlns="http://schemas.xmlsoap.org/wsdl/" name="D">
  <portType name="P"><operation name="Lookup"/></portType>
  <service name="%NAME%">
    <documentation>%DOC%</documentation>
    <port name="p" binding="b"/>
  </service>
</definitions>)";

std::string wsdl_with(const std::string& name, const std::string& doc) {
  std::string out = kMinimalWsdl;
  out.replace(out.find("%NAME%"), 6, name);
  out.replace(out.find("%DOC%"), 5, doc);
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("manifest parsing") {
  CorpusManifest manifest = parse_manifest(
      "{\"source\": \"a.wsdl\", \"category\": \"Weather\"}\n"
      "{\"source\": \"b.wsdl\"}\n");
  REQUIRE(manifest.size() == 2);
  CHECK(manifest[0].source == "a.wsdl");
  CHECK(*manifest[0].category == "Weather");
  CHECK(!manifest[1].category.has_value());

  CHECK(parse_manifest("").empty());

  try {
    parse_manifest("{\"source\": \"a\"}\n{\"source\": \"a\"}\n");
    FAIL("expected ManifestError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ManifestError);
  }
  try {
    parse_manifest("not json\n");
    FAIL("expected ManifestError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ManifestError);
  }
}

TEST_CASE("availability checks") {
  AvailabilityConfig off;
  CHECK(check_availability("http://127.0.0.1:1/never", off) == Availability::Available);

  AvailabilityConfig on;
  on.enabled = true;
  on.timeout_ms = 500;
  CHECK(check_availability("http://127.0.0.1:1/refused", on) == Availability::Unavailable);

  httplib::Server server;
  server.Get("/ok.wsdl", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("hello", "text/plain");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread runner([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  CHECK(check_availability("http://127.0.0.1:" + std::to_string(port) + "/ok.wsdl", on) ==
        Availability::Available);
  CHECK(check_availability("http://127.0.0.1:" + std::to_string(port) + "/missing", on) ==
        Availability::Unavailable);

  server.stop();
  runner.join();
}

TEST_CASE("ingest counts partition the manifest") {
  TempDir dir;
  std::string base = dir.str();
  write_file(base + "/one.wsdl", wsdl_with("One", "weather lookups for the city"));
  write_file(base + "/two.wsdl", wsdl_with("Two", ""));
  write_file(base + "/three.wsdl", wsdl_with("Three", "le service renvoie la météo de la ville"));
  write_file(base + "/broken.wsdl", "<definitions><unclosed></definitions>");

  CorpusManifest manifest = parse_manifest(
      "{\"source\": \"one.wsdl\", \"category\": \"Weather\"}\n"
      "{\"source\": \"two.wsdl\"}\n"
      "{\"source\": \"three.wsdl\", \"category\": \"Weather\"}\n"
      "{\"source\": \"broken.wsdl\"}\n"
      "{\"source\": \"missing.wsdl\"}\n");

  TempDir store_dir;
  Store store = Store::create(store_dir.str());
  IngestOptions options;
  options.base_dir = base;
  IngestReport report = ingest_corpus(manifest, store, options);

  CHECK(report.parsed == 2);                 // one.wsdl, two.wsdl
  CHECK(report.discarded_language == 1);     // three.wsdl is French
  CHECK(report.discarded_unavailable == 2);  // broken + missing
  CHECK(report.parsed + report.discarded_language + report.discarded_unavailable == 5);
  CHECK(report.services_stored == 2);

  // category and language land on the record
  bool found_one = false;
  for (const auto& [id, svc] : store.services()) {
    (void)id;
    if (svc.name == "One") {
      found_one = true;
      CHECK(svc.category.has_value());
      CHECK(*svc.category == "Weather");
      CHECK(svc.language == "en");
    }
    if (svc.name == "Two") CHECK(svc.language == "unknown");
  }
  CHECK(found_one);
}

TEST_CASE("empty manifest ingests nothing") {
  TempDir store_dir;
  Store store = Store::create(store_dir.str());
  IngestReport report = ingest_corpus({}, store, {});
  CHECK(report.parsed == 0);
  CHECK(report.discarded_unavailable == 0);
  CHECK(report.discarded_language == 0);
  CHECK(report.services_stored == 0);
}

TEST_CASE("ingest fetches URL sources") {
  httplib::Server server;
  server.Get("/svc.wsdl", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(wsdl_with("Remote", "weather for the city and the county"), "text/xml");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread runner([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  std::string url = "http://127.0.0.1:" + std::to_string(port) + "/svc.wsdl";
  TempDir store_dir;
  Store store = Store::create(store_dir.str());
  IngestOptions options;
  options.availability.enabled = true;
  options.availability.timeout_ms = 2000;
  IngestReport report = ingest_corpus({{url, std::nullopt}}, store, options);
  CHECK(report.parsed == 1);
  CHECK(report.services_stored == 1);

  server.stop();
  runner.join();
}
