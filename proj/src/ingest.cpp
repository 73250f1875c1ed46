#include "wsdisco/ingest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "httplib.h"
#include "json.hpp"
#include "wsdisco/error.hpp"

namespace wsdisco {

using nlohmann::json;

namespace {

bool is_url(std::string_view source) {
  return source.rfind("http://", 0) == 0 || source.rfind("https://", 0) == 0;
}

// splits "http://host:port/path" into (scheme://host:port, /path)
std::pair<std::string, std::string> split_url(const std::string& url) {
  std::size_t scheme = url.find("//");
  std::size_t path = url.find('/', scheme == std::string::npos ? 0 : scheme + 2);
  if (path == std::string::npos) return {url, "/"};
  return {url.substr(0, path), url.substr(path)};
}

std::optional<std::string> fetch_url(const std::string& url, int timeout_ms) {
  auto [origin, path] = split_url(url);
  httplib::Client client(origin);
  client.set_connection_timeout(0, timeout_ms * 1000);
  client.set_read_timeout(timeout_ms / 1000, (timeout_ms % 1000) * 1000);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res || res->status < 200 || res->status >= 300) return std::nullopt;
  return res->body;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string service_text(const ServiceRecord& s) {
  std::string text = s.documentation;
  for (const auto& op : s.operations) {
    if (!op.documentation.empty()) {
      text += ' ';
      text += op.documentation;
    }
  }
  return text;
}

}  // namespace

CorpusManifest parse_manifest(std::string_view text, const std::string& origin) {
  CorpusManifest manifest;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;

    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("source"))
      fail(Errc::ManifestError,
           origin + ":" + std::to_string(line_no) + ": expected {\"source\": ...}");
    ManifestEntry entry;
    entry.source = j.at("source").get<std::string>();
    if (j.contains("category") && !j.at("category").is_null())
      entry.category = j.at("category").get<std::string>();
    if (!seen.insert(entry.source).second)
      fail(Errc::ManifestError,
           origin + ":" + std::to_string(line_no) + ": duplicate source " + entry.source);
    manifest.push_back(std::move(entry));
  }
  return manifest;
}

CorpusManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ManifestError, "cannot open manifest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path);
}

Availability check_availability(const std::string& uri, const AvailabilityConfig& cfg) {
  if (!cfg.enabled) return Availability::Available;
  if (!is_url(uri)) {
    std::ifstream in(uri);
    return in ? Availability::Available : Availability::Unavailable;
  }
  return fetch_url(uri, cfg.timeout_ms) ? Availability::Available : Availability::Unavailable;
}

IngestReport ingest_corpus(const CorpusManifest& manifest, Store& store,
                           const IngestOptions& options) {
  IngestReport report;

  for (const auto& entry : manifest) {
    std::optional<std::string> document;
    if (is_url(entry.source)) {
      if (options.availability.enabled &&
          check_availability(entry.source, options.availability) == Availability::Unavailable) {
        ++report.discarded_unavailable;
        continue;
      }
      document = fetch_url(entry.source, options.availability.timeout_ms);
    } else {
      std::string path = entry.source;
      if (!options.base_dir.empty() && path.front() != '/')
        path = options.base_dir + "/" + path;
      document = read_file(path);
    }
    if (!document) {
      ++report.discarded_unavailable;
      continue;
    }

    std::vector<ServiceRecord> services;
    try {
      services = parse_wsdl(*document, entry.source);
    } catch (const Error&) {
      ++report.discarded_unavailable;
      continue;
    }

    std::int64_t stored_here = 0;
    for (auto& svc : services) {
      svc.language = detect_language(service_text(svc), options.language_threshold);
      if (svc.language != "en" && svc.language != "unknown") continue;
      svc.category = entry.category;
      store.put_service(svc);
      ++stored_here;
    }
    if (stored_here == 0) {
      ++report.discarded_language;
    } else {
      ++report.parsed;
      report.services_stored += stored_here;
    }
  }
  return report;
}

}  // namespace wsdisco
