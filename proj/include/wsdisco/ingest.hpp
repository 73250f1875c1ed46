#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsdisco/lang.hpp"
#include "wsdisco/store.hpp"

namespace wsdisco {

struct ManifestEntry {
  std::string source;  // file path or http(s) URL
  std::optional<std::string> category;
};

using CorpusManifest = std::vector<ManifestEntry>;

// JSON-lines, one {"source": ..., "category": ...} object per line.
// ManifestError on unreadable input or duplicate sources.
CorpusManifest load_manifest(const std::string& path);
CorpusManifest parse_manifest(std::string_view text, const std::string& origin = "<string>");

enum class Availability { Available, Unavailable };

struct AvailabilityConfig {
  bool enabled = false;  // off by default: offline, reproducible runs
  int timeout_ms = 3000;
};

// HTTP success within the timeout. Skipped (Available) when disabled.
Availability check_availability(const std::string& uri, const AvailabilityConfig& cfg);

struct IngestOptions {
  AvailabilityConfig availability;
  double language_threshold = 0.10;
  // Sources without a scheme resolve against this directory (usually the
  // manifest's own directory).
  std::string base_dir;
};

struct IngestReport {
  std::int64_t parsed = 0;
  std::int64_t discarded_unavailable = 0;  // unreachable, unreadable or malformed
  std::int64_t discarded_language = 0;
  std::int64_t services_stored = 0;
};

// Parses every manifest entry, keeps available English-or-undetermined
// services, and persists them with their category. The three discard/parse
// counts partition the manifest entries.
IngestReport ingest_corpus(const CorpusManifest& manifest, Store& store,
                           const IngestOptions& options);

}  // namespace wsdisco
