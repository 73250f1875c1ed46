#pragma once

#include <unistd.h>

#include <filesystem>
#include <map>
#include <string>

#include "wsdisco/store.hpp"

namespace fixtures {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("wsdisco_fix_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string str() const { return path.string(); }
};

inline wsdisco::ServiceRecord service(const std::string& id) {
  wsdisco::ServiceRecord s;
  s.id = id;
  s.name = id;
  s.wsdl_uri = "http://example.com/" + id + "?wsdl";
  return s;
}

inline wsdisco::Representation rep(const std::string& id, wsdisco::RepKind kind,
                                   std::map<std::string, double> terms) {
  wsdisco::Representation r;
  r.service_id = id;
  r.kind = kind;
  r.terms = std::move(terms);
  return r;
}

}  // namespace fixtures
