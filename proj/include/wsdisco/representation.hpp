#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "wsdisco/text.hpp"
#include "wsdisco/wsdl.hpp"

namespace wsdisco {

class Store;

enum class RepKind { B, RBTT, SR };

const char* to_string(RepKind k);
RepKind rep_kind_from(std::string_view s);

// Term vector for one service. B and RBTT carry term counts; SR carries the
// walk probabilities P(s,t) of the terms that cleared the 1/N_t threshold,
// with the full score map kept alongside.
struct Representation {
  std::string service_id;
  RepKind kind = RepKind::B;
  std::map<std::string, double> terms;
  std::map<std::string, double> raw_scores;  // SR only
};

// Baseline representation: pipeline over the service documentation, each
// operation's documentation and name, and every declared type name and
// member name. Endpoint and binding strings stay out.
Representation build_baseline(const ServiceRecord& service);
Representation build_baseline(const ServiceRecord& service, const Stoplist& general,
                              const Stoplist& boilerplate);

// Support set of the stored representation of the given kind.
std::set<std::string> get_vr(const std::string& service_id, RepKind kind, const Store& store);

}  // namespace wsdisco
