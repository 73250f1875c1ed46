#include "wsdisco/representation.hpp"

#include "wsdisco/store.hpp"

namespace wsdisco {

const char* to_string(RepKind k) {
  switch (k) {
    case RepKind::B: return "B";
    case RepKind::RBTT: return "RBTT";
    case RepKind::SR: return "SR";
  }
  return "B";
}

RepKind rep_kind_from(std::string_view s) {
  if (s == "RBTT") return RepKind::RBTT;
  if (s == "SR") return RepKind::SR;
  return RepKind::B;
}

Representation build_baseline(const ServiceRecord& service, const Stoplist& general,
                              const Stoplist& boilerplate) {
  Representation rep;
  rep.service_id = service.id;
  rep.kind = RepKind::B;

  auto add = [&](std::string_view text) {
    for (const auto& term : pipeline(text, general, boilerplate)) rep.terms[term] += 1.0;
  };

  add(service.documentation);
  for (const auto& op : service.operations) {
    add(op.documentation);
    add(op.name);
  }
  for (const auto& type : service.declared_types) {
    add(type.name);
    for (const auto& member : type.member_names) add(member);
  }
  return rep;
}

Representation build_baseline(const ServiceRecord& service) {
  return build_baseline(service, default_general_stoplist(), default_boilerplate_stoplist());
}

std::set<std::string> get_vr(const std::string& service_id, RepKind kind, const Store& store) {
  Representation rep = store.get_representation(service_id, kind);
  std::set<std::string> support;
  for (const auto& [term, weight] : rep.terms) {
    (void)weight;
    support.insert(term);
  }
  return support;
}

}  // namespace wsdisco
