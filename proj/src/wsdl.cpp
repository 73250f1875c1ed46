#include "wsdisco/wsdl.hpp"

#include <expat.h>
#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <memory>
#include <set>
#include <unordered_map>

#include "wsdisco/error.hpp"

namespace wsdisco {

namespace {

// ---------------------------------------------------------------------------
// Minimal DOM built through expat. Element and attribute names are reduced to
// their local part; WSDL prefixes vary too much across producers to matter.
// ---------------------------------------------------------------------------

struct XmlNode {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::string text;
  std::vector<std::unique_ptr<XmlNode>> children;

  const std::string* attr(std::string_view key) const {
    for (const auto& [k, v] : attrs)
      if (k == key) return &v;
    return nullptr;
  }

  std::string attr_or(std::string_view key, std::string fallback = "") const {
    const std::string* v = attr(key);
    return v ? *v : std::move(fallback);
  }

  const XmlNode* child(std::string_view name_) const {
    for (const auto& c : children)
      if (c->name == name_) return c.get();
    return nullptr;
  }

  std::vector<const XmlNode*> children_named(std::string_view name_) const {
    std::vector<const XmlNode*> out;
    for (const auto& c : children)
      if (c->name == name_) out.push_back(c.get());
    return out;
  }
};

std::string local_name(std::string_view qname) {
  std::size_t colon = qname.rfind(':');
  return std::string(colon == std::string_view::npos ? qname : qname.substr(colon + 1));
}

struct TreeBuilder {
  XmlNode root;
  std::vector<XmlNode*> stack;
};

void XMLCALL on_start(void* ud, const XML_Char* name, const XML_Char** atts) {
  auto* tb = static_cast<TreeBuilder*>(ud);
  auto node = std::make_unique<XmlNode>();
  node->name = local_name(name);
  for (int i = 0; atts[i]; i += 2) {
    std::string key = local_name(atts[i]);
    if (key == "xmlns") continue;
    node->attrs.emplace_back(std::move(key), atts[i + 1]);
  }
  XmlNode* raw = node.get();
  tb->stack.back()->children.push_back(std::move(node));
  tb->stack.push_back(raw);
}

void XMLCALL on_end(void* ud, const XML_Char*) {
  static_cast<TreeBuilder*>(ud)->stack.pop_back();
}

void XMLCALL on_text(void* ud, const XML_Char* s, int len) {
  auto* tb = static_cast<TreeBuilder*>(ud);
  tb->stack.back()->text.append(s, static_cast<std::size_t>(len));
}

XmlNode parse_xml(std::string_view document) {
  TreeBuilder tb;
  tb.stack.push_back(&tb.root);

  XML_Parser parser = XML_ParserCreate(nullptr);
  if (!parser) fail(Errc::ParseError, "expat parser allocation failed");
  XML_SetUserData(parser, &tb);
  XML_SetElementHandler(parser, on_start, on_end);
  XML_SetCharacterDataHandler(parser, on_text);

  XML_Status status = XML_Parse(parser, document.data(),
                                static_cast<int>(document.size()), /*isFinal=*/1);
  if (status != XML_STATUS_OK) {
    std::string msg = XML_ErrorString(XML_GetErrorCode(parser));
    auto line = XML_GetCurrentLineNumber(parser);
    XML_ParserFree(parser);
    fail(Errc::ParseError, "malformed XML at line " + std::to_string(line) + ": " + msg);
  }
  XML_ParserFree(parser);

  if (tb.root.children.empty()) fail(Errc::ParseError, "document has no root element");
  return std::move(*tb.root.children.front());
}

std::string trimmed(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string documentation_of(const XmlNode& node) {
  const XmlNode* doc = node.child("documentation");
  return doc ? trimmed(doc->text) : std::string();
}

// ---------------------------------------------------------------------------
// XSD type extraction, shared by both WSDL versions.
// ---------------------------------------------------------------------------

void collect_members(const XmlNode& node, const XmlNode* self, std::vector<std::string>& out) {
  for (const auto& c : node.children) {
    if (c.get() == self) continue;
    if (c->name == "element" || c->name == "attribute") {
      std::string name = c->attr_or("name");
      if (name.empty()) name = local_name(c->attr_or("ref"));
      if (!name.empty()) out.push_back(name);
    } else if (c->name == "enumeration") {
      std::string value = c->attr_or("value");
      if (!value.empty()) out.push_back(value);
    }
    collect_members(*c, self, out);
  }
}

bool has_enumeration(const XmlNode& node) {
  for (const auto& c : node.children) {
    if (c->name == "enumeration") return true;
    if (has_enumeration(*c)) return true;
  }
  return false;
}

void extract_schema_types(const XmlNode& schema, std::vector<TypeRecord>& out) {
  for (const auto& c : schema.children) {
    std::string name = c->attr_or("name");
    if (name.empty()) continue;
    TypeRecord rec;
    rec.name = name;
    if (c->name == "element") {
      rec.kind = TypeKind::Element;
    } else if (c->name == "complexType") {
      rec.kind = TypeKind::ComplexType;
    } else if (c->name == "simpleType") {
      rec.kind = has_enumeration(*c) ? TypeKind::Enumeration : TypeKind::SimpleType;
    } else if (c->name == "attribute") {
      rec.kind = TypeKind::Attribute;
    } else {
      continue;
    }
    collect_members(*c, nullptr, rec.member_names);
    out.push_back(std::move(rec));
  }
}

std::vector<TypeRecord> extract_types(const XmlNode& root) {
  std::vector<TypeRecord> out;
  for (const XmlNode* types : root.children_named("types"))
    for (const XmlNode* schema : types->children_named("schema"))
      extract_schema_types(*schema, out);
  return out;
}

void mark_external_params(ServiceRecord& service) {
  std::set<std::string> declared;
  for (const auto& t : service.declared_types) declared.insert(t.name);
  for (auto& op : service.operations) {
    for (auto* params : {&op.inputs, &op.outputs})
      for (auto& p : *params)
        p.external = p.type_ref.empty() || declared.count(p.type_ref) == 0;
  }
}

// ---------------------------------------------------------------------------
// WSDL 1.1
// ---------------------------------------------------------------------------

struct MessagePart {
  std::string name;
  std::string element;
  std::string type;
};

std::vector<ParamRecord> flatten_parts(const std::vector<MessagePart>& parts) {
  std::vector<ParamRecord> out;
  for (const auto& part : parts) {
    ParamRecord p;
    if (!part.element.empty()) {
      p.name = part.element;  // message/part indirection resolved to the element name
      p.type_ref = part.element;
    } else {
      p.name = part.name;
      p.type_ref = part.type;
    }
    if (p.name.empty()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ServiceRecord> parse_wsdl11(const XmlNode& root, const std::string& uri) {
  std::unordered_map<std::string, std::vector<MessagePart>> messages;
  for (const XmlNode* msg : root.children_named("message")) {
    std::vector<MessagePart> parts;
    for (const XmlNode* part : msg->children_named("part")) {
      parts.push_back({part->attr_or("name"), local_name(part->attr_or("element")),
                       local_name(part->attr_or("type"))});
    }
    messages[msg->attr_or("name")] = std::move(parts);
  }

  struct PortTypeOps {
    std::vector<OperationRecord> ops;
  };
  std::unordered_map<std::string, PortTypeOps> port_types;
  std::vector<std::string> port_type_order;
  for (const XmlNode* pt : root.children_named("portType")) {
    PortTypeOps entry;
    for (const XmlNode* op : pt->children_named("operation")) {
      OperationRecord rec;
      rec.name = op->attr_or("name");
      if (rec.name.empty()) continue;
      rec.documentation = documentation_of(*op);
      if (const XmlNode* input = op->child("input")) {
        auto it = messages.find(local_name(input->attr_or("message")));
        if (it != messages.end()) rec.inputs = flatten_parts(it->second);
      }
      if (const XmlNode* output = op->child("output")) {
        auto it = messages.find(local_name(output->attr_or("message")));
        if (it != messages.end()) rec.outputs = flatten_parts(it->second);
      }
      entry.ops.push_back(std::move(rec));
    }
    port_types[pt->attr_or("name")] = std::move(entry);
    port_type_order.push_back(pt->attr_or("name"));
  }

  struct BindingInfo {
    std::string port_type;
    BindingStyle style = BindingStyle::Unknown;
    std::string transport;
  };
  std::unordered_map<std::string, BindingInfo> bindings;
  for (const XmlNode* b : root.children_named("binding")) {
    BindingInfo info;
    info.port_type = local_name(b->attr_or("type"));
    // the soap:binding child shares the local name "binding"
    for (const XmlNode* soap : b->children_named("binding")) {
      std::string style = soap->attr_or("style");
      if (style == "rpc") info.style = BindingStyle::RPC;
      else if (style == "document") info.style = BindingStyle::Document;
      if (info.transport.empty()) info.transport = soap->attr_or("transport");
    }
    bindings[b->attr_or("name")] = std::move(info);
  }

  std::vector<ServiceRecord> services;
  for (const XmlNode* svc : root.children_named("service")) {
    ServiceRecord rec;
    rec.wsdl_version = WsdlVersion::V1_1;
    rec.wsdl_uri = uri;
    rec.name = svc->attr_or("name");
    rec.documentation = documentation_of(*svc);

    std::vector<std::string> bound_port_types;
    for (const XmlNode* port : svc->children_named("port")) {
      EndpointRecord ep;
      ep.name = port->attr_or("name");
      ep.binding_name = local_name(port->attr_or("binding"));
      for (const XmlNode* addr : port->children_named("address")) {
        if (ep.address.empty()) ep.address = addr->attr_or("location");
      }
      auto it = bindings.find(ep.binding_name);
      if (it != bindings.end()) {
        ep.binding_style = it->second.style;
        ep.transport = it->second.transport;
        const std::string& pt = it->second.port_type;
        if (port_types.count(pt) &&
            std::find(bound_port_types.begin(), bound_port_types.end(), pt) ==
                bound_port_types.end())
          bound_port_types.push_back(pt);
      }
      rec.endpoints.push_back(std::move(ep));
    }

    if (bound_port_types.empty()) bound_port_types = port_type_order;
    for (const auto& pt : bound_port_types) {
      auto it = port_types.find(pt);
      if (it == port_types.end()) continue;
      for (const auto& op : it->second.ops) rec.operations.push_back(op);
    }

    rec.declared_types = extract_types(root);
    mark_external_params(rec);
    services.push_back(std::move(rec));
  }
  return services;
}

// ---------------------------------------------------------------------------
// WSDL 2.0
// ---------------------------------------------------------------------------

std::vector<ServiceRecord> parse_wsdl20(const XmlNode& root, const std::string& uri) {
  std::unordered_map<std::string, std::vector<OperationRecord>> interfaces;
  std::vector<std::string> interface_order;
  for (const XmlNode* iface : root.children_named("interface")) {
    std::vector<OperationRecord> ops;
    for (const XmlNode* op : iface->children_named("operation")) {
      OperationRecord rec;
      rec.name = op->attr_or("name");
      if (rec.name.empty()) continue;
      rec.documentation = documentation_of(*op);
      for (const XmlNode* input : op->children_named("input")) {
        std::string el = local_name(input->attr_or("element"));
        if (!el.empty()) rec.inputs.push_back({el, el, false});
      }
      for (const XmlNode* output : op->children_named("output")) {
        std::string el = local_name(output->attr_or("element"));
        if (!el.empty()) rec.outputs.push_back({el, el, false});
      }
      ops.push_back(std::move(rec));
    }
    interfaces[iface->attr_or("name")] = std::move(ops);
    interface_order.push_back(iface->attr_or("name"));
  }

  std::unordered_map<std::string, std::pair<std::string, std::string>> bindings;  // name -> {interface, transport}
  for (const XmlNode* b : root.children_named("binding"))
    bindings[b->attr_or("name")] = {local_name(b->attr_or("interface")), b->attr_or("type")};

  std::vector<ServiceRecord> services;
  for (const XmlNode* svc : root.children_named("service")) {
    ServiceRecord rec;
    rec.wsdl_version = WsdlVersion::V2_0;
    rec.wsdl_uri = uri;
    rec.name = svc->attr_or("name");
    rec.documentation = documentation_of(*svc);

    for (const XmlNode* ep : svc->children_named("endpoint")) {
      EndpointRecord e;
      e.name = ep->attr_or("name");
      e.address = ep->attr_or("address");
      e.binding_name = local_name(ep->attr_or("binding"));
      auto it = bindings.find(e.binding_name);
      if (it != bindings.end()) e.transport = it->second.second;
      rec.endpoints.push_back(std::move(e));
    }

    std::string iface = local_name(svc->attr_or("interface"));
    auto it = interfaces.find(iface);
    if (it != interfaces.end()) {
      rec.operations = it->second;
    } else {
      for (const auto& name : interface_order)
        for (const auto& op : interfaces[name]) rec.operations.push_back(op);
    }

    rec.declared_types = extract_types(root);
    mark_external_params(rec);
    services.push_back(std::move(rec));
  }
  return services;
}

}  // namespace

std::string canonical_uri(std::string_view uri) {
  std::string s = trimmed(uri);
  auto lower_prefix = [](std::string_view v) {
    std::string out(v);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
  };
  std::string head = lower_prefix(std::string_view(s).substr(0, std::min<std::size_t>(8, s.size())));
  if (head.rfind("http://", 0) == 0 || head.rfind("https://", 0) == 0) {
    std::size_t scheme_end = s.find("//") + 2;
    std::size_t path = s.find('/', scheme_end);
    std::size_t authority_end = path == std::string::npos ? s.size() : path;
    for (std::size_t i = 0; i < authority_end; ++i)
      s[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
  }
  return s;
}

std::string service_id(const std::string& wsdl_uri, const std::string& service_name,
                       bool multi_service) {
  std::string key = canonical_uri(wsdl_uri);
  if (multi_service) key += "#" + service_name;

  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(key.data(), key.size(), md, &len, EVP_sha256(), nullptr);

  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(16);
  for (unsigned i = 0; i < 8; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

std::vector<ServiceRecord> parse_wsdl(std::string_view document, const std::string& uri) {
  XmlNode root = parse_xml(document);

  std::vector<ServiceRecord> services;
  if (root.name == "definitions") {
    services = parse_wsdl11(root, uri);
  } else if (root.name == "description") {
    services = parse_wsdl20(root, uri);
  } else {
    fail(Errc::UnsupportedVersion,
         "root element <" + root.name + "> is neither WSDL 1.1 nor WSDL 2.0");
  }

  if (services.empty())
    fail(Errc::ParseError, "document declares no service element: " + uri);

  bool multi = services.size() > 1;
  for (auto& svc : services) svc.id = service_id(uri, svc.name, multi);
  return services;
}

const char* to_string(WsdlVersion v) {
  return v == WsdlVersion::V1_1 ? "1.1" : "2.0";
}

const char* to_string(BindingStyle s) {
  switch (s) {
    case BindingStyle::RPC: return "RPC";
    case BindingStyle::Document: return "Document";
    default: return "Unknown";
  }
}

const char* to_string(TypeKind k) {
  switch (k) {
    case TypeKind::Element: return "Element";
    case TypeKind::ComplexType: return "ComplexType";
    case TypeKind::SimpleType: return "SimpleType";
    case TypeKind::Attribute: return "Attribute";
    case TypeKind::Enumeration: return "Enumeration";
  }
  return "Element";
}

WsdlVersion wsdl_version_from(std::string_view s) {
  if (s == "2.0") return WsdlVersion::V2_0;
  return WsdlVersion::V1_1;
}

BindingStyle binding_style_from(std::string_view s) {
  if (s == "RPC") return BindingStyle::RPC;
  if (s == "Document") return BindingStyle::Document;
  return BindingStyle::Unknown;
}

TypeKind type_kind_from(std::string_view s) {
  if (s == "ComplexType") return TypeKind::ComplexType;
  if (s == "SimpleType") return TypeKind::SimpleType;
  if (s == "Attribute") return TypeKind::Attribute;
  if (s == "Enumeration") return TypeKind::Enumeration;
  return TypeKind::Element;
}

}  // namespace wsdisco
