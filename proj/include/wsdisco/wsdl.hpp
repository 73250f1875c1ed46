#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wsdisco {

enum class WsdlVersion { V1_1, V2_0 };
enum class BindingStyle { RPC, Document, Unknown };
enum class TypeKind { Element, ComplexType, SimpleType, Attribute, Enumeration };

struct ParamRecord {
  std::string name;
  std::string type_ref;  // qualified schema type local name
  bool external = false; // type_ref does not resolve into declared_types
};

struct OperationRecord {
  std::string name;
  std::string documentation;
  std::vector<ParamRecord> inputs;
  std::vector<ParamRecord> outputs;
};

struct EndpointRecord {
  std::string name;
  std::string address;
  std::string binding_name;
  BindingStyle binding_style = BindingStyle::Unknown;
  std::string transport;
};

struct TypeRecord {
  TypeKind kind = TypeKind::Element;
  std::string name;
  std::vector<std::string> member_names;  // child elements / attributes / enum values
};

struct ServiceRecord {
  std::string id;
  std::string name;
  std::string wsdl_uri;
  std::string documentation;
  WsdlVersion wsdl_version = WsdlVersion::V1_1;
  std::vector<EndpointRecord> endpoints;
  std::vector<OperationRecord> operations;
  std::vector<TypeRecord> declared_types;
  std::optional<std::string> category;
  std::string language = "unknown";
};

// Lowercases the scheme and authority of http(s) URIs and trims whitespace;
// other sources pass through trimmed.
std::string canonical_uri(std::string_view uri);

// First 16 hex chars of SHA-256 over the canonical URI. Documents declaring
// several services disambiguate with "<uri>#<service name>".
std::string service_id(const std::string& wsdl_uri, const std::string& service_name,
                       bool multi_service);

// Parses a WSDL 1.1 or 2.0 document into one record per `service` element.
// Throws ParseError for malformed XML or a document with no service, and
// UnsupportedVersion when the root is neither kind of WSDL.
std::vector<ServiceRecord> parse_wsdl(std::string_view document, const std::string& uri);

const char* to_string(WsdlVersion v);
const char* to_string(BindingStyle s);
const char* to_string(TypeKind k);
WsdlVersion wsdl_version_from(std::string_view s);
BindingStyle binding_style_from(std::string_view s);
TypeKind type_kind_from(std::string_view s);

}  // namespace wsdisco
