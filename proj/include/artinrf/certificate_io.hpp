#pragma once

// JSON persistence for certificates. Field order is fixed, so serializing a
// parsed certificate reproduces the input byte for byte. Schema:
//
//   { "format": "artinrf-certificate", "version": 1, "root": NODE }
//
//   NODE    = { "kind": "base", "subject": SET, "tag": TAG, "detail": STR }
//           | { "kind": "free_product", "subject": SET, "children": [NODE...] }
//           | { "kind": "amalgam", "subject": SET, "x1": SET, "x2": SET, "x0": SET,
//               "w1": WITNESS, "w2": WITNESS, "children": [NODE, NODE] }
//   WITNESS = { "kind": "fold_to", "target": STR, "domain": SET }
//           | { "kind": "kill", "victims": SET, "domain": SET }
//   SET     = sorted array of vertex identifiers
//   TAG     = "SizeLeqTwo" | "RightAngled" | "SphericalType" | "EvenFC" | "UserAxiom"

#include <string>

#include <json.hpp>

#include "certificate.hpp"

namespace artinrf {

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson set_to_json(const VertexSet& s) {
  ojson a = ojson::array();
  for (const auto& v : s) a.push_back(v);
  return a;
}

inline ojson witness_to_json(const RetractionWitness& w) {
  ojson j;
  if (w.kind == RetractionWitness::Kind::FoldTo) {
    j["kind"] = "fold_to";
    j["target"] = w.target;
  } else {
    j["kind"] = "kill";
    j["victims"] = set_to_json(w.victims);
  }
  j["domain"] = set_to_json(w.domain);
  return j;
}

inline ojson node_to_json(const Certificate& c) {
  ojson j;
  j["kind"] = to_string(c.kind);
  j["subject"] = set_to_json(c.subject);
  switch (c.kind) {
    case NodeKind::Base:
      j["tag"] = to_string(c.tag.kind);
      j["detail"] = c.tag.detail;
      return j;
    case NodeKind::FreeProduct: break;
    case NodeKind::Amalgam:
      j["x1"] = set_to_json(c.x1);
      j["x2"] = set_to_json(c.x2);
      j["x0"] = set_to_json(c.x0);
      j["w1"] = witness_to_json(c.w1);
      j["w2"] = witness_to_json(c.w2);
      break;
  }
  ojson kids = ojson::array();
  for (const auto& ch : c.children) kids.push_back(node_to_json(ch));
  j["children"] = std::move(kids);
  return j;
}

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw CertificateFormatError("certificate schema: " + where + ": " + what);
}

inline const ojson& field(const ojson& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

inline std::string string_field(const ojson& j, const char* key, const std::string& where) {
  const ojson& v = field(j, key, where);
  if (!v.is_string()) schema_error(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline VertexSet set_field(const ojson& j, const char* key, const std::string& where) {
  const ojson& v = field(j, key, where);
  if (!v.is_array()) schema_error(where, std::string("field '") + key + "' must be an array");
  VertexSet out;
  for (const auto& e : v) {
    if (!e.is_string()) schema_error(where, std::string("field '") + key + "' must hold strings");
    if (!out.insert(e.get<std::string>()).second) schema_error(where, std::string("duplicate entry in '") + key + "'");
  }
  return out;
}

inline RetractionWitness witness_from_json(const ojson& j, const std::string& where) {
  std::string kind = string_field(j, "kind", where);
  if (kind == "fold_to") return RetractionWitness::fold_to(string_field(j, "target", where), set_field(j, "domain", where));
  if (kind == "kill") return RetractionWitness::kill(set_field(j, "victims", where), set_field(j, "domain", where));
  schema_error(where, "unknown witness kind '" + kind + "'");
}

inline Certificate node_from_json(const ojson& j, const std::string& where) {
  std::string kind = string_field(j, "kind", where);
  Certificate c;
  c.subject = set_field(j, "subject", where);
  auto children = [&]() {
    const ojson& arr = field(j, "children", where);
    if (!arr.is_array()) schema_error(where, "'children' must be an array");
    std::vector<Certificate> out;
    for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(node_from_json(arr[k], where + "." + std::to_string(k)));
    return out;
  };
  if (kind == "base") {
    c.kind = NodeKind::Base;
    auto tag = base_kind_from_string(string_field(j, "tag", where));
    if (!tag) schema_error(where, "unknown base tag");
    c.tag = {*tag, string_field(j, "detail", where)};
  } else if (kind == "free_product") {
    c.kind = NodeKind::FreeProduct;
    c.children = children();
  } else if (kind == "amalgam") {
    c.kind = NodeKind::Amalgam;
    c.x1 = set_field(j, "x1", where);
    c.x2 = set_field(j, "x2", where);
    c.x0 = set_field(j, "x0", where);
    c.w1 = witness_from_json(field(j, "w1", where), where + ".w1");
    c.w2 = witness_from_json(field(j, "w2", where), where + ".w2");
    c.children = children();
  } else {
    schema_error(where, "unknown node kind '" + kind + "'");
  }
  return c;
}

}  // namespace detail

inline constexpr const char* kCertificateFormat = "artinrf-certificate";
inline constexpr int kCertificateVersion = 1;

inline std::string serialize_certificate(const Certificate& c) {
  detail::ojson doc;
  doc["format"] = kCertificateFormat;
  doc["version"] = kCertificateVersion;
  doc["root"] = detail::node_to_json(c);
  return doc.dump(2) + "\n";
}

inline Certificate parse_certificate(std::string_view text) {
  detail::ojson doc;
  try {
    doc = detail::ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CertificateFormatError(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (detail::string_field(doc, "format", "document") != kCertificateFormat)
    detail::schema_error("document", "unexpected format tag");
  const auto& version = detail::field(doc, "version", "document");
  if (!version.is_number_integer() || version.get<int>() != kCertificateVersion)
    detail::schema_error("document", "unsupported version");
  return detail::node_from_json(detail::field(doc, "root", "document"), "root");
}

}  // namespace artinrf
