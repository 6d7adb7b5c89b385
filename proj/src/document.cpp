#include "cpdskit/document.hpp"

#include <algorithm>

#include <json.hpp>

#include "cpdskit/errors.hpp"
#include "cpdskit/problem.hpp"
#include "cpdskit/text.hpp"

namespace cpdskit {

namespace {

using json = nlohmann::ordered_json;

json basis_strings(const Ideal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.groebner().elements) out.push_back(g.to_string());
  return out;
}

json strings(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

std::string sort_key(const Segment& s) {
  std::string key;
  for (const auto& cell : s.cell.cells()) key += cell.zero().to_string() + ";";
  return key;
}

json ring_json(const RingPtr& ring) {
  json params = json::array();
  json vars = json::array();
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (ring->role(i) == VarRole::parameter) params.push_back(ring->name(i));
    if (ring->role(i) == VarRole::variable) vars.push_back(ring->name(i));
  }
  BlockKind kind = BlockKind::lex;
  for (const auto& block : ring->order().blocks()) {
    if (!block.vars.empty() && ring->role(block.vars.front()) == VarRole::variable) {
      kind = block.kind;
    }
  }
  return {{"params", params}, {"vars", vars}, {"order", to_string(kind)}};
}

[[noreturn]] void schema_error(const std::string& what) {
  throw PreconditionError("document schema: " + what);
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    schema_error(std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

std::string text_of(const json& value) {
  if (!value.is_string()) schema_error("expected a string");
  return value.get<std::string>();
}

std::vector<Polynomial> polys_of(const json& value, const RingPtr& ring) {
  if (!value.is_array()) schema_error("expected an array of polynomials");
  std::vector<Polynomial> out;
  for (const auto& p : value) out.push_back(parse_polynomial(text_of(p), ring));
  return out;
}

}  // namespace

Cpds canonical_order(const Cpds& cpds) {
  Cpds out = cpds;
  std::stable_sort(out.segments.begin(), out.segments.end(),
                   [](const Segment& a, const Segment& b) {
                     std::string ka = sort_key(a);
                     std::string kb = sort_key(b);
                     if (ka != kb) return ka < kb;
                     return a.to_string() < b.to_string();
                   });
  return out;
}

std::string emit_document(const Cpds& in, int indent) {
  Cpds cpds = canonical_order(in);
  json doc;
  doc["schema_version"] = kDocumentSchemaVersion;
  if (cpds.source.ring()) {
    doc["ring"] = ring_json(cpds.source.ring());
    doc["source"] = strings(cpds.source.generators());
  }
  doc["flavor"] = to_string(cpds.flavor);
  json segments = json::array();
  for (const auto& s : cpds.segments) {
    json cells = json::array();
    for (const auto& c : s.cell.cells()) {
      cells.push_back({{"zero", basis_strings(c.zero())},
                       {"nonzero", basis_strings(c.nonzero())}});
    }
    json components = json::array();
    for (const auto& q : s.components) components.push_back(basis_strings(q));
    json hilbert = json::array();
    for (const auto& h : s.hilbert) {
      hilbert.push_back({{"component", h.component},
                         {"mis", h.mis},
                         {"t", h.t},
                         {"element", h.element.to_string()},
                         {"minpoly", h.minpoly.to_string()}});
    }
    segments.push_back({{"cell", {{"cells", cells}}},
                        {"components", components},
                        {"hilbert", hilbert}});
  }
  doc["segments"] = segments;
  return doc.dump(indent) + "\n";
}

Cpds parse_document(std::string_view text, const RingPtr& ring) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 1, e.byte);
  }
  const json& version = field(doc, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kDocumentSchemaVersion) {
    schema_error("unsupported schema_version");
  }
  if (doc.contains("ring")) {
    const json& declared = doc.at("ring");
    json expected = ring_json(ring);
    if (!declared.is_object() || declared.value("params", json()) != expected["params"] ||
        declared.value("vars", json()) != expected["vars"]) {
      schema_error("ring of the document differs from the problem ring");
    }
  }
  Cpds cpds;
  cpds.source = Ideal(ring, doc.contains("source") ? polys_of(doc.at("source"), ring)
                                                   : std::vector<Polynomial>{});
  auto flavor = parse_flavor(text_of(field(doc, "flavor")));
  if (!flavor) schema_error("unknown flavor");
  cpds.flavor = *flavor;
  RingPtr params = ring->parameter_ring();
  const json& segments = field(doc, "segments");
  if (!segments.is_array()) schema_error("segments must be an array");
  for (const auto& s : segments) {
    Segment seg;
    seg.cell = ConstructibleSet(params);
    const json& cells = field(field(s, "cell"), "cells");
    if (!cells.is_array()) schema_error("cells must be an array");
    for (const auto& c : cells) {
      seg.cell.add(LocallyClosedSet(Ideal(params, polys_of(field(c, "zero"), params)),
                                    Ideal(params, polys_of(field(c, "nonzero"), params))));
    }
    const json& components = field(s, "components");
    if (!components.is_array()) schema_error("components must be an array");
    for (const auto& q : components) seg.components.emplace_back(ring, polys_of(q, ring));
    if (s.contains("hilbert")) {
      for (const auto& h : s.at("hilbert")) {
        HilbertCertificate cert;
        const json& index = field(h, "component");
        if (!index.is_number_unsigned() ||
            index.get<std::size_t>() >= seg.components.size()) {
          schema_error("certificate names a missing component");
        }
        cert.component = index.get<std::size_t>();
        const json& mis = field(h, "mis");
        if (!mis.is_array()) schema_error("mis must be an array");
        for (const auto& u : mis) {
          std::string name = text_of(u);
          auto idx = ring->index_of(name);
          if (!idx || ring->role(*idx) != VarRole::variable) {
            schema_error("mis names an unknown variable '" + name + "'");
          }
          cert.mis.push_back(name);
        }
        cert.t = text_of(field(h, "t"));
        if (ring->index_of(cert.t)) schema_error("certificate variable clashes with the ring");
        cert.element = parse_polynomial(text_of(field(h, "element")), ring);
        cert.minpoly = parse_polynomial(text_of(field(h, "minpoly")),
                                        certificate_ring(ring, cert.t));
        seg.hilbert.push_back(std::move(cert));
      }
    }
    cpds.segments.push_back(std::move(seg));
  }
  return cpds;
}

}  // namespace cpdskit
