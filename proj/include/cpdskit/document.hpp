#pragma once

#include <string>
#include <string_view>

#include "cpdskit/cpds.hpp"

namespace cpdskit {

inline constexpr int kDocumentSchemaVersion = 1;

// JSON rendering of a CPDS. Polynomials are canonical strings; segments are
// sorted by the printed zero ideals of their cells so output is diffable.
std::string emit_document(const Cpds& cpds, int indent = 2);

// Reads a document produced by emit_document. The ring declared in the
// document must have the names and roles of ring. Throws ParseError on
// malformed JSON or polynomials and PreconditionError on schema mismatch.
Cpds parse_document(std::string_view text, const RingPtr& ring);

// Segments in document order.
Cpds canonical_order(const Cpds& cpds);

}  // namespace cpdskit
