#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include <og/rewrite.hpp>

namespace og {

inline constexpr int k_format_version = 1;

using DocumentPayload =
    std::variant<Graph, GraphMorphism, Cospan, VerticalSpan, TwoCell, OpenGraphRule>;

// A typed value together with the schema version it travels under.
struct Document {
    int format_version = k_format_version;
    DocumentPayload payload;

    friend bool operator==(const Document&, const Document&) = default;
};

// one of: graph, morphism, cospan, vertical_span, two_cell, rule
std::string document_kind(const Document& d);

// Renumbers every constituent graph to ids 0..n-1 in sorted order and remaps
// all morphisms accordingly. Idempotent.
Document canonical_document(const Document& d);

// Layout without renumbering: {"format_version":…,"kind":…,"payload":…}.
nlohmann::json to_json(const Document& d);

// Canonical bytes: renumbered, keys sorted, compact, newline-terminated.
std::string serialize(const Document& d);

// Full validation at parse time. Malformed JSON and shape violations raise
// SchemaError with the offending field; value-level violations (non-monic
// cell maps, mismatched boundaries) surface as InvariantError.
Document parse(const std::string& bytes);

}  // namespace og
