#pragma once

#include <stdexcept>
#include <string>

namespace og {

// every failure thrown by this library derives from Error, so callers can
// distinguish our diagnostics from std exceptions
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// objects that should compose do not share a boundary (feet, dom/cod, spans)
class BoundaryError : public Error {
public:
  using Error::Error;
};

// a document or raw graph is structurally malformed
class SchemaError : public Error {
public:
  using Error::Error;
};

// a structurally well formed value violates a semantic invariant
// (non-total map, non-commuting square, non-monic leg, non-iso span leg)
class InvariantError : public Error {
public:
  using Error::Error;
};

// a search or enumeration exceeded its explicit budget; distinct from "none found"
class BudgetError : public Error {
public:
  using Error::Error;
};

// a rewrite step cannot be performed at the given match
class RewriteError : public Error {
public:
  using Error::Error;
};

// deleting the matched part would leave an edge without an endpoint
class DanglingError : public RewriteError {
public:
  using RewriteError::RewriteError;
};

// an internal invariant the implementation relies on failed; indicates a bug
// (or an injected fault, see og::fault)
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace og
