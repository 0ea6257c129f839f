#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "superlie/nlie.hpp"

namespace superlie {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bracket table together with its basis element names (even names first,
/// matching the signature).
struct AlgebraFile {
  BracketTable table;
  std::vector<std::string> names;
};

/// e1..em, f1..fn.
std::vector<std::string> standard_names(const BasisSignature& sig);

/// Canonical UTF-8 text of the algebra file format:
///   {"arity": n, "even": [...], "odd": [...],
///    "brackets": [{"args": [...], "value": {name: scalar, ...}}, ...]}
/// with scalars as {"re": "p/q", "im": "p/q"} ("/q" omitted when q = 1).
/// Output is byte-identical for equal inputs.
std::string serialize_algebra(const BracketTable& table,
                              const std::vector<std::string>& names);

/// Parses and canonicalizes. Rejects unknown fields, duplicate or unknown
/// names, ungraded values, forced-zero keys with nonzero value, and
/// duplicate keys (after canonicalization). Throws ParseError.
AlgebraFile parse_algebra(const std::string& text);

/// {"coeffs": {name: scalar, ...}}; names omitted from the map are zero.
std::string serialize_functional(const LinearFunctional& s,
                                 const std::vector<std::string>& names);
LinearFunctional parse_functional(const std::string& text,
                                  const std::vector<std::string>& names);

}  // namespace superlie
