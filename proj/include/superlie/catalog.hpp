#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superlie/algebra_io.hpp"
#include "superlie/linalg.hpp"

namespace superlie::catalog {

enum class ExpectedStatus { pass, as_printed_unverified };

/// A built-in algebra stored in the file format exactly as the source table
/// prints it; suspect entries are kept verbatim and judged by the parser and
/// the axiom checker, never patched.
struct CatalogEntry {
  std::string name;
  std::string provenance;
  ExpectedStatus expected_status = ExpectedStatus::pass;
  std::string json_text;
  std::string note;  // e.g. an explicit isomorphism witness

  /// Parses and canonicalizes; throws ParseError for entries the forced-zero
  /// rule rejects (T5b).
  AlgebraFile parse() const { return parse_algebra(json_text); }
};

/// Known names: abelian(m,n), T4a, T4b, T5a, T5b, T5c, clifford_lie(n),
/// clifford_ternary(n). Throws std::invalid_argument otherwise.
CatalogEntry get_entry(const std::string& name);

/// The roster verify_catalog and `catalog list` run over.
std::vector<std::string> catalog_names();

enum class VerdictKind { passed, failed, rejected };

struct CatalogVerdict {
  std::string name;
  VerdictKind kind = VerdictKind::passed;
  std::string detail;
};

/// Runs the axiom checker on every roster entry; parse rejections are
/// recorded, not patched.
std::vector<CatalogVerdict> verify_catalog();

/// Change-of-basis blocks mapping T4a onto T4b: F1 = f1 + f2,
/// F2 = 8(f2 - f1).
std::pair<Mat, Mat> t4a_to_t4b_blocks();

}  // namespace superlie::catalog
