#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "superlie/linalg.hpp"
#include "superlie/scalar.hpp"
#include "superlie/superspace.hpp"

namespace superlie {

/// Coefficients of a linear map g -> C; candidate supertrace.
class LinearFunctional {
 public:
  LinearFunctional() = default;
  explicit LinearFunctional(Vec coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t dim() const { return coeffs_.size(); }
  const Vec& coeffs() const { return coeffs_; }
  const GaussScalar& coeff(std::size_t idx) const { return coeffs_.at(idx); }
  bool is_zero() const { return is_zero_vec(coeffs_); }

  GaussScalar operator()(const Vec& v) const;

  bool operator==(const LinearFunctional&) const = default;

 private:
  Vec coeffs_;
};

struct AxiomViolation {
  IndexTuple args;
  std::string detail;
};

struct FilippovWitness {
  IndexTuple outer;  // the (n-1)-tuple y
  IndexTuple inner;  // the n-tuple x
  Vec residual;      // sum side minus nested side, in basis coordinates
};

struct AxiomReport {
  bool grading_ok = true;
  bool skew_ok = true;
  bool filippov_ok = true;
  std::vector<AxiomViolation> grading_witnesses;
  std::vector<AxiomViolation> storage_witnesses;
  std::vector<FilippovWitness> filippov_witnesses;

  bool all_ok() const { return grading_ok && skew_ok && filippov_ok; }
};

struct SupertraceCheck {
  bool ok = true;
  std::string witness;  // empty when ok
};

/// An n-ary superalgebra presented by structure constants: a sparse map from
/// canonical (non-decreasing, not forced-zero) basis tuples to coefficient
/// vectors. Absent keys mean zero; graded skew-symmetry is enforced by the
/// canonical storage, not checked per lookup.
class BracketTable {
 public:
  using EntryMap = std::map<IndexTuple, Vec>;

  BracketTable(std::size_t arity, BasisSignature sig);

  std::size_t arity() const { return arity_; }
  const BasisSignature& sig() const { return sig_; }
  std::size_t dim() const { return sig_.dim(); }
  const EntryMap& entries() const { return entries_; }

  /// Canonicalizes args (applying the graded sign to the value), then stores.
  /// Throws std::invalid_argument on a forced-zero tuple with nonzero value,
  /// an ungraded value, or a duplicate canonical key. Zero values are
  /// dropped silently.
  void add_entry(IndexTuple args, Vec value);

  /// Raw storage with no canonicalization or checks; lets tests and
  /// diagnostics build tables that verify_axioms should reject.
  void set_raw(IndexTuple args, Vec value);

  /// Bracket of basis elements in any order: canonical sign times the stored
  /// entry; forced-zero tuples and absent keys yield the zero vector.
  Vec bracket_basis(const IndexTuple& args) const;

  /// Full multilinear expansion; vectors.size() must equal arity and each
  /// vector must have length dim().
  Vec bracket(std::span<const Vec> vectors) const;

  /// Checks the three defining conditions. The Filippov identity is
  /// evaluated over non-decreasing basis tuples only (both sides transform
  /// by the same graded sign under reordering within either block). Workers
  /// split the outer-tuple space when threads > 1; the report is identical
  /// for every thread count.
  AxiomReport verify_axioms(unsigned threads = 1) const;

  SupertraceCheck is_supertrace(const LinearFunctional& s) const;

  /// The induced (arity+1)-bracket
  ///   [x_1,...,x_{n+1}]_S = sum_i (-1)^{i-1} (-1)^{|x_i||x|_{i-1}} S(x_i)
  ///                         [x_1,...,^x_i,...,x_{n+1}].
  /// Throws std::invalid_argument carrying the witness when s is not a
  /// supertrace of this table.
  BracketTable induce(const LinearFunctional& s) const;

  /// Structure constants of the basis given by the columns of the blocks
  /// (parity-preserving change of basis). Throws on a singular block.
  BracketTable change_of_basis(const Mat& p_even, const Mat& p_odd) const;

  bool operator==(const BracketTable&) const = default;

 private:
  std::size_t arity_;
  BasisSignature sig_;
  EntryMap entries_;

  void check_vec_size(const Vec& v) const;
};

/// Basis of the space of supertraces of T: the linear conditions "vanishes
/// on every stored bracket value and on the odd basis" solved by row
/// reduction. Deterministic basis (unit free variables of the RREF).
std::vector<LinearFunctional> supertrace_space(const BracketTable& table);

/// Subspace of coordinate space, held in reduced row echelon form so that
/// the representation of a given span is unique.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace whole(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, std::span<const Vec> generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
};

/// Span of brackets of all tuples of generators, one from each part.
Subspace subspace_bracket(const BracketTable& table,
                          std::span<const Subspace> parts);

bool is_subalgebra(const BracketTable& table, const Subspace& h);
bool is_ideal(const BracketTable& table, const Subspace& h);

enum class SeriesKind { derived, central };

struct SeriesResult {
  std::vector<Subspace> terms;  // terms[0] = h, then successive brackets
  bool reaches_zero = false;    // solvable (derived) / nilpotent (central)
};

/// D^{p+1} = [D^p,...,D^p] or C^{p+1} = [C^p, h,...,h], iterated until the
/// subspace repeats or vanishes. Throws std::invalid_argument when h is not
/// an ideal.
SeriesResult series(const BracketTable& table, const Subspace& h, SeriesKind kind);

bool is_solvable(const BracketTable& table, const Subspace& h);
bool is_nilpotent(const BracketTable& table, const Subspace& h);

}  // namespace superlie
