#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "superlie/nlie.hpp"

namespace superlie::classify {

/// One structure-constant unknown K^target_{args}: args canonical and not
/// forced-zero, parity(target) equal to the parity sum of args.
struct SCVariable {
  IndexTuple args;
  std::size_t target = 0;

  auto operator<=>(const SCVariable&) const = default;
  /// "K[f1,f1,f1->f2]".
  std::string name(const std::vector<std::string>& names) const;
};

/// Exponent-sorted multiset of variable indices; degree <= 2 in generated
/// constraints.
using Monomial = std::vector<std::size_t>;

/// Sparse multivariate polynomial with exact coefficients.
class Poly {
 public:
  void add_term(Monomial mono, const GaussScalar& coeff);
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, GaussScalar>& terms() const { return terms_; }

  GaussScalar evaluate(std::span<const GaussScalar> assignment) const;

  bool operator==(const Poly&) const = default;
  bool operator<(const Poly& o) const { return terms_ < o.terms_; }

 private:
  std::map<Monomial, GaussScalar> terms_;
};

/// A constraint together with the Filippov instance that generated it.
struct TaggedConstraint {
  Poly poly;
  IndexTuple outer;        // the (arity-1)-tuple
  IndexTuple inner;        // the arity-tuple
  std::size_t target = 0;  // output index H
};

struct ConstraintSystem {
  BasisSignature sig;
  std::size_t arity = 0;
  std::vector<SCVariable> variables;
  std::vector<TaggedConstraint> constraints;
};

/// All canonical tuples surviving the forced-zero rule, crossed with the
/// grading-compatible targets; ordered by (args, target).
std::vector<SCVariable> admissible_variables(const BasisSignature& sig,
                                             std::size_t arity);

/// Expands the graded Filippov identity symbolically over every
/// non-decreasing outer/inner tuple pair and output index, recording the
/// quadratic residual polynomial. Identically-zero polynomials are dropped
/// and syntactic duplicates emitted once (first generating tuple wins).
ConstraintSystem generate_constraints(const BasisSignature& sig,
                                      std::size_t arity);

/// Exact residuals in constraint order.
std::vector<GaussScalar> evaluate(const ConstraintSystem& system,
                                  std::span<const GaussScalar> assignment);
/// Same, from a variable->value map; throws std::invalid_argument on a
/// missing variable.
std::vector<GaussScalar> evaluate(
    const ConstraintSystem& system,
    const std::map<SCVariable, GaussScalar>& assignment);

BracketTable table_from_assignment(const BasisSignature& sig, std::size_t arity,
                                   std::span<const SCVariable> variables,
                                   std::span<const GaussScalar> assignment);

/// Text export: header (signature, arity, variable order), then one
/// polynomial per line in sorted-monomial form with its generating tuple.
/// Stable across runs.
std::string serialize_constraints(const ConstraintSystem& system,
                                  const std::vector<std::string>& names);

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct GridOptions {
  std::size_t budget = 2'000'000;
  unsigned threads = 1;
};

/// All assignments over the grid whose residuals vanish, as verified bracket
/// tables in lexicographic assignment order. Throws BudgetError (with the
/// assignment count) when |grid|^#variables exceeds the budget. Workers
/// split the assignment space by prefix; the result is independent of the
/// thread count.
std::vector<BracketTable> grid_search(const BasisSignature& sig,
                                      std::size_t arity,
                                      std::span<const GaussScalar> grid,
                                      const GridOptions& options = {});

/// Basis-independent invariants; equality is necessary for isomorphism,
/// never sufficient.
struct Fingerprint {
  std::size_t derived1_dim = 0;
  std::size_t derived2_dim = 0;
  std::size_t central1_dim = 0;
  std::size_t central2_dim = 0;
  std::size_t derived1_even_dim = 0;
  std::size_t derived1_odd_dim = 0;
  bool solvable = false;
  bool nilpotent = false;

  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
};

Fingerprint fingerprint(const BracketTable& table);

}  // namespace superlie::classify
