#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superlie/algebra_io.hpp"
#include "superlie/linalg.hpp"
#include "superlie/nlie.hpp"

namespace superlie::clifford {

/// Bitmask naming a monomial gamma_I: bit b set means element b+1 of
/// {1,...,n} lies in I. Mask 0 is the unit e.
using SubsetIndex = std::uint32_t;

inline constexpr std::size_t kMaxDim = 16;

/// sigma(I,J) = sum over j in J of #{i in I : i > j}.
unsigned sigma(SubsetIndex i_set, SubsetIndex j_set);

struct MonoProduct {
  int sign;          // (-1)^{sigma(I,J)}
  SubsetIndex mask;  // symmetric difference I xor J
};

/// gamma_I gamma_J = (-1)^{sigma(I,J)} gamma_{I xor J}.
MonoProduct mono_product(SubsetIndex i_set, SubsetIndex j_set);

/// f(I,J) = (-1)^{sigma(I,J)} (1 - (-1)^{|I cap J|}); values in {0, +-2}.
int f_coeff(SubsetIndex i_set, SubsetIndex j_set);

Parity mono_parity(SubsetIndex mask);

/// Sparse element of C_n in the monomial basis.
class CliffordElement {
 public:
  explicit CliffordElement(std::size_t n);
  static CliffordElement monomial(std::size_t n, SubsetIndex mask,
                                  GaussScalar coeff = GaussScalar(1));

  std::size_t dim() const { return n_; }
  const std::map<SubsetIndex, GaussScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussScalar coeff(SubsetIndex mask) const;
  void add_term(SubsetIndex mask, const GaussScalar& coeff);

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator*(const GaussScalar& c) const;
  bool operator==(const CliffordElement&) const = default;

 private:
  std::size_t n_;
  std::map<SubsetIndex, GaussScalar> terms_;
};

/// Superalgebra product, bilinear extension of mono_product.
CliffordElement mul(const CliffordElement& x, const CliffordElement& y);

/// Graded commutator, bilinear extension of [gamma_I, gamma_J] =
/// f(I,J) gamma_{I xor J}.
CliffordElement commutator(const CliffordElement& x, const CliffordElement& y);

/// Spinor supertrace: coefficient of gamma_{1..n} times (2i)^{n/2}.
/// Throws std::domain_error for odd n.
GaussScalar supertrace(const CliffordElement& x);

/// Trilinear extension of
///   [gI,gJ,gK] = Str(gI)[gJ,gK] - (-1)^{|I||J|} Str(gJ)[gI,gK]
///                + (-1)^{|K|(|I|+|J|)} Str(gK)[gI,gJ].
/// Throws std::domain_error for odd n.
CliffordElement ternary_bracket(const CliffordElement& x,
                                const CliffordElement& y,
                                const CliffordElement& z);

/// Closed form of the ternary table: zero unless exactly one argument is the
/// top monomial gamma_N, in which case (slot alternation by graded
/// skew-symmetry, |N| even)
///   [gN,gJ,gK] =  (2i)^m f(J,K) g_{J^K},
///   [gI,gN,gK] = -(2i)^m f(I,K) g_{I^K},
///   [gI,gJ,gN] =  (2i)^m f(I,J) g_{I^J}.
/// Only nonzero triples are stored. Throws std::domain_error for odd n.
std::map<std::array<SubsetIndex, 3>, CliffordElement> proposition_table(
    std::size_t n);

/// Monomials in export order: even |I| first, then odd, masks ascending
/// within each block. Names "e" for the unit, "g" + ascending indices
/// otherwise (e.g. "g12").
std::vector<SubsetIndex> export_basis(std::size_t n);
std::string mono_name(SubsetIndex mask);

/// The Lie superalgebra of C_n as a bracket table over the export basis;
/// n <= 6. Throws std::invalid_argument beyond the size guard.
AlgebraFile export_lie(std::size_t n);

/// The ternary table over the export basis, entries from ternary_bracket;
/// n even, n <= 4.
AlgebraFile export_ternary(std::size_t n);

/// Same shape as export_ternary but computed from the closed form.
AlgebraFile export_proposition(std::size_t n);

/// The supertrace as a functional on the export basis.
LinearFunctional str_functional(std::size_t n);

/// Exact spinor representation, n = 2m with m <= 5: gamma_{2j-1}, gamma_{2j}
/// act as sigma3-strings ending in sigma1/sigma2 at tensor slot j; a general
/// gamma_I is the ascending product of its generators.
Mat matrix_rep(std::size_t n, SubsetIndex mask);

/// Grading operator of the spinor supermodule: the m-fold tensor power of
/// sigma3. supertrace(x) equals trace(grading_matrix * matrix_rep(x)).
Mat grading_matrix(std::size_t n);

}  // namespace superlie::clifford
