#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace superlie {

/// Z2 degree of a homogeneous element.
enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned char>(a) ^
                             static_cast<unsigned char>(b));
}

/// (-1)^{|a||b|}: -1 exactly when both arguments are odd.
inline int parity_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

using IndexTuple = std::vector<std::size_t>;

/// Dimension split m|n of a super vector space. Basis indices 0..m-1 are
/// even, m..m+n-1 odd; every table and file format uses this order.
struct BasisSignature {
  std::size_t even_count = 0;
  std::size_t odd_count = 0;

  std::size_t dim() const { return even_count + odd_count; }

  /// Throws std::out_of_range for idx >= dim().
  Parity parity_of(std::size_t idx) const;

  std::vector<Parity> parities_of(std::span<const std::size_t> tuple) const;

  bool operator==(const BasisSignature&) const = default;
};

/// Mod-2 sum of the first `count` parities; count = 0 gives even.
Parity prefix_parity(std::span<const Parity> parities, std::size_t count);

/// Result of reordering a basis tuple into non-decreasing order by graded
/// skew-symmetry. forced_zero marks tuples whose bracket must vanish
/// (a repeated index of even parity).
struct CanonicalForm {
  IndexTuple tuple;
  int sign = 1;
  bool forced_zero = false;
};

/// Sorts by adjacent transpositions, each swap of neighbors a,b contributing
/// the factor -(-1)^{|a||b|}. Equal entries are never swapped.
CanonicalForm canonical_order(IndexTuple tuple, const BasisSignature& sig);

/// All non-decreasing tuples of the given length over {0,...,dim-1}, in
/// lexicographic order.
std::vector<IndexTuple> nondecreasing_tuples(std::size_t dim, std::size_t len);

}  // namespace superlie
