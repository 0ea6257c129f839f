#include "superlie/superspace.hpp"

#include <stdexcept>
#include <utility>

namespace superlie {

Parity BasisSignature::parity_of(std::size_t idx) const {
  if (idx >= dim())
    throw std::out_of_range("basis index " + std::to_string(idx) +
                            " out of range for dimension " +
                            std::to_string(dim()));
  return idx < even_count ? Parity::even : Parity::odd;
}

std::vector<Parity> BasisSignature::parities_of(
    std::span<const std::size_t> tuple) const {
  std::vector<Parity> out;
  out.reserve(tuple.size());
  for (std::size_t idx : tuple) out.push_back(parity_of(idx));
  return out;
}

Parity prefix_parity(std::span<const Parity> parities, std::size_t count) {
  Parity acc = Parity::even;
  for (std::size_t k = 0; k < count; ++k) acc = acc + parities[k];
  return acc;
}

CanonicalForm canonical_order(IndexTuple tuple, const BasisSignature& sig) {
  CanonicalForm out;
  std::vector<Parity> parities = sig.parities_of(tuple);
  // Bubble sort; the sign is defined per adjacent swap, and arities stay
  // tiny, so quadratic cost is irrelevant.
  const std::size_t len = tuple.size();
  for (std::size_t pass = 0; pass + 1 < len; ++pass) {
    for (std::size_t k = 0; k + 1 < len - pass; ++k) {
      if (tuple[k] > tuple[k + 1]) {
        out.sign *= -parity_sign(parities[k], parities[k + 1]);
        std::swap(tuple[k], tuple[k + 1]);
        std::swap(parities[k], parities[k + 1]);
      }
    }
  }
  // A repeated even index makes the bracket equal its own negative.
  for (std::size_t k = 0; k + 1 < len; ++k) {
    if (tuple[k] == tuple[k + 1] && parities[k] == Parity::even) {
      out.forced_zero = true;
      break;
    }
  }
  out.tuple = std::move(tuple);
  return out;
}

std::vector<IndexTuple> nondecreasing_tuples(std::size_t dim, std::size_t len) {
  std::vector<IndexTuple> out;
  if (dim == 0) return out;  // no tuples of positive length over an empty basis
  if (len == 0) {
    out.push_back({});
    return out;
  }
  IndexTuple t(len, 0);
  while (true) {
    out.push_back(t);
    std::size_t k = len;
    while (k > 0 && t[k - 1] == dim - 1) --k;
    if (k == 0) break;
    const std::size_t v = t[k - 1] + 1;
    for (std::size_t j = k - 1; j < len; ++j) t[j] = v;
  }
  return out;
}

}  // namespace superlie
