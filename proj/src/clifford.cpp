#include "superlie/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace superlie::clifford {

namespace {

SubsetIndex full_mask(std::size_t n) {
  return n == 0 ? 0u : static_cast<SubsetIndex>((1u << n) - 1u);
}

void check_dim(std::size_t n) {
  if (n > kMaxDim)
    throw std::invalid_argument("Clifford dimension " + std::to_string(n) +
                                " exceeds the supported " +
                                std::to_string(kMaxDim));
}

std::size_t require_even(std::size_t n) {
  if (n % 2 != 0)
    throw std::domain_error("the spinor supertrace needs an even number of "
                            "generators, got " + std::to_string(n));
  return n / 2;
}

GaussScalar str_mono(std::size_t n, SubsetIndex mask) {
  if (mask != full_mask(n)) return GaussScalar(0);
  return GaussScalar::pow_two_i(static_cast<unsigned>(n / 2));
}

}  // namespace

unsigned sigma(SubsetIndex i_set, SubsetIndex j_set) {
  unsigned total = 0;
  for (SubsetIndex rest = j_set; rest;) {
    const unsigned b = static_cast<unsigned>(std::countr_zero(rest));
    rest &= rest - 1;
    total += static_cast<unsigned>(std::popcount(i_set >> (b + 1)));
  }
  return total;
}

MonoProduct mono_product(SubsetIndex i_set, SubsetIndex j_set) {
  return {sigma(i_set, j_set) % 2 == 0 ? 1 : -1, i_set ^ j_set};
}

int f_coeff(SubsetIndex i_set, SubsetIndex j_set) {
  if (std::popcount(i_set & j_set) % 2 == 0) return 0;
  return sigma(i_set, j_set) % 2 == 0 ? 2 : -2;
}

Parity mono_parity(SubsetIndex mask) {
  return std::popcount(mask) % 2 == 0 ? Parity::even : Parity::odd;
}

CliffordElement::CliffordElement(std::size_t n) : n_(n) { check_dim(n); }

CliffordElement CliffordElement::monomial(std::size_t n, SubsetIndex mask,
                                          GaussScalar coeff) {
  CliffordElement out(n);
  out.add_term(mask, coeff);
  return out;
}

GaussScalar CliffordElement::coeff(SubsetIndex mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? GaussScalar(0) : it->second;
}

void CliffordElement::add_term(SubsetIndex mask, const GaussScalar& coeff) {
  if (mask > full_mask(n_))
    throw std::invalid_argument("monomial mask out of range");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("Clifford dimension mismatch");
  CliffordElement out = *this;
  for (const auto& [mask, c] : o.terms_) out.add_term(mask, c);
  return out;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("Clifford dimension mismatch");
  CliffordElement out = *this;
  for (const auto& [mask, c] : o.terms_) out.add_term(mask, -c);
  return out;
}

CliffordElement CliffordElement::operator*(const GaussScalar& c) const {
  CliffordElement out(n_);
  for (const auto& [mask, a] : terms_) out.add_term(mask, a * c);
  return out;
}

CliffordElement mul(const CliffordElement& x, const CliffordElement& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("Clifford dimension mismatch");
  CliffordElement out(x.dim());
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) {
      const MonoProduct p = mono_product(i, j);
      out.add_term(p.mask, p.sign < 0 ? -(a * b) : a * b);
    }
  return out;
}

CliffordElement commutator(const CliffordElement& x, const CliffordElement& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("Clifford dimension mismatch");
  CliffordElement out(x.dim());
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) {
      const int f = f_coeff(i, j);
      if (f == 0) continue;
      out.add_term(i ^ j, a * b * GaussScalar(f));
    }
  return out;
}

GaussScalar supertrace(const CliffordElement& x) {
  require_even(x.dim());
  GaussScalar out;
  for (const auto& [mask, c] : x.terms()) out += c * str_mono(x.dim(), mask);
  return out;
}

CliffordElement ternary_bracket(const CliffordElement& x,
                                const CliffordElement& y,
                                const CliffordElement& z) {
  if (x.dim() != y.dim() || x.dim() != z.dim())
    throw std::invalid_argument("Clifford dimension mismatch");
  const std::size_t n = x.dim();
  require_even(n);
  CliffordElement out(n);
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms())
      for (const auto& [k, c] : z.terms()) {
        const GaussScalar abc = a * b * c;
        const GaussScalar si = str_mono(n, i);
        if (!si.is_zero()) {
          const int f = f_coeff(j, k);
          if (f != 0) out.add_term(j ^ k, abc * si * GaussScalar(f));
        }
        const GaussScalar sj = str_mono(n, j);
        if (!sj.is_zero()) {
          const int f = f_coeff(i, k);
          if (f != 0) {
            const int sgn = -parity_sign(mono_parity(i), mono_parity(j));
            out.add_term(i ^ k, abc * sj * GaussScalar(sgn * f));
          }
        }
        const GaussScalar sk = str_mono(n, k);
        if (!sk.is_zero()) {
          const int f = f_coeff(i, j);
          if (f != 0) {
            const int sgn =
                parity_sign(mono_parity(k), mono_parity(i) + mono_parity(j));
            out.add_term(i ^ j, abc * sk * GaussScalar(sgn * f));
          }
        }
      }
  return out;
}

std::map<std::array<SubsetIndex, 3>, CliffordElement> proposition_table(
    std::size_t n) {
  check_dim(n);
  const std::size_t m = require_even(n);
  const SubsetIndex full = full_mask(n);
  const GaussScalar norm = GaussScalar::pow_two_i(static_cast<unsigned>(m));
  std::map<std::array<SubsetIndex, 3>, CliffordElement> out;
  auto put = [&](SubsetIndex a, SubsetIndex b, SubsetIndex c, int slot_sign,
                 SubsetIndex p, SubsetIndex q) {
    const int f = f_coeff(p, q);
    if (f == 0) return;
    out.emplace(std::array<SubsetIndex, 3>{a, b, c},
                CliffordElement::monomial(n, p ^ q,
                                          norm * GaussScalar(slot_sign * f)));
  };
  for (SubsetIndex i = 0; i <= full; ++i)
    for (SubsetIndex j = 0; j <= full; ++j) {
      if (i == full || j == full) continue;
      put(full, i, j, 1, i, j);    // top monomial in slot one
      put(i, full, j, -1, i, j);   // slot two; swap sign, |N| even
      put(i, j, full, 1, i, j);    // slot three: the printed branch
    }
  return out;
}

std::vector<SubsetIndex> export_basis(std::size_t n) {
  check_dim(n);
  std::vector<SubsetIndex> order;
  const SubsetIndex full = full_mask(n);
  for (SubsetIndex mask = 0;; ++mask) {
    if (mono_parity(mask) == Parity::even) order.push_back(mask);
    if (mask == full) break;
  }
  for (SubsetIndex mask = 0;; ++mask) {
    if (mono_parity(mask) == Parity::odd) order.push_back(mask);
    if (mask == full) break;
  }
  return order;
}

std::string mono_name(SubsetIndex mask) {
  if (mask == 0) return "e";
  std::string out = "g";
  for (unsigned b = 0; b < 32; ++b)
    if (mask & (1u << b)) out += std::to_string(b + 1);
  return out;
}

namespace {

struct ExportContext {
  std::vector<SubsetIndex> basis;
  std::vector<std::size_t> position;  // mask -> basis index
  BasisSignature sig;
  std::vector<std::string> names;
};

ExportContext make_context(std::size_t n) {
  ExportContext ctx;
  ctx.basis = export_basis(n);
  ctx.position.assign(std::size_t(1) << n, 0);
  std::size_t evens = 0;
  for (std::size_t k = 0; k < ctx.basis.size(); ++k) {
    ctx.position[ctx.basis[k]] = k;
    if (mono_parity(ctx.basis[k]) == Parity::even) ++evens;
    ctx.names.push_back(mono_name(ctx.basis[k]));
  }
  ctx.sig = {evens, ctx.basis.size() - evens};
  return ctx;
}

Vec element_coords(const ExportContext& ctx, const CliffordElement& x) {
  Vec out = zero_vec(ctx.basis.size());
  for (const auto& [mask, c] : x.terms()) out[ctx.position[mask]] = c;
  return out;
}

}  // namespace

AlgebraFile export_lie(std::size_t n) {
  if (n > 6)
    throw std::invalid_argument("export_lie supports n <= 6, got " +
                                std::to_string(n));
  ExportContext ctx = make_context(n);
  BracketTable table(2, ctx.sig);
  for (std::size_t p = 0; p < ctx.basis.size(); ++p)
    for (std::size_t q = p; q < ctx.basis.size(); ++q) {
      const int f = f_coeff(ctx.basis[p], ctx.basis[q]);
      if (f == 0) continue;
      Vec value = zero_vec(ctx.basis.size());
      value[ctx.position[ctx.basis[p] ^ ctx.basis[q]]] = GaussScalar(f);
      table.add_entry({p, q}, std::move(value));
    }
  return {std::move(table), std::move(ctx.names)};
}

namespace {

AlgebraFile export_arity3(std::size_t n, bool closed_form) {
  if (n > 4)
    throw std::invalid_argument("ternary export supports n <= 4, got " +
                                std::to_string(n));
  require_even(n);
  ExportContext ctx = make_context(n);
  const auto prop = closed_form
                        ? proposition_table(n)
                        : std::map<std::array<SubsetIndex, 3>, CliffordElement>{};
  BracketTable table(3, ctx.sig);
  for (const IndexTuple& t : nondecreasing_tuples(ctx.basis.size(), 3)) {
    if (canonical_order(t, ctx.sig).forced_zero) continue;
    CliffordElement value(n);
    if (closed_form) {
      auto it = prop.find({ctx.basis[t[0]], ctx.basis[t[1]], ctx.basis[t[2]]});
      if (it != prop.end()) value = it->second;
    } else {
      value = ternary_bracket(CliffordElement::monomial(n, ctx.basis[t[0]]),
                              CliffordElement::monomial(n, ctx.basis[t[1]]),
                              CliffordElement::monomial(n, ctx.basis[t[2]]));
    }
    if (value.is_zero()) continue;
    table.add_entry(t, element_coords(ctx, value));
  }
  return {std::move(table), std::move(ctx.names)};
}

}  // namespace

AlgebraFile export_ternary(std::size_t n) { return export_arity3(n, false); }

AlgebraFile export_proposition(std::size_t n) { return export_arity3(n, true); }

LinearFunctional str_functional(std::size_t n) {
  require_even(n);
  ExportContext ctx = make_context(n);
  Vec coeffs = zero_vec(ctx.basis.size());
  coeffs[ctx.position[full_mask(n)]] =
      GaussScalar::pow_two_i(static_cast<unsigned>(n / 2));
  return LinearFunctional(std::move(coeffs));
}

namespace {

Mat pauli(int which) {
  const GaussScalar one(1), im = GaussScalar::i();
  switch (which) {
    case 1: return {{GaussScalar(0), one}, {one, GaussScalar(0)}};
    case 2: return {{GaussScalar(0), -im}, {im, GaussScalar(0)}};
    default: return {{one, GaussScalar(0)}, {GaussScalar(0), -one}};
  }
}

Mat generator_matrix(std::size_t m, unsigned gen_index_1based) {
  const std::size_t slot = (gen_index_1based + 1) / 2;  // 1-based tensor slot
  Mat out = {{GaussScalar(1)}};
  for (std::size_t f = 1; f <= m; ++f) {
    if (f < slot)
      out = kronecker(out, pauli(3));
    else if (f == slot)
      out = kronecker(out, pauli(gen_index_1based % 2 == 1 ? 1 : 2));
    else
      out = kronecker(out, identity_mat(2));
  }
  return out;
}

}  // namespace

Mat matrix_rep(std::size_t n, SubsetIndex mask) {
  const std::size_t m = require_even(n);
  if (m > 5)
    throw std::invalid_argument("matrix_rep supports n <= 10, got " +
                                std::to_string(n));
  if (mask > full_mask(n)) throw std::invalid_argument("monomial mask out of range");
  Mat out = identity_mat(std::size_t(1) << m);
  for (unsigned b = 0; b < n; ++b)
    if (mask & (1u << b)) out = mat_mul(out, generator_matrix(m, b + 1));
  return out;
}

Mat grading_matrix(std::size_t n) {
  const std::size_t m = require_even(n);
  if (m > 5)
    throw std::invalid_argument("grading_matrix supports n <= 10, got " +
                                std::to_string(n));
  Mat out = {{GaussScalar(1)}};
  for (std::size_t f = 0; f < m; ++f) out = kronecker(out, pauli(3));
  return out;
}

}  // namespace superlie::clifford
