#include "superlie/nlie.hpp"

namespace superlie {

namespace {

std::size_t leading_col(const Vec& row) {
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!row[c].is_zero()) return c;
  return row.size();
}

// Reduces v against RREF rows in place; v ends zero iff it lies in the span.
void reduce_against(Vec& v, const std::vector<Vec>& rows) {
  for (const Vec& row : rows) {
    const std::size_t p = leading_col(row);
    if (p == row.size() || v[p].is_zero()) continue;
    add_scaled(v, row, -v[p]);
  }
}

}  // namespace

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace out(ambient_dim);
  out.rows_ = identity_mat(ambient_dim);
  return out;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vec> generators) {
  Subspace out(ambient_dim);
  Mat rows;
  for (const Vec& g : generators) {
    if (g.size() != ambient_dim)
      throw std::invalid_argument("subspace generator has wrong dimension");
    if (!is_zero_vec(g)) rows.push_back(g);
  }
  rref(rows);
  out.rows_ = std::move(rows);
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("membership test with wrong dimension");
  Vec r = v;
  reduce_against(r, rows_);
  return is_zero_vec(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("containment test across different ambient spaces");
  for (const Vec& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

Subspace subspace_bracket(const BracketTable& table,
                          std::span<const Subspace> parts) {
  const std::size_t n = table.arity();
  if (parts.size() != n)
    throw std::invalid_argument("subspace_bracket needs one part per bracket slot");
  for (const Subspace& p : parts)
    if (p.ambient_dim() != table.dim())
      throw std::invalid_argument("subspace_bracket: ambient dimension mismatch");

  std::vector<Vec> values;
  std::vector<std::size_t> pos(n, 0);
  for (const Subspace& p : parts)
    if (p.dim() == 0) return Subspace::zero(table.dim());

  std::vector<Vec> args(n);
  while (true) {
    for (std::size_t k = 0; k < n; ++k) args[k] = parts[k].basis()[pos[k]];
    Vec v = table.bracket(args);
    if (!is_zero_vec(v)) values.push_back(std::move(v));
    std::size_t k = n;
    while (k > 0 && pos[k - 1] + 1 == parts[k - 1].dim()) pos[--k] = 0;
    if (k == 0) break;
    ++pos[k - 1];
  }
  return Subspace::span(table.dim(), values);
}

bool is_subalgebra(const BracketTable& table, const Subspace& h) {
  std::vector<Subspace> parts(table.arity(), h);
  return h.contains(subspace_bracket(table, parts));
}

bool is_ideal(const BracketTable& table, const Subspace& h) {
  if (h.ambient_dim() != table.dim())
    throw std::invalid_argument("is_ideal: ambient dimension mismatch");
  const std::size_t n = table.arity();
  // [h, x_1, ..., x_{n-1}] with basis arguments suffices by multilinearity,
  // and reordering only changes the sign, so non-decreasing tuples do.
  const auto rest = nondecreasing_tuples(table.dim(), n - 1);
  std::vector<Vec> args(n);
  for (const Vec& g : h.basis()) {
    args[0] = g;
    for (const IndexTuple& t : rest) {
      for (std::size_t k = 0; k + 1 < n; ++k) {
        args[k + 1] = zero_vec(table.dim());
        args[k + 1][t[k]] = GaussScalar(1);
      }
      if (!h.contains(table.bracket(args))) return false;
    }
  }
  return true;
}

SeriesResult series(const BracketTable& table, const Subspace& h, SeriesKind kind) {
  if (!is_ideal(table, h))
    throw std::invalid_argument("series requires an ideal");
  SeriesResult out;
  out.terms.push_back(h);
  while (true) {
    const Subspace& cur = out.terms.back();
    if (cur.dim() == 0) {
      out.reaches_zero = true;
      break;
    }
    std::vector<Subspace> parts(table.arity(), kind == SeriesKind::derived ? cur : h);
    parts[0] = cur;
    Subspace next = subspace_bracket(table, parts);
    if (next == cur) break;  // stabilized above zero
    out.terms.push_back(std::move(next));
    if (out.terms.size() > table.dim() + 2)
      throw std::logic_error("series failed to stabilize");
  }
  return out;
}

bool is_solvable(const BracketTable& table, const Subspace& h) {
  return series(table, h, SeriesKind::derived).reaches_zero;
}

bool is_nilpotent(const BracketTable& table, const Subspace& h) {
  return series(table, h, SeriesKind::central).reaches_zero;
}

}  // namespace superlie
