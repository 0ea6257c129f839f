#include "superlie/nlie.hpp"

#include <algorithm>
#include <thread>

namespace superlie {

namespace {

std::string tuple_str(const IndexTuple& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(t[k]);
  }
  return out + ")";
}

}  // namespace

GaussScalar LinearFunctional::operator()(const Vec& v) const {
  if (v.size() != coeffs_.size())
    throw std::invalid_argument("functional applied to vector of wrong dimension");
  GaussScalar out;
  for (std::size_t k = 0; k < v.size(); ++k) out += coeffs_[k] * v[k];
  return out;
}

BracketTable::BracketTable(std::size_t arity, BasisSignature sig)
    : arity_(arity), sig_(sig) {
  if (arity_ < 2) throw std::invalid_argument("bracket arity must be at least 2");
}

void BracketTable::check_vec_size(const Vec& v) const {
  if (v.size() != dim())
    throw std::invalid_argument("coefficient vector has length " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(dim()));
}

void BracketTable::add_entry(IndexTuple args, Vec value) {
  if (args.size() != arity_)
    throw std::invalid_argument("bracket key has length " +
                                std::to_string(args.size()) + ", expected " +
                                std::to_string(arity_));
  check_vec_size(value);
  CanonicalForm cf = canonical_order(std::move(args), sig_);
  if (cf.forced_zero) {
    if (!is_zero_vec(value))
      throw std::invalid_argument("bracket " + tuple_str(cf.tuple) +
                                  " is forced to zero by graded skew-symmetry "
                                  "but has a nonzero value");
    return;
  }
  if (cf.sign < 0)
    value = scaled(value, GaussScalar(-1));
  if (is_zero_vec(value)) return;
  const std::vector<Parity> ps = sig_.parities_of(cf.tuple);
  const Parity total = prefix_parity(ps, ps.size());
  for (std::size_t b = 0; b < value.size(); ++b)
    if (!value[b].is_zero() && sig_.parity_of(b) != total)
      throw std::invalid_argument("bracket " + tuple_str(cf.tuple) +
                                  " has an ungraded value (coordinate " +
                                  std::to_string(b) + ")");
  auto [it, inserted] = entries_.emplace(std::move(cf.tuple), std::move(value));
  if (!inserted)
    throw std::invalid_argument("duplicate bracket key " + tuple_str(it->first));
}

void BracketTable::set_raw(IndexTuple args, Vec value) {
  entries_[std::move(args)] = std::move(value);
}

Vec BracketTable::bracket_basis(const IndexTuple& args) const {
  CanonicalForm cf = canonical_order(args, sig_);
  if (cf.forced_zero) return zero_vec(dim());
  auto it = entries_.find(cf.tuple);
  if (it == entries_.end()) return zero_vec(dim());
  return cf.sign < 0 ? scaled(it->second, GaussScalar(-1)) : it->second;
}

Vec BracketTable::bracket(std::span<const Vec> vectors) const {
  if (vectors.size() != arity_)
    throw std::invalid_argument("bracket applied to " +
                                std::to_string(vectors.size()) +
                                " arguments, expected " + std::to_string(arity_));
  std::vector<std::vector<std::size_t>> support(arity_);
  for (std::size_t k = 0; k < arity_; ++k) {
    check_vec_size(vectors[k]);
    for (std::size_t b = 0; b < dim(); ++b)
      if (!vectors[k][b].is_zero()) support[k].push_back(b);
    if (support[k].empty()) return zero_vec(dim());
  }
  Vec out = zero_vec(dim());
  IndexTuple tuple(arity_);
  std::vector<std::size_t> pos(arity_, 0);
  while (true) {
    GaussScalar coeff(1);
    for (std::size_t k = 0; k < arity_; ++k) {
      tuple[k] = support[k][pos[k]];
      coeff *= vectors[k][tuple[k]];
    }
    add_scaled(out, bracket_basis(tuple), coeff);
    std::size_t k = arity_;
    while (k > 0 && pos[k - 1] + 1 == support[k - 1].size()) pos[--k] = 0;
    if (k == 0) break;
    ++pos[k - 1];
  }
  return out;
}

namespace {

// Residual of one graded Filippov instance: the alternating sum side minus
// the nested side, both expanded through the table.
Vec filippov_residual(const BracketTable& t, const IndexTuple& y,
                      const IndexTuple& x) {
  const std::size_t d = t.dim();
  const std::size_t n = t.arity();
  const std::vector<Parity> xp = t.sig().parities_of(x);
  const std::vector<Parity> yp = t.sig().parities_of(y);
  const Parity y_total = prefix_parity(yp, yp.size());

  Vec residual = zero_vec(d);

  // Nested side: [y, [x]].
  const Vec inner_all = t.bracket_basis(x);
  IndexTuple outer(y);
  outer.push_back(0);
  for (std::size_t b = 0; b < d; ++b) {
    if (inner_all[b].is_zero()) continue;
    outer.back() = b;
    add_scaled(residual, t.bracket_basis(outer), -inner_all[b]);
  }

  // Sum side: sum_i (-1)^{|x|_{i-1}|y|} [x_1,...,[y,x_i],...,x_n].
  for (std::size_t i = 0; i < n; ++i) {
    const Parity xpre = prefix_parity(xp, i);
    const int sgn = parity_sign(xpre, y_total);
    outer.back() = x[i];
    const Vec inner = t.bracket_basis(outer);
    IndexTuple replaced(x);
    for (std::size_t g = 0; g < d; ++g) {
      if (inner[g].is_zero()) continue;
      replaced[i] = g;
      add_scaled(residual, t.bracket_basis(replaced),
                 sgn < 0 ? -inner[g] : inner[g]);
    }
  }
  return residual;
}

}  // namespace

AxiomReport BracketTable::verify_axioms(unsigned threads) const {
  AxiomReport report;

  for (const auto& [key, value] : entries_) {
    bool shape_ok = key.size() == arity_ && value.size() == dim() &&
                    std::all_of(key.begin(), key.end(),
                                [&](std::size_t b) { return b < dim(); });
    if (!shape_ok) {
      report.storage_witnesses.push_back({key, "malformed key or value shape"});
      continue;
    }
    CanonicalForm cf = canonical_order(key, sig_);
    if (cf.tuple != key)
      report.storage_witnesses.push_back({key, "key is not sorted non-decreasing"});
    else if (cf.forced_zero)
      report.storage_witnesses.push_back(
          {key, "key is forced to zero by graded skew-symmetry"});
    const std::vector<Parity> ps = sig_.parities_of(key);
    const Parity total = prefix_parity(ps, ps.size());
    for (std::size_t b = 0; b < value.size(); ++b)
      if (!value[b].is_zero() && sig_.parity_of(b) != total)
        report.grading_witnesses.push_back(
            {key, "coordinate " + std::to_string(b) + " breaks the grading"});
  }
  report.skew_ok = report.storage_witnesses.empty();
  report.grading_ok = report.grading_witnesses.empty();
  if (!report.skew_ok) {
    // A malformed table makes Filippov evaluation meaningless.
    report.filippov_ok = false;
    return report;
  }

  const std::vector<IndexTuple> ys = nondecreasing_tuples(dim(), arity_ - 1);
  const std::vector<IndexTuple> xs = nondecreasing_tuples(dim(), arity_);

  if (threads < 1) threads = 1;
  threads = std::min<unsigned>(threads, std::max<std::size_t>(ys.size(), 1));
  std::vector<std::vector<FilippovWitness>> found(threads);

  auto work = [&](unsigned w) {
    for (std::size_t yi = w; yi < ys.size(); yi += threads) {
      for (const IndexTuple& x : xs) {
        Vec residual = filippov_residual(*this, ys[yi], x);
        if (!is_zero_vec(residual))
          found[w].push_back({ys[yi], x, std::move(residual)});
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& local : found)
    for (auto& wit : local) report.filippov_witnesses.push_back(std::move(wit));
  std::sort(report.filippov_witnesses.begin(), report.filippov_witnesses.end(),
            [](const FilippovWitness& a, const FilippovWitness& b) {
              if (a.outer != b.outer) return a.outer < b.outer;
              return a.inner < b.inner;
            });
  report.filippov_ok = report.filippov_witnesses.empty();
  return report;
}

SupertraceCheck BracketTable::is_supertrace(const LinearFunctional& s) const {
  if (s.dim() != dim())
    return {false, "functional has dimension " + std::to_string(s.dim()) +
                       ", expected " + std::to_string(dim())};
  for (std::size_t b = sig_.even_count; b < dim(); ++b)
    if (!s.coeff(b).is_zero())
      return {false, "does not vanish on odd basis element " + std::to_string(b) +
                         ": " + s.coeff(b).str()};
  for (const auto& [key, value] : entries_) {
    const GaussScalar v = s(value);
    if (!v.is_zero())
      return {false, "does not vanish on bracket " + tuple_str(key) + ": " + v.str()};
  }
  return {};
}

BracketTable BracketTable::induce(const LinearFunctional& s) const {
  SupertraceCheck check = is_supertrace(s);
  if (!check.ok)
    throw std::invalid_argument("induce requires a supertrace; " + check.witness);
  BracketTable out(arity_ + 1, sig_);
  IndexTuple sub(arity_);
  for (const IndexTuple& t : nondecreasing_tuples(dim(), arity_ + 1)) {
    CanonicalForm cf = canonical_order(t, sig_);
    if (cf.forced_zero) continue;
    const std::vector<Parity> ps = sig_.parities_of(t);
    Vec value = zero_vec(dim());
    for (std::size_t i = 0; i <= arity_; ++i) {
      const GaussScalar si = s.coeff(t[i]);
      if (si.is_zero()) continue;
      int sgn = (i % 2 == 0) ? 1 : -1;
      sgn *= parity_sign(ps[i], prefix_parity(ps, i));
      sub.clear();
      for (std::size_t j = 0; j <= arity_; ++j)
        if (j != i) sub.push_back(t[j]);
      add_scaled(value, bracket_basis(sub), sgn < 0 ? -si : si);
    }
    if (!is_zero_vec(value)) out.add_entry(t, std::move(value));
  }
  return out;
}

BracketTable BracketTable::change_of_basis(const Mat& p_even,
                                           const Mat& p_odd) const {
  const std::size_t m = sig_.even_count, n = sig_.odd_count;
  auto check_block = [](const Mat& p, std::size_t k, const char* which) {
    if (p.size() != k)
      throw std::invalid_argument(std::string("change_of_basis: ") + which +
                                  " block has wrong size");
    for (const Vec& row : p)
      if (row.size() != k)
        throw std::invalid_argument(std::string("change_of_basis: ") + which +
                                    " block is not square");
  };
  check_block(p_even, m, "even");
  check_block(p_odd, n, "odd");

  Mat p = identity_mat(dim());
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) p[r][c] = p_even[r][c];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) p[m + r][m + c] = p_odd[r][c];
  std::optional<Mat> p_inv = mat_inverse(p);
  if (!p_inv)
    throw std::invalid_argument("change_of_basis: singular block");

  // Columns of p are the new basis vectors in old coordinates.
  std::vector<Vec> columns(dim(), Vec(dim()));
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) columns[c][r] = p[r][c];

  BracketTable out(arity_, sig_);
  std::vector<Vec> args(arity_);
  for (const IndexTuple& t : nondecreasing_tuples(dim(), arity_)) {
    CanonicalForm cf = canonical_order(t, sig_);
    if (cf.forced_zero) continue;
    for (std::size_t k = 0; k < arity_; ++k) args[k] = columns[t[k]];
    Vec old_coords = bracket(args);
    if (is_zero_vec(old_coords)) continue;
    out.add_entry(t, mat_vec(*p_inv, old_coords));
  }
  return out;
}

std::vector<LinearFunctional> supertrace_space(const BracketTable& table) {
  const std::size_t d = table.dim();
  Mat constraints;
  for (std::size_t b = table.sig().even_count; b < d; ++b) {
    Vec row = zero_vec(d);
    row[b] = GaussScalar(1);
    constraints.push_back(std::move(row));
  }
  for (const auto& [key, value] : table.entries()) constraints.push_back(value);
  const std::vector<std::size_t> pivots = rref(constraints);

  std::vector<bool> is_pivot(d, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<LinearFunctional> basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(d);
    v[free] = GaussScalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -constraints[r][free];
    basis.emplace_back(std::move(v));
  }
  return basis;
}

}  // namespace superlie
