#include "superlie/classify.hpp"

#include "superlie/algebra_io.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace superlie::classify {

std::string SCVariable::name(const std::vector<std::string>& names) const {
  std::string out = "K[";
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k) out += ",";
    out += names.at(args[k]);
  }
  out += "->" + names.at(target) + "]";
  return out;
}

void Poly::add_term(Monomial mono, const GaussScalar& coeff) {
  if (coeff.is_zero()) return;
  std::sort(mono.begin(), mono.end());
  auto [it, inserted] = terms_.emplace(std::move(mono), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussScalar Poly::evaluate(std::span<const GaussScalar> assignment) const {
  GaussScalar out;
  for (const auto& [mono, coeff] : terms_) {
    GaussScalar term = coeff;
    for (std::size_t v : mono) term *= assignment[v];
    out += term;
  }
  return out;
}

std::vector<SCVariable> admissible_variables(const BasisSignature& sig,
                                             std::size_t arity) {
  std::vector<SCVariable> out;
  for (const IndexTuple& t : nondecreasing_tuples(sig.dim(), arity)) {
    if (canonical_order(t, sig).forced_zero) continue;
    const std::vector<Parity> ps = sig.parities_of(t);
    const Parity total = prefix_parity(ps, ps.size());
    for (std::size_t target = 0; target < sig.dim(); ++target)
      if (sig.parity_of(target) == total) out.push_back({t, target});
  }
  return out;
}

namespace {

struct VarLookup {
  std::map<SCVariable, std::size_t> index;

  explicit VarLookup(std::span<const SCVariable> vars) {
    for (std::size_t k = 0; k < vars.size(); ++k) index.emplace(vars[k], k);
  }

  // Canonical args only; absent means the constant is identically zero.
  std::optional<std::size_t> find(const IndexTuple& args, std::size_t target) const {
    auto it = index.find(SCVariable{args, target});
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

}  // namespace

ConstraintSystem generate_constraints(const BasisSignature& sig,
                                      std::size_t arity) {
  ConstraintSystem system;
  system.sig = sig;
  system.arity = arity;
  system.variables = admissible_variables(sig, arity);
  const VarLookup lookup(system.variables);
  const std::size_t d = sig.dim();

  std::set<Poly> seen;
  for (const IndexTuple& y : nondecreasing_tuples(d, arity - 1)) {
    const std::vector<Parity> yp = sig.parities_of(y);
    const Parity y_total = prefix_parity(yp, yp.size());
    IndexTuple extended(y);
    extended.push_back(0);
    for (const IndexTuple& x : nondecreasing_tuples(d, arity)) {
      const std::vector<Parity> xp = sig.parities_of(x);
      for (std::size_t target = 0; target < d; ++target) {
        Poly poly;
        // Nested side [y,[x]], subtracted.
        for (std::size_t mid = 0; mid < d; ++mid) {
          const auto v1 = lookup.find(x, mid);
          if (!v1) continue;
          extended.back() = mid;
          CanonicalForm cf = canonical_order(extended, sig);
          if (cf.forced_zero) continue;
          const auto v2 = lookup.find(cf.tuple, target);
          if (!v2) continue;
          poly.add_term({*v1, *v2}, GaussScalar(-cf.sign));
        }
        // Sum side: (-1)^{|x|_{i-1}|y|} [x_1,...,[y,x_i],...,x_n].
        for (std::size_t i = 0; i < arity; ++i) {
          const int s0 = parity_sign(prefix_parity(xp, i), y_total);
          extended.back() = x[i];
          CanonicalForm inner = canonical_order(extended, sig);
          if (inner.forced_zero) continue;
          IndexTuple replaced(x);
          for (std::size_t mid = 0; mid < d; ++mid) {
            const auto v1 = lookup.find(inner.tuple, mid);
            if (!v1) continue;
            replaced[i] = mid;
            CanonicalForm outer = canonical_order(replaced, sig);
            if (outer.forced_zero) continue;
            const auto v2 = lookup.find(outer.tuple, target);
            if (!v2) continue;
            poly.add_term({*v1, *v2}, GaussScalar(s0 * inner.sign * outer.sign));
          }
        }
        if (poly.is_zero() || !seen.insert(poly).second) continue;
        system.constraints.push_back({std::move(poly), y, x, target});
      }
    }
  }
  return system;
}

std::vector<GaussScalar> evaluate(const ConstraintSystem& system,
                                  std::span<const GaussScalar> assignment) {
  if (assignment.size() != system.variables.size())
    throw std::invalid_argument("assignment size mismatch");
  std::vector<GaussScalar> out;
  out.reserve(system.constraints.size());
  for (const TaggedConstraint& c : system.constraints)
    out.push_back(c.poly.evaluate(assignment));
  return out;
}

std::vector<GaussScalar> evaluate(
    const ConstraintSystem& system,
    const std::map<SCVariable, GaussScalar>& assignment) {
  std::vector<GaussScalar> flat;
  flat.reserve(system.variables.size());
  for (const SCVariable& v : system.variables) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw std::invalid_argument("assignment missing variable " +
                                  v.name(standard_names(system.sig)));
    flat.push_back(it->second);
  }
  return evaluate(system, flat);
}

BracketTable table_from_assignment(const BasisSignature& sig, std::size_t arity,
                                   std::span<const SCVariable> variables,
                                   std::span<const GaussScalar> assignment) {
  if (variables.size() != assignment.size())
    throw std::invalid_argument("assignment size mismatch");
  BracketTable table(arity, sig);
  std::size_t k = 0;
  while (k < variables.size()) {
    const IndexTuple& args = variables[k].args;
    Vec value = zero_vec(sig.dim());
    while (k < variables.size() && variables[k].args == args) {
      value[variables[k].target] = assignment[k];
      ++k;
    }
    if (!is_zero_vec(value)) table.add_entry(args, std::move(value));
  }
  return table;
}

namespace {

std::string poly_str(const Poly& poly,
                     const std::vector<std::string>& var_names) {
  std::string out;
  for (const auto& [mono, coeff] : poly.terms()) {
    if (!out.empty()) out += " + ";
    std::string c = coeff.str();
    const bool needs_parens = c.find_first_of("+-", 1) != std::string::npos;
    out += needs_parens ? "(" + c + ")" : c;
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (k + 1 < mono.size() && mono[k] == mono[k + 1]) {
        out += "*" + var_names[mono[k]] + "^2";
        ++k;
      } else {
        out += "*" + var_names[mono[k]];
      }
    }
  }
  return out.empty() ? "0" : out;
}

std::string tuple_names(const IndexTuple& t, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += names[t[k]];
  }
  return out;
}

}  // namespace

std::string serialize_constraints(const ConstraintSystem& system,
                                  const std::vector<std::string>& names) {
  std::vector<std::string> var_names;
  var_names.reserve(system.variables.size());
  for (const SCVariable& v : system.variables) var_names.push_back(v.name(names));

  std::string out;
  out += "signature " + std::to_string(system.sig.even_count) + "|" +
         std::to_string(system.sig.odd_count) + "\n";
  out += "arity " + std::to_string(system.arity) + "\n";
  out += "variables";
  for (const std::string& v : var_names) out += " " + v;
  out += "\n";
  for (const TaggedConstraint& c : system.constraints) {
    out += "y=[" + tuple_names(c.outer, names) + "] x=[" +
           tuple_names(c.inner, names) + "] H=" + names[c.target] + ": " +
           poly_str(c.poly, var_names) + " = 0\n";
  }
  return out;
}

std::vector<BracketTable> grid_search(const BasisSignature& sig,
                                      std::size_t arity,
                                      std::span<const GaussScalar> grid,
                                      const GridOptions& options) {
  const ConstraintSystem system = generate_constraints(sig, arity);
  const std::size_t nvars = system.variables.size();

  BigInt total = 1;
  for (std::size_t k = 0; k < nvars; ++k) total *= BigInt(grid.size());
  if (total > options.budget)
    throw BudgetError("grid search needs " + total.str() +
                      " assignments, over the budget of " +
                      std::to_string(options.budget));
  const std::size_t count = total.convert_to<std::size_t>();

  unsigned threads = std::max(1u, options.threads);
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  std::vector<std::vector<std::pair<std::size_t, BracketTable>>> hits(threads);
  auto work = [&](unsigned w) {
    const std::size_t lo = count * w / threads;
    const std::size_t hi = count * (w + 1) / threads;
    std::vector<GaussScalar> assignment(nvars);
    for (std::size_t flat = lo; flat < hi; ++flat) {
      std::size_t rest = flat;
      for (std::size_t k = nvars; k-- > 0;) {
        assignment[k] = grid[rest % grid.size()];
        rest /= grid.size();
      }
      bool all_zero = true;
      for (const TaggedConstraint& c : system.constraints) {
        if (!c.poly.evaluate(assignment).is_zero()) {
          all_zero = false;
          break;
        }
      }
      if (!all_zero) continue;
      BracketTable table =
          table_from_assignment(sig, arity, system.variables, assignment);
      if (!table.verify_axioms().all_ok())
        throw std::logic_error(
            "constraint system accepted an assignment the axiom check rejects");
      hits[w].emplace_back(flat, std::move(table));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  std::vector<BracketTable> out;
  for (auto& local : hits)
    for (auto& [flat, table] : local) out.push_back(std::move(table));
  return out;
}

std::string Fingerprint::str() const {
  std::string out = "(" + std::to_string(derived1_dim) + "," +
                    std::to_string(derived2_dim) + "," +
                    std::to_string(central1_dim) + "," +
                    std::to_string(central2_dim) + ",(" +
                    std::to_string(derived1_even_dim) + "|" +
                    std::to_string(derived1_odd_dim) + "),";
  out += solvable ? "solvable," : "non-solvable,";
  out += nilpotent ? "nilpotent)" : "non-nilpotent)";
  return out;
}

Fingerprint fingerprint(const BracketTable& table) {
  Fingerprint fp;
  const std::size_t d = table.dim();
  const Subspace whole = Subspace::whole(d);
  const std::vector<Subspace> all(table.arity(), whole);
  const Subspace d1 = subspace_bracket(table, all);
  fp.derived1_dim = d1.dim();
  fp.central1_dim = d1.dim();

  std::vector<Subspace> d1_parts(table.arity(), d1);
  fp.derived2_dim = subspace_bracket(table, d1_parts).dim();
  std::vector<Subspace> c2_parts(table.arity(), whole);
  c2_parts[0] = d1;
  fp.central2_dim = subspace_bracket(table, c2_parts).dim();

  // Entry values are homogeneous and span the derived subalgebra, so the
  // parity split is the rank of each homogeneous block.
  std::vector<Vec> evens, odds;
  for (const auto& [key, value] : table.entries()) {
    const std::vector<Parity> ps = table.sig().parities_of(key);
    if (prefix_parity(ps, ps.size()) == Parity::even)
      evens.push_back(value);
    else
      odds.push_back(value);
  }
  fp.derived1_even_dim = Subspace::span(d, evens).dim();
  fp.derived1_odd_dim = Subspace::span(d, odds).dim();

  fp.solvable = is_solvable(table, whole);
  fp.nilpotent = is_nilpotent(table, whole);
  return fp;
}

}  // namespace superlie::classify
