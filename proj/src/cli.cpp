#include "superlie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "superlie/algebra_io.hpp"
#include "superlie/catalog.hpp"
#include "superlie/classify.hpp"
#include "superlie/clifford.hpp"
#include "superlie/nlie.hpp"

namespace superlie::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
  file << text;
  out << "wrote " << out_path << "\n";
}

unsigned default_threads() {
  if (const char* env = std::getenv("SUPERLIE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

std::string combo_str(const Vec& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b].is_zero()) continue;
    std::string c = v[b].str();
    std::string term;
    if (c == "1")
      term = names[b];
    else if (c == "-1")
      term = "-" + names[b];
    else if (c.find_first_of("+-", 1) != std::string::npos)
      term = "(" + c + ")*" + names[b];
    else
      term = c + "*" + names[b];
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string tuple_names(const IndexTuple& t, const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += names[t[k]];
  }
  return out + "]";
}

void print_report(const AxiomReport& report, const std::vector<std::string>& names,
                  std::ostream& out) {
  constexpr std::size_t kMaxWitnesses = 10;
  out << (report.grading_ok ? "grading ok" : "grading FAIL") << "\n";
  out << (report.skew_ok ? "skew ok" : "skew FAIL") << "\n";
  out << (report.filippov_ok ? "filippov ok" : "filippov FAIL") << "\n";
  for (std::size_t k = 0; k < report.grading_witnesses.size() && k < kMaxWitnesses; ++k)
    out << "grading violation: " << tuple_names(report.grading_witnesses[k].args, names)
        << " " << report.grading_witnesses[k].detail << "\n";
  for (std::size_t k = 0; k < report.storage_witnesses.size() && k < kMaxWitnesses; ++k)
    out << "skew violation: " << tuple_names(report.storage_witnesses[k].args, names)
        << " " << report.storage_witnesses[k].detail << "\n";
  for (std::size_t k = 0; k < report.filippov_witnesses.size() && k < kMaxWitnesses; ++k) {
    const FilippovWitness& w = report.filippov_witnesses[k];
    out << "filippov violation: y=" << tuple_names(w.outer, names)
        << " x=" << tuple_names(w.inner, names)
        << " residual: " << combo_str(w.residual, names) << "\n";
  }
  if (report.filippov_witnesses.size() > kMaxWitnesses)
    out << "(" << report.filippov_witnesses.size() - kMaxWitnesses
        << " more filippov witnesses)\n";
}

ordered_json scalar_json(const GaussScalar& s) {
  ordered_json j;
  j["re"] = rational_str(s.re());
  j["im"] = rational_str(s.im());
  return j;
}

ordered_json matrix_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (const Vec& row : m) {
    ordered_json r = ordered_json::array();
    for (const GaussScalar& s : row) r.push_back(scalar_json(s));
    rows.push_back(std::move(r));
  }
  return rows;
}

int cmd_check(const std::string& path, unsigned threads, bool json,
              std::ostream& out) {
  const AlgebraFile alg = parse_algebra(read_file(path));
  const AxiomReport report = alg.table.verify_axioms(threads);
  print_report(report, alg.names, out);
  if (json) {
    ordered_json j;
    j["command"] = "check";
    j["grading_ok"] = report.grading_ok;
    j["skew_ok"] = report.skew_ok;
    j["filippov_ok"] = report.filippov_ok;
    j["filippov_witnesses"] = report.filippov_witnesses.size();
    out << j.dump() << "\n";
  }
  return report.all_ok() ? kOk : kViolations;
}

int cmd_induce(const std::string& path, const std::string& st_spec, int index,
               const std::string& out_path, bool json, std::ostream& out,
               std::ostream& err) {
  const AlgebraFile alg = parse_algebra(read_file(path));
  LinearFunctional s;
  if (st_spec == "auto") {
    const std::vector<LinearFunctional> basis = supertrace_space(alg.table);
    if (basis.empty())
      throw std::runtime_error("the supertrace space is zero; nothing to induce with");
    if (index < 0) {
      if (basis.size() != 1)
        throw std::runtime_error("the supertrace space has dimension " +
                                 std::to_string(basis.size()) +
                                 "; pick a basis element with --index");
      s = basis[0];
    } else {
      if (static_cast<std::size_t>(index) >= basis.size())
        throw std::runtime_error("--index " + std::to_string(index) +
                                 " out of range; the supertrace space has dimension " +
                                 std::to_string(basis.size()));
      s = basis[static_cast<std::size_t>(index)];
    }
  } else {
    s = parse_functional(read_file(st_spec), alg.names);
    const SupertraceCheck check = alg.table.is_supertrace(s);
    if (!check.ok) {
      err << "not a supertrace: " << check.witness << "\n";
      return kViolations;
    }
  }
  const BracketTable induced = alg.table.induce(s);
  write_output(serialize_algebra(induced, alg.names), out_path, out);
  if (json) {
    ordered_json j;
    j["command"] = "induce";
    j["arity"] = induced.arity();
    j["entries"] = induced.entries().size();
    out << j.dump() << "\n";
  }
  return kOk;
}

int cmd_series(const std::string& path, const std::string& kind_name, bool json,
               std::ostream& out) {
  const AlgebraFile alg = parse_algebra(read_file(path));
  const SeriesKind kind =
      kind_name == "derived" ? SeriesKind::derived : SeriesKind::central;
  const SeriesResult result =
      series(alg.table, Subspace::whole(alg.table.dim()), kind);
  const char* letter = kind == SeriesKind::derived ? "D" : "C";
  for (std::size_t p = 0; p < result.terms.size(); ++p)
    out << letter << "^" << p << " dim=" << result.terms[p].dim() << "\n";
  if (kind == SeriesKind::derived)
    out << "solvable: " << (result.reaches_zero ? "yes" : "no") << "\n";
  else
    out << "nilpotent: " << (result.reaches_zero ? "yes" : "no") << "\n";
  if (json) {
    ordered_json j;
    j["command"] = "series";
    j["kind"] = kind_name;
    ordered_json dims = ordered_json::array();
    for (const Subspace& t : result.terms) dims.push_back(t.dim());
    j["dims"] = std::move(dims);
    j["reaches_zero"] = result.reaches_zero;
    out << j.dump() << "\n";
  }
  return kOk;
}

int cmd_clifford(std::size_t n, const std::string& emit,
                 const std::string& out_path, bool json, std::ostream& out) {
  if (emit == "matrix") {
    const std::vector<clifford::SubsetIndex> basis = clifford::export_basis(n);
    ordered_json j;
    j["n"] = n;
    j["grading"] = matrix_json(clifford::grading_matrix(n));
    j["monomials"] = ordered_json::array();
    for (clifford::SubsetIndex mask : basis) {
      ordered_json entry;
      entry["name"] = clifford::mono_name(mask);
      entry["matrix"] = matrix_json(clifford::matrix_rep(n, mask));
      j["monomials"].push_back(std::move(entry));
    }
    write_output(j.dump(2) + "\n", out_path, out);
    return kOk;
  }
  AlgebraFile alg = emit == "lie"       ? clifford::export_lie(n)
                    : emit == "ternary" ? clifford::export_ternary(n)
                                        : clifford::export_proposition(n);
  write_output(serialize_algebra(alg.table, alg.names), out_path, out);
  if (json) {
    ordered_json j;
    j["command"] = "clifford";
    j["emit"] = emit;
    j["dim"] = alg.table.dim();
    j["entries"] = alg.table.entries().size();
    out << j.dump() << "\n";
  }
  return kOk;
}

int cmd_classify(const std::string& dim_spec, const std::string& grid_spec,
                 std::size_t budget, unsigned threads, bool json,
                 std::ostream& out) {
  const auto comma = dim_spec.find(',');
  if (comma == std::string::npos)
    throw std::runtime_error("--dim expects m,n");
  const BasisSignature sig{std::stoul(dim_spec.substr(0, comma)),
                           std::stoul(dim_spec.substr(comma + 1))};
  std::vector<GaussScalar> grid;
  std::stringstream ss(grid_spec);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(GaussScalar::parse(item));
  if (grid.empty()) throw std::runtime_error("--grid expects a csv of scalars");

  classify::GridOptions options;
  options.budget = budget;
  options.threads = threads;
  const std::vector<BracketTable> solutions =
      classify::grid_search(sig, 3, grid, options);
  const std::vector<std::string> names = standard_names(sig);

  out << "signature " << sig.even_count << "|" << sig.odd_count << " arity 3\n";
  out << "solutions: " << solutions.size() << "\n";
  for (std::size_t k = 0; k < solutions.size(); ++k) {
    out << "solution " << (k + 1) << ":"
        << (solutions[k].entries().empty() ? " (Abelian)" : "") << "\n";
    for (const auto& [key, value] : solutions[k].entries())
      out << "  " << tuple_names(key, names) << " = " << combo_str(value, names)
          << "\n";
  }
  if (json) {
    ordered_json j;
    j["command"] = "classify";
    j["signature"] = std::to_string(sig.even_count) + "|" +
                     std::to_string(sig.odd_count);
    j["solutions"] = ordered_json::array();
    for (const BracketTable& t : solutions)
      j["solutions"].push_back(ordered_json::parse(serialize_algebra(t, names)));
    out << j.dump() << "\n";
  }
  return kOk;
}

int cmd_constraints(const std::string& dim_spec, const std::string& out_path,
                    std::ostream& out) {
  const auto comma = dim_spec.find(',');
  if (comma == std::string::npos)
    throw std::runtime_error("--dim expects m,n");
  const BasisSignature sig{std::stoul(dim_spec.substr(0, comma)),
                           std::stoul(dim_spec.substr(comma + 1))};
  const classify::ConstraintSystem system = classify::generate_constraints(sig, 3);
  write_output(classify::serialize_constraints(system, standard_names(sig)),
               out_path, out);
  return kOk;
}

int cmd_catalog(const std::string& action, const std::string& name, bool json,
                std::ostream& out) {
  if (action == "list") {
    for (const std::string& n : catalog::catalog_names()) {
      const catalog::CatalogEntry entry = catalog::get_entry(n);
      out << n << ": " << entry.provenance << "\n";
    }
    return kOk;
  }
  if (action == "dump") {
    const catalog::CatalogEntry entry = catalog::get_entry(name);
    out << entry.json_text;
    if (entry.json_text.empty() || entry.json_text.back() != '\n') out << "\n";
    return kOk;
  }
  // verify
  const std::vector<catalog::CatalogVerdict> verdicts = catalog::verify_catalog();
  bool violations = false;
  ordered_json j;
  j["command"] = "catalog verify";
  j["entries"] = ordered_json::array();
  for (const catalog::CatalogVerdict& v : verdicts) {
    const char* kind = v.kind == catalog::VerdictKind::passed     ? "pass"
                       : v.kind == catalog::VerdictKind::failed   ? "fail"
                                                                  : "rejected";
    out << v.name << ": " << kind << " (" << v.detail << ")\n";
    if (v.kind != catalog::VerdictKind::passed) violations = true;
    ordered_json entry;
    entry["name"] = v.name;
    entry["verdict"] = kind;
    j["entries"].push_back(std::move(entry));
  }
  if (json) out << j.dump() << "\n";
  return violations ? kViolations : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact-arithmetic engine for n-ary Lie superalgebras"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default SUPERLIE_THREADS or 1)");
  bool json = false;
  app.add_flag("--json", json, "append a machine-readable JSON summary");

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "verify the axioms of an algebra file");
  check->add_option("file", check_file, "algebra file")->required();

  std::string induce_file, induce_st, induce_out;
  int induce_index = -1;
  CLI::App* induce = app.add_subcommand("induce", "build the supertrace-induced bracket");
  induce->add_option("file", induce_file, "algebra file")->required();
  induce->add_option("--supertrace", induce_st, "functional file, or 'auto'")->required();
  induce->add_option("--index", induce_index, "basis element of the supertrace space");
  induce->add_option("--out", induce_out, "output file (default stdout)");

  std::string series_file, series_kind;
  CLI::App* series_cmd = app.add_subcommand("series", "derived or central series");
  series_cmd->add_option("file", series_file, "algebra file")->required();
  series_cmd->add_option("--kind", series_kind, "derived|central")
      ->required()
      ->check(CLI::IsMember({"derived", "central"}));

  std::size_t clifford_n = 0;
  std::string clifford_emit, clifford_out;
  CLI::App* clifford_cmd = app.add_subcommand("clifford", "Clifford superalgebra tables");
  clifford_cmd->add_option("--n", clifford_n, "number of generators")->required();
  clifford_cmd->add_option("--emit", clifford_emit, "lie|ternary|proposition|matrix")
      ->required()
      ->check(CLI::IsMember({"lie", "ternary", "proposition", "matrix"}));
  clifford_cmd->add_option("--out", clifford_out, "output file (default stdout)");

  std::string classify_dim, classify_grid;
  std::size_t classify_budget = classify::GridOptions{}.budget;
  CLI::App* classify_cmd = app.add_subcommand("classify", "grid-search structure constants");
  classify_cmd->add_option("--dim", classify_dim, "signature m,n")->required();
  classify_cmd->add_option("--grid", classify_grid, "csv of scalars")->required();
  classify_cmd->add_option("--budget", classify_budget, "assignment budget");

  std::string constraints_dim, constraints_out;
  CLI::App* constraints_cmd =
      app.add_subcommand("constraints", "emit the quadratic constraint system");
  constraints_cmd->add_option("--dim", constraints_dim, "signature m,n")->required();
  constraints_cmd->add_option("--out", constraints_out, "output file (default stdout)");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in algebras");
  catalog_cmd->require_subcommand(1);
  CLI::App* catalog_list = catalog_cmd->add_subcommand("list", "list entries");
  std::string catalog_dump_name;
  CLI::App* catalog_dump = catalog_cmd->add_subcommand("dump", "emit one entry");
  catalog_dump->add_option("name", catalog_dump_name, "entry name")->required();
  CLI::App* catalog_verify = catalog_cmd->add_subcommand("verify", "verify all entries");

  // let --threads/--json appear after the subcommand too
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();
  catalog_list->fallthrough();
  catalog_dump->fallthrough();
  catalog_verify->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*check) return cmd_check(check_file, threads, json, out);
    if (*induce)
      return cmd_induce(induce_file, induce_st, induce_index, induce_out, json,
                        out, err);
    if (*series_cmd) return cmd_series(series_file, series_kind, json, out);
    if (*clifford_cmd)
      return cmd_clifford(clifford_n, clifford_emit, clifford_out, json, out);
    if (*classify_cmd)
      return cmd_classify(classify_dim, classify_grid, classify_budget, threads,
                          json, out);
    if (*constraints_cmd)
      return cmd_constraints(constraints_dim, constraints_out, out);
    if (*catalog_cmd) {
      const std::string action = (*catalog_list)   ? "list"
                                 : (*catalog_dump) ? "dump"
                                                   : "verify";
      (void)catalog_verify;
      return cmd_catalog(action, catalog_dump_name, json, out);
    }
  } catch (const classify::BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, std::cout, std::cerr);
}

}  // namespace superlie::cli
