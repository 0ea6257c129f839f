#include "superlie/catalog.hpp"

#include <stdexcept>

#include "superlie/clifford.hpp"

namespace superlie::catalog {

namespace {

const char* kT4a = R"({
  "arity": 3,
  "even": [],
  "odd": ["f1", "f2"],
  "brackets": [
    {"args": ["f1", "f1", "f1"], "value": {"f1": {"re": "-1", "im": "0"}, "f2": {"re": "1", "im": "0"}}},
    {"args": ["f1", "f1", "f2"], "value": {"f1": {"re": "-1", "im": "0"}, "f2": {"re": "1", "im": "0"}}},
    {"args": ["f1", "f2", "f2"], "value": {"f1": {"re": "-1", "im": "0"}, "f2": {"re": "1", "im": "0"}}},
    {"args": ["f2", "f2", "f2"], "value": {"f1": {"re": "-1", "im": "0"}, "f2": {"re": "1", "im": "0"}}}
  ]
})";

const char* kT4b = R"({
  "arity": 3,
  "even": [],
  "odd": ["f1", "f2"],
  "brackets": [
    {"args": ["f1", "f1", "f1"], "value": {"f2": {"re": "1", "im": "0"}}}
  ]
})";

const char* kT5a = R"({
  "arity": 3,
  "even": ["e1", "e2"],
  "odd": ["f1"],
  "brackets": [
    {"args": ["e1", "f1", "f1"], "value": {"e1": {"re": "1", "im": "0"}, "e2": {"re": "1", "im": "0"}}},
    {"args": ["e2", "f1", "f1"], "value": {"e1": {"re": "-1", "im": "0"}, "e2": {"re": "-1", "im": "0"}}}
  ]
})";

const char* kT5b = R"({
  "arity": 3,
  "even": ["e1", "e2"],
  "odd": ["f1"],
  "brackets": [
    {"args": ["e1", "e1", "f1"], "value": {"f1": {"re": "1", "im": "0"}}}
  ]
})";

const char* kT5c = R"({
  "arity": 3,
  "even": ["e1", "e2"],
  "odd": ["f1"],
  "brackets": [
    {"args": ["f1", "f1", "f1"], "value": {"f1": {"re": "1", "im": "0"}}}
  ]
})";

// "prefix(a,b)" -> {a, b}; nullopt when the name has a different shape.
std::optional<std::pair<std::size_t, std::size_t>> parse_pair(
    const std::string& name, const std::string& prefix) {
  if (name.size() < prefix.size() + 5 || name.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
  const std::string body = name.substr(prefix.size() + 1,
                                       name.size() - prefix.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    return std::make_pair(std::stoul(body.substr(0, comma)),
                          std::stoul(body.substr(comma + 1)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<std::size_t> parse_single(const std::string& name,
                                        const std::string& prefix) {
  if (name.size() < prefix.size() + 3 || name.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
  try {
    return std::stoul(name.substr(prefix.size() + 1,
                                  name.size() - prefix.size() - 2));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

CatalogEntry get_entry(const std::string& name) {
  if (name == "T4a")
    return {name, "dimension 0|2 classification, non-Abelian family (a)",
            ExpectedStatus::pass, kT4a,
            "isomorphic to T4b via F1 = f1 + f2, F2 = 8*(f2 - f1)"};
  if (name == "T4b")
    return {name, "dimension 0|2 classification, non-Abelian family (b)",
            ExpectedStatus::pass, kT4b, ""};
  if (name == "T5a")
    return {name, "dimension 2|1 classification, family (a)",
            ExpectedStatus::pass, kT5a, ""};
  if (name == "T5b")
    return {name, "dimension 2|1 classification, family (b), as printed",
            ExpectedStatus::as_printed_unverified, kT5b,
            "repeated even argument; the skew rule forces this bracket to zero"};
  if (name == "T5c")
    return {name, "dimension 2|1 classification, family (c), as printed",
            ExpectedStatus::as_printed_unverified, kT5c, ""};
  if (auto mn = parse_pair(name, "abelian")) {
    const BasisSignature sig{mn->first, mn->second};
    if (sig.dim() > 12)
      throw std::invalid_argument("abelian catalog entries stop at dimension 12");
    BracketTable table(3, sig);
    return {name,
            "Abelian " + std::to_string(mn->first) + "|" + std::to_string(mn->second),
            ExpectedStatus::pass,
            serialize_algebra(table, standard_names(sig)), ""};
  }
  if (auto n = parse_single(name, "clifford_lie")) {
    const AlgebraFile alg = clifford::export_lie(*n);
    return {name,
            "graded commutator Lie superalgebra of the Clifford algebra C_" +
                std::to_string(*n),
            ExpectedStatus::pass, serialize_algebra(alg.table, alg.names), ""};
  }
  if (auto n = parse_single(name, "clifford_ternary")) {
    const AlgebraFile alg = clifford::export_ternary(*n);
    return {name,
            "supertrace-induced ternary bracket on the Clifford algebra C_" +
                std::to_string(*n),
            ExpectedStatus::pass, serialize_algebra(alg.table, alg.names), ""};
  }
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"abelian(1,1)",       "abelian(0,2)",     "abelian(2,1)",
          "T4a",                "T4b",              "T5a",
          "T5b",                "T5c",              "clifford_lie(2)",
          "clifford_ternary(2)", "clifford_lie(4)", "clifford_ternary(4)"};
}

std::vector<CatalogVerdict> verify_catalog() {
  std::vector<CatalogVerdict> out;
  for (const std::string& name : catalog_names()) {
    const CatalogEntry entry = get_entry(name);
    CatalogVerdict verdict;
    verdict.name = name;
    try {
      const AlgebraFile alg = entry.parse();
      const AxiomReport report = alg.table.verify_axioms();
      if (report.all_ok()) {
        verdict.kind = VerdictKind::passed;
        verdict.detail = "grading ok, skew ok, filippov ok";
      } else {
        verdict.kind = VerdictKind::failed;
        verdict.detail = std::string(report.grading_ok ? "" : "grading, ") +
                         (report.skew_ok ? "" : "skew, ") +
                         (report.filippov_ok ? "" : "filippov, ");
        verdict.detail = "violations: " +
                         verdict.detail.substr(0, verdict.detail.size() - 2);
        if (!report.filippov_witnesses.empty())
          verdict.detail += " (" +
                            std::to_string(report.filippov_witnesses.size()) +
                            " filippov witnesses)";
      }
    } catch (const ParseError& e) {
      verdict.kind = VerdictKind::rejected;
      verdict.detail = e.what();
    }
    out.push_back(std::move(verdict));
  }
  return out;
}

std::pair<Mat, Mat> t4a_to_t4b_blocks() {
  const Mat p_even;  // 0x0
  const Mat p_odd = {{GaussScalar(1), GaussScalar(-8)},
                     {GaussScalar(1), GaussScalar(8)}};
  return {p_even, p_odd};
}

}  // namespace superlie::catalog
