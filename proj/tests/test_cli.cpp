#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "superlie/algebra_io.hpp"
#include "superlie/catalog.hpp"
#include "superlie/cli.hpp"
#include "superlie/clifford.hpp"

using namespace superlie;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& stem, const std::string& text) {
  const auto path =
      std::filesystem::temp_directory_path() / ("superlie_test_" + stem);
  std::ofstream f(path, std::ios::binary);
  f << text;
  return path;
}

std::filesystem::path t4b_file() {
  return write_temp("t4b.json", catalog::get_entry("T4b").json_text);
}

std::filesystem::path bad_file() {
  return write_temp("bad.json", R"({
    "arity": 3, "even": [], "odd": ["f1"],
    "brackets": [{"args": ["f1", "f1", "f1"], "value": {"f1": {"re": "1", "im": "0"}}}]
  })");
}

}  // namespace

TEST_CASE("check: passing table") {
  const RunResult r = run_cli({"check", t4b_file().string()});
  CHECK(r.code == 0);
  CHECK(r.out == "grading ok\nskew ok\nfilippov ok\n");
}

TEST_CASE("check: failing table reports the witness") {
  const RunResult r = run_cli({"check", bad_file().string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("filippov FAIL") != std::string::npos);
  CHECK(r.out.find("y=[f1,f1] x=[f1,f1,f1] residual: 2*f1") != std::string::npos);
}

TEST_CASE("check: json summary") {
  const RunResult r = run_cli({"--json", "check", t4b_file().string()});
  CHECK(r.code == 0);
  const auto last = r.out.rfind('{');
  REQUIRE(last != std::string::npos);
  const auto j = nlohmann::json::parse(r.out.substr(last));
  CHECK(j["command"] == "check");
  CHECK(j["filippov_ok"] == true);
}

TEST_CASE("check: missing file and bad usage exit 2") {
  CHECK(run_cli({"check", "/nonexistent/x.json"}).code == 2);
  CHECK(run_cli({"check"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"check", t4b_file().string(), "--bogus"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("clifford emit lie") {
  const RunResult r = run_cli({"clifford", "--n", "2", "--emit", "lie"});
  CHECK(r.code == 0);
  const AlgebraFile parsed = parse_algebra(r.out);
  CHECK(parsed.table == clifford::export_lie(2).table);
  CHECK(parsed.table.entries().size() == 4);

  // byte-identical across runs
  const RunResult again = run_cli({"clifford", "--n", "2", "--emit", "lie"});
  CHECK(again.out == r.out);
}

TEST_CASE("clifford emit ternary equals emit proposition") {
  const RunResult t = run_cli({"clifford", "--n", "2", "--emit", "ternary"});
  const RunResult p = run_cli({"clifford", "--n", "2", "--emit", "proposition"});
  CHECK(t.code == 0);
  CHECK(t.out == p.out);
}

TEST_CASE("clifford emit matrix") {
  const RunResult r = run_cli({"clifford", "--n", "2", "--emit", "matrix"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["monomials"].size() == 4);
  CHECK(j["monomials"][0]["name"] == "e");
  CHECK(run_cli({"clifford", "--n", "3", "--emit", "matrix"}).code == 2);
  CHECK(run_cli({"clifford", "--n", "9", "--emit", "lie"}).code == 2);
}

TEST_CASE("induce with auto supertrace matches the ternary export") {
  const auto path = write_temp("c2.json", catalog::get_entry("clifford_lie(2)").json_text);
  const RunResult r = run_cli({"induce", path.string(), "--supertrace", "auto"});
  CHECK(r.code == 0);
  // auto picks the basis element of the one-dimensional supertrace space,
  // which is Str / 2i; the induced table is the ternary one rescaled.
  const AlgebraFile induced = parse_algebra(r.out);
  CHECK(induced.table.arity() == 3);
  CHECK(induced.table.verify_axioms().all_ok());

  const RunResult direct = run_cli({"clifford", "--n", "2", "--emit", "ternary"});
  const AlgebraFile ternary = parse_algebra(direct.out);
  CHECK(induced.table.entries().size() == ternary.table.entries().size());
}

TEST_CASE("induce with an explicit functional file") {
  const auto alg_path =
      write_temp("c2b.json", catalog::get_entry("clifford_lie(2)").json_text);
  const AlgebraFile alg = clifford::export_lie(2);
  const auto st_path = write_temp(
      "str2.json", serialize_functional(clifford::str_functional(2), alg.names));
  const RunResult r =
      run_cli({"induce", alg_path.string(), "--supertrace", st_path.string()});
  CHECK(r.code == 0);
  CHECK(parse_algebra(r.out).table == clifford::export_ternary(2).table);

  // a functional that is not a supertrace: dual of e
  LinearFunctional bad(Vec{GaussScalar(1), GaussScalar(0), GaussScalar(0), GaussScalar(0)});
  const auto bad_path = write_temp("badst.json", serialize_functional(bad, alg.names));
  const RunResult rb =
      run_cli({"induce", alg_path.string(), "--supertrace", bad_path.string()});
  CHECK(rb.code == 1);
  CHECK(rb.err.find("not a supertrace") != std::string::npos);
}

TEST_CASE("induce auto needs --index when the space is not a line") {
  const auto ab = write_temp("ab22.json",
                             catalog::get_entry("abelian(2,1)").json_text);
  // abelian 2|1: the supertrace space is two-dimensional
  const RunResult r = run_cli({"induce", ab.string(), "--supertrace", "auto"});
  CHECK(r.code == 2);
  CHECK(r.err.find("dimension 2") != std::string::npos);
  const RunResult r0 =
      run_cli({"induce", ab.string(), "--supertrace", "auto", "--index", "0"});
  CHECK(r0.code == 0);
  CHECK(run_cli({"induce", ab.string(), "--supertrace", "auto", "--index", "5"}).code == 2);
}

TEST_CASE("series") {
  const RunResult r =
      run_cli({"series", t4b_file().string(), "--kind", "derived"});
  CHECK(r.code == 0);
  CHECK(r.out == "D^0 dim=2\nD^1 dim=1\nD^2 dim=0\nsolvable: yes\n");
  const RunResult c =
      run_cli({"series", t4b_file().string(), "--kind", "central"});
  CHECK(c.code == 0);
  CHECK(c.out.find("nilpotent: yes") != std::string::npos);
  CHECK(run_cli({"series", t4b_file().string(), "--kind", "sidewise"}).code == 2);
}

TEST_CASE("classify") {
  const RunResult r01 = run_cli({"classify", "--dim", "0,1", "--grid", "0,1"});
  CHECK(r01.code == 0);
  CHECK(r01.out.find("solutions: 1") != std::string::npos);
  CHECK(r01.out.find("(Abelian)") != std::string::npos);

  const RunResult r02 = run_cli({"classify", "--dim", "0,2", "--grid", "0,1"});
  CHECK(r02.code == 0);
  CHECK(r02.out.find("[f1,f1,f1] = f2") != std::string::npos);

  const RunResult over =
      run_cli({"classify", "--dim", "0,2", "--grid", "0,1,-1", "--budget", "10"});
  CHECK(over.code == 2);
  CHECK(over.err.find("6561") != std::string::npos);
}

TEST_CASE("constraints") {
  const RunResult r = run_cli({"constraints", "--dim", "0,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("signature 0|1") == 0);
  CHECK(r.out.find("2*K[f1,f1,f1->f1]^2 = 0") != std::string::npos);
  const RunResult again = run_cli({"constraints", "--dim", "0,1"});
  CHECK(again.out == r.out);
}

TEST_CASE("catalog subcommands") {
  const RunResult list = run_cli({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("T4a:") != std::string::npos);
  CHECK(list.out.find("clifford_ternary(4):") != std::string::npos);

  const RunResult dump = run_cli({"catalog", "dump", "T4b"});
  CHECK(dump.code == 0);
  CHECK(parse_algebra(dump.out).table == catalog::get_entry("T4b").parse().table);

  // the suspect entry is dumped verbatim even though it cannot parse
  const RunResult dump_t5b = run_cli({"catalog", "dump", "T5b"});
  CHECK(dump_t5b.code == 0);
  CHECK(dump_t5b.out.find("\"e1\", \"e1\"") != std::string::npos);

  const RunResult verify = run_cli({"catalog", "verify"});
  CHECK(verify.code == 1);  // T5b and T5c are violations, reported honestly
  CHECK(verify.out.find("T4a: pass") != std::string::npos);
  CHECK(verify.out.find("T5b: rejected") != std::string::npos);
  CHECK(verify.out.find("T5c: fail") != std::string::npos);

  CHECK(run_cli({"catalog", "dump", "zzz"}).code == 2);
}

TEST_CASE("threads flag leaves output unchanged") {
  const RunResult one = run_cli({"--threads", "1", "check", bad_file().string()});
  const RunResult four = run_cli({"--threads", "4", "check", bad_file().string()});
  CHECK(one.code == four.code);
  CHECK(one.out == four.out);
}

TEST_CASE("global flags may follow the subcommand") {
  const RunResult r = run_cli({"check", t4b_file().string(), "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "grading ok\nskew ok\nfilippov ok\n");
  const RunResult j = run_cli({"catalog", "list", "--json"});
  CHECK(j.code == 0);
}

TEST_CASE("SUPERLIE_THREADS is the default for --threads") {
  const RunResult base = run_cli({"check", bad_file().string()});
  setenv("SUPERLIE_THREADS", "3", 1);
  const RunResult env = run_cli({"check", bad_file().string()});
  unsetenv("SUPERLIE_THREADS");
  CHECK(env.code == base.code);
  CHECK(env.out == base.out);
}

TEST_CASE("output to file") {
  const auto out_path = std::filesystem::temp_directory_path() / "superlie_test_out.json";
  std::filesystem::remove(out_path);
  const RunResult r = run_cli({"clifford", "--n", "2", "--emit", "lie", "--out",
                               out_path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("wrote ") == 0);
  std::ifstream f(out_path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(parse_algebra(buf.str()).table == clifford::export_lie(2).table);
}
