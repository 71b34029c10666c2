#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "paracount/check.hpp"
#include "paracount/cli.hpp"
#include "paracount/io.hpp"

using namespace paracount;
using namespace fixtures;

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("paracount-unit-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const std::string file = (path / name).string();
    write_text_file(file, text);
    return file;
  }
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("graph files round-trip") {
    GraphFile file{diamond(), std::vector<std::uint32_t>{1, 2, 2, 3}, 0, 3,
                   std::vector<std::vector<std::int64_t>>{{1, -2}}};
    const GraphFile back = parse_graph_file(serialize_graph_file(file));
    CHECK(back.graph.edges() == file.graph.edges());
    CHECK(back.colours == file.colours);
    CHECK(back.s == file.s);
    CHECK(back.t == file.t);
    CHECK(back.clauses == file.clauses);
  }

  TEST_CASE("graph file errors") {
    CHECK(error_name([] { parse_graph_file("{"); }) == "parse-error");
    CHECK(error_name([] { parse_graph_file(R"({"n": 2})"); }) == "missing-field");
    CHECK(error_name([] { parse_graph_file(R"({"n": 2, "edges": [], "extra": 1})"); }) == "unknown-field");
    CHECK(error_name([] { parse_graph_file(R"({"n": -1, "edges": []})"); }) == "bad-field");
    CHECK(error_name([] { parse_graph_file(R"({"n": 2, "edges": [[0, 1, 2]]})"); }) == "bad-field");
    CHECK(error_name([] { parse_graph_file(R"({"n": 2, "edges": [[0, 1], [0, 1]]})"); }) == "duplicate-edge");
    CHECK(error_name([] { read_text_file("/nonexistent/paracount.json"); }) == "file-not-found");
  }

  TEST_CASE("structures and formulas round-trip") {
    const RelationalStructure a = RelationalStructure::create(
        Vocabulary::create({{"E", 2}, {"U", 1}}, {"c"}), 3, {{"E", {{0, 1}, {2, 2}}}, {"U", {{1}}}},
        {{"c", 2}});
    const RelationalStructure back = parse_structure(serialize_structure(a));
    CHECK(back.vocabulary() == a.vocabulary());
    CHECK(back.relation("E") == a.relation("E"));
    CHECK(back.constant("c") == 2);

    const QFFormula phi = QFFormula::disjunction(
        {QFFormula::negation(edge("x", "y")), QFFormula::equality(v("y"), Term::constant("c")),
         QFFormula::conjunction({QFFormula::atom("U", {v("x")}), edge("y", "x")})});
    const QFFormula phi_back = parse_formula(serialize_formula(phi));
    CHECK(serialize_formula(phi_back) == serialize_formula(phi));
    CHECK(count_mc(phi_back, a, formula_size(phi)) == count_mc(phi, a, formula_size(phi)));
    CHECK(error_name([] { parse_formula(R"({"op": "xor", "args": []})"); }) != "");
  }

  TEST_CASE("matrices and programs round-trip") {
    const ZeroOneMatrix m = ZeroOneMatrix::create({{0, 1, 1}, {1, 0, 0}, {0, 1, 1}});
    CHECK(parse_matrix(serialize_matrix(m)).rows() == m.rows());
    CHECK(error_name([] { parse_matrix(R"({"n": 2, "rows": [[0, 3], [1, 0]]})"); }) == "bad-matrix");

    check::Rng rng(107);
    for (int trial = 0; trial < 20; ++trial) {
      const BranchingProgram p = check::random_ordered_bp(rng, 2, 2);
      const BranchingProgram back = parse_bp(serialize_bp(p));
      CHECK(back.layers() == p.layers());
      CHECK(back.edges() == p.edges());
      for (const auto& x : check::all_bit_strings(2)) CHECK(bp_count_acc(back, x) == bp_count_acc(p, x));
    }
  }

  TEST_CASE("fnv1a digest") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("reach on the diamond") {
    TempDir dir;
    const std::string graph = dir.write("diamond.json", R"({"n":4,"edges":[[0,1],[0,2],[1,3],[2,3]]})");
    const CliRun run = cli({"reach", "--graph", graph, "--s", "0", "--t", "3", "--k", "3"});
    CHECK(run.code == 0);
    CHECK(contains(run.out, R"("count":"2")"));
    CHECK(contains(run.out, R"("gateApplied":false)"));
    CHECK(contains(run.out, R"("digest":")"));
  }

  TEST_CASE("pdet with the clow method") {
    TempDir dir;
    const std::string matrix = dir.write("ones2.json", R"({"n":2,"rows":[[1,1],[1,1]]})");
    const CliRun run = cli({"pdet", "--matrix", matrix, "--k", "2", "--method", "clow"});
    CHECK(run.code == 0);
    CHECK(contains(run.out, R"("value":"-1")"));
    CHECK(cli({"pdet", "--matrix", matrix, "--k", "2", "--method", "direct"}).out.find(R"("value":"-1")") !=
          std::string::npos);
  }

  TEST_CASE("missing file and usage errors") {
    const CliRun missing = cli({"reach", "--graph", "missing.json"});
    CHECK(missing.code == 1);
    CHECK(contains(missing.err, "file-not-found"));
    CHECK(cli({}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({"reach", "--bogus", "1"}).code == 2);
  }

  TEST_CASE("gated walk counts report the gate") {
    TempDir dir;
    const std::string graph = dir.write("diamond.json", R"({"n":4,"edges":[[0,1],[0,2],[1,3],[2,3]]})");
    const CliRun open = cli({"logreach", "--graph", graph, "--s", "0", "--t", "3", "--a", "2", "--k", "1"});
    CHECK(open.code == 0);
    CHECK(contains(open.out, R"("count":"2")"));
    const CliRun closed = cli({"logreach", "--graph", graph, "--s", "0", "--t", "3", "--a", "2", "--k", "0"});
    CHECK(contains(closed.out, R"("count":"0")"));
    CHECK(contains(closed.out, R"("gateApplied":true)"));
  }

  TEST_CASE("reduce writes an instance and its record") {
    TempDir dir;
    const std::string graph =
        dir.write("dag.json", R"({"n":3,"edges":[[0,1],[1,2]],"s":0,"t":2})");
    const std::string out = (dir.path / "pdet.json").string();
    const CliRun run = cli({"reduce", "--name", "reach-to-pdet", "--in", graph, "--out", out, "--k", "3"});
    CHECK(run.code == 0);
    CHECK(fs::exists(out));
    const ZeroOneMatrix a = parse_matrix(read_text_file(out));
    CHECK(pdet_direct(a, 3) == 1);
  }

  TEST_CASE("selftest smoke passes") {
    const CliRun run = cli({"selftest", "--seed", "7", "--scale", "smoke"});
    CHECK(run.code == 0);
    CHECK(contains(run.out, R"("passed":true)"));
    CHECK(contains(run.err, "PASS criterion 10"));
  }
}
