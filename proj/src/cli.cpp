#include "paracount/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "paracount/bp.hpp"
#include "paracount/check.hpp"
#include "paracount/cnf.hpp"
#include "paracount/error.hpp"
#include "paracount/fo.hpp"
#include "paracount/hom.hpp"
#include "paracount/io.hpp"
#include "paracount/pdet.hpp"
#include "paracount/reductions.hpp"
#include "paracount/walk_count.hpp"

namespace paracount {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string graph, formula, structure, matrix, program, target, cnf;
  std::string in, out, name, method, mode, x, y, scale = "smoke";
  std::uint64_t s = 0, t = 0, k = 0, a = 0, b = 2, n = 0, r = 0, arity = 0, seed = 7, limit = 0;
};

// Collects everything that identifies an instance: file contents in read
// order and the numeric parameters actually consumed.
class Context {
 public:
  Context(CLI::App* sub, const Args& args) : sub_(sub), args_(args) {
    material_ = sub->get_name();
  }

  bool given(const std::string& flag) const { return sub_->count(flag) > 0; }

  std::uint64_t need(const std::string& flag, std::uint64_t value) {
    if (!given(flag)) throw UsageError(sub_->get_name() + ": " + flag + " is required");
    material_ += '\0' + flag + '=' + std::to_string(value);
    return value;
  }

  std::uint64_t optional(const std::string& flag, std::uint64_t value) {
    material_ += '\0' + flag + '=' + std::to_string(value);
    return value;
  }

  std::string load(const std::string& flag, const std::string& path) {
    if (!given(flag)) throw UsageError(sub_->get_name() + ": " + flag + " is required");
    std::string text = read_text_file(path);
    material_ += '\0' + text;
    return text;
  }

  Vertex vertex(const std::string& flag, std::uint64_t value, std::optional<Vertex> from_file) {
    if (given(flag)) return static_cast<Vertex>(optional(flag, value));
    if (from_file) return static_cast<Vertex>(optional(flag, *from_file));
    throw UsageError(sub_->get_name() + ": " + flag + " is required (flag or graph file)");
  }

  std::uint64_t limit() const {
    if (given("--limit")) return args_.limit;
    if (const char* env = std::getenv("PARACOUNT_LIMIT")) {
      try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(env, &used);
        if (used == std::string(env).size() && v > 0) return v;
      } catch (const std::exception&) {
      }
      throw UsageError("PARACOUNT_LIMIT must be a positive integer");
    }
    return kDefaultLimit;
  }

  std::string digest() const { return fnv1a_hex(material_); }

 private:
  CLI::App* sub_;
  const Args& args_;
  std::string material_;
};

std::vector<bool> parse_bits(const std::string& text, const std::string& flag) {
  std::vector<bool> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw UsageError(flag + " must be a string of 0 and 1");
    bits.push_back(c == '1');
  }
  return bits;
}

EdgeCNF load_cnf(Context& ctx, const Args& args, const GraphFile& file) {
  if (ctx.given("--cnf")) {
    std::istringstream in(ctx.load("--cnf", args.cnf));
    return EdgeCNF::from_signed(file.graph, parse_dimacs(in));
  }
  return EdgeCNF::from_signed(file.graph, file.clauses.value_or(std::vector<std::vector<std::int64_t>>{}));
}

json count_report(const BigInt& count, bool gate) {
  return json{{"count", to_decimal(count)}, {"gateApplied", gate}};
}

using Handler = std::function<json(Context&, const Args&)>;

json run_reach(Context& ctx, const Args& args) {
  const GraphFile file = parse_graph_file(ctx.load("--graph", args.graph));
  const Vertex s = ctx.vertex("--s", args.s, file.s);
  const Vertex t = ctx.vertex("--t", args.t, file.t);
  return count_report(count_reach(file.graph, s, t, ctx.need("--k", args.k)), false);
}

json run_logreach(Context& ctx, const Args& args) {
  const GraphFile file = parse_graph_file(ctx.load("--graph", args.graph));
  const Vertex s = ctx.vertex("--s", args.s, file.s);
  const Vertex t = ctx.vertex("--t", args.t, file.t);
  const std::uint64_t a = ctx.need("--a", args.a);
  const std::uint64_t k = ctx.need("--k", args.k);
  const std::uint64_t b = ctx.optional("--b", args.b);
  const WalkCount count = count_log_reach_b(file.graph, s, t, a, k, b);
  return count_report(count, !log_gate_passes(a, k, file.graph.vertex_count()));
}

json run_logwalk(Context& ctx, const Args& args) {
  const GraphFile file = parse_graph_file(ctx.load("--graph", args.graph));
  const std::uint64_t a = ctx.need("--a", args.a);
  const std::uint64_t k = ctx.need("--k", args.k);
  const std::uint64_t b = ctx.optional("--b", args.b);
  const WalkCount count = count_log_walk_b(file.graph, a, k, b);
  return count_report(count, !log_gate_passes(a, k, file.graph.vertex_count()));
}

json run_reachcolour(Context& ctx, const Args& args) {
  const GraphFile file = parse_graph_file(ctx.load("--graph", args.graph));
  if (!file.colours) fail("bad-colouring", "graph file has no \"colours\" field");
  const VertexColouring vc = VertexColouring::create(file.graph, *file.colours);
  const Vertex s = ctx.vertex("--s", args.s, file.s);
  const Vertex t = ctx.vertex("--t", args.t, file.t);
  const std::uint64_t k = ctx.need("--k", args.k);
  const WalkCount count = count_reach_colour(vc, s, t, k);
  return count_report(count, vc.colour_count() != k);
}

json run_reach2cnf(Context& ctx, const Args& args) {
  const GraphFile file = parse_graph_file(ctx.load("--graph", args.graph));
  const EdgeCNF phi = load_cnf(ctx, args, file);
  const Vertex s = ctx.vertex("--s", args.s, file.s);
  const Vertex t = ctx.vertex("--t", args.t, file.t);
  const std::uint64_t a = ctx.need("--a", args.a);
  const std::uint64_t k = ctx.need("--k", args.k);
  const WalkCount count = count_log_reach2_cnf(file.graph, s, t, phi, a, k);
  return count_report(count, !log_gate_passes(a, k, file.graph.vertex_count() + phi.size()));
}

json run_cyclecover2cnf(Context& ctx, const Args& args) {
  const GraphFile file = parse_graph_file(ctx.load("--graph", args.graph));
  const EdgeCNF phi = load_cnf(ctx, args, file);
  const std::uint64_t a = ctx.need("--a", args.a);
  const std::uint64_t k = ctx.need("--k", args.k);
  const WalkCount count = count_cycle_cover2_cnf(file.graph, phi, a, k);
  const std::uint64_t size = file.graph.vertex_count() + file.graph.edge_count() + phi.size();
  return count_report(count, a > ceil_log2(size));
}

json run_mc(Context& ctx, const Args& args) {
  const QFFormula phi = parse_formula(ctx.load("--formula", args.formula));
  const RelationalStructure structure = parse_structure(ctx.load("--structure", args.structure));
  const std::uint64_t k = ctx.need("--k", args.k);
  const std::string method = args.method.empty() ? "brute" : args.method;
  WalkCount count;
  if (method == "brute") {
    count = count_mc(phi, structure, k);
  } else if (method == "local") {
    const std::uint64_t r = ctx.optional("--r", ctx.given("--r") ? args.r : locality_radius(phi));
    const std::uint64_t a = ctx.optional("--arity", ctx.given("--arity") ? args.arity : max_arity(phi));
    count = count_mc_local(phi, structure, k, r, a);
  } else {
    throw UsageError("mc: --method must be brute or local");
  }
  return count_report(count, k != formula_size(phi));
}

json run_hom(Context& ctx, const Args& args) {
  const RelationalStructure target = parse_structure(ctx.load("--target", args.target));
  const std::uint64_t n = ctx.need("--n", args.n);
  const std::uint64_t k = ctx.need("--k", args.k);
  const std::string method = args.method.empty() ? "layered" : args.method;
  WalkCount count;
  if (method == "layered") {
    count = count_hom_path_star(n, target, k);
  } else if (method == "oracle") {
    const PathStarStructure pattern = make_path_star(n);
    count = n > k ? WalkCount(0) : count_hom_oracle(pattern.structure, target, ctx.limit());
  } else {
    throw UsageError("hom: --method must be layered or oracle");
  }
  return count_report(count, n > k);
}

json run_pdet(Context& ctx, const Args& args) {
  const ZeroOneMatrix a = parse_matrix(ctx.load("--matrix", args.matrix));
  const std::uint64_t k = ctx.need("--k", args.k);
  const std::string method = args.method.empty() ? "direct" : args.method;
  if (method == "direct") {
    return json{{"value", to_decimal(pdet_direct(a, k))}, {"gateApplied", false}};
  }
  if (method == "clow") {
    if (k > a.size()) pdet_direct(a, k);  // raises k-out-of-range
    const ClowMachineCounts counts = clow_machine_counts(a, k, ctx.limit());
    return json{{"value", to_decimal(counts.difference())},
                {"positive", to_decimal(counts.positive)},
                {"negative", to_decimal(counts.negative)},
                {"gateApplied", false}};
  }
  throw UsageError("pdet: --method must be direct or clow");
}

json run_bp(Context& ctx, const Args& args) {
  const BranchingProgram p = parse_bp(ctx.load("--program", args.program));
  const std::vector<bool> x = parse_bits(args.x, "--x");
  const std::string mode = args.mode.empty() ? "count" : args.mode;
  if (mode == "count") return count_report(bp_count_acc(p, x), false);
  if (mode == "fast") return count_report(bp_count_fast(p, x), false);
  if (mode == "accepts") {
    return json{{"accepts", bp_accepts(p, x, parse_bits(args.y, "--y"))}, {"gateApplied", false}};
  }
  if (mode == "certify") {
    const ReadOnceCheck check = check_read_once_certified(p);
    json report{{"certified", check.certified()}, {"gateApplied", false}};
    if (check.certified()) {
      report["cutLayers"] = check.certificate->cut_layers;
    } else {
      report["violatingPair"] = {check.first, check.second};
      report["reason"] = check.reason;
    }
    return report;
  }
  if (mode == "stagger") {
    if (!ctx.given("--out")) throw UsageError("bp: --mode stagger needs --out");
    const BranchingProgram staggered = stagger(p);
    write_text_file(args.out, serialize_bp(staggered));
    return json{{"out", args.out},
                {"nodes", staggered.node_count()},
                {"layers", staggered.layers().size()},
                {"gateApplied", false}};
  }
  throw UsageError("bp: --mode must be count, fast, accepts, certify or stagger");
}

json run_reduce(Context& ctx, const Args& args) {
  if (!ctx.given("--name")) throw UsageError("reduce: --name is required");
  if (!ctx.given("--out")) throw UsageError("reduce: --out is required");
  json record{{"name", args.name}};
  if (args.name == "hom-to-reach") {
    const RelationalStructure target = parse_structure(ctx.load("--in", args.in));
    const std::uint64_t n = ctx.need("--n", args.n);
    const ReachInstance out = reduce_hom_to_reach(n, target, ctx.need("--k", args.k));
    write_text_file(args.out,
                    serialize_graph_file({out.graph, std::nullopt, out.s, out.t, std::nullopt}));
    record["kPrime"] = out.k;
  } else if (args.name == "reachcolour-to-hom") {
    const GraphFile file = parse_graph_file(ctx.load("--in", args.in));
    if (!file.colours) fail("bad-colouring", "graph file has no \"colours\" field");
    const VertexColouring vc = VertexColouring::create(file.graph, *file.colours);
    const Vertex s = ctx.vertex("--s", args.s, file.s);
    const Vertex t = ctx.vertex("--t", args.t, file.t);
    const HomTarget out = reduce_reach_colour_to_hom(vc, s, t, ctx.need("--k", args.k));
    write_text_file(args.out, serialize_structure(out.target));
    record["kPrime"] = out.k;
    record["n"] = out.pattern.n;
  } else if (args.name == "reach-to-mc") {
    const GraphFile file = parse_graph_file(ctx.load("--in", args.in));
    const Vertex s = ctx.vertex("--s", args.s, file.s);
    const Vertex t = ctx.vertex("--t", args.t, file.t);
    const McInstance out = reduce_reach_to_mc(file.graph, s, t, ctx.need("--k", args.k));
    write_text_file(args.out, serialize_structure(out.structure));
    write_text_file(args.out + ".formula.json", serialize_formula(out.formula));
    record["kPrime"] = out.k;
    record["formula"] = args.out + ".formula.json";
  } else if (args.name == "reach-to-pdet") {
    const GraphFile file = parse_graph_file(ctx.load("--in", args.in));
    const Vertex s = ctx.vertex("--s", args.s, file.s);
    const Vertex t = ctx.vertex("--t", args.t, file.t);
    const PdetInstance out = reduce_reach_to_pdet(file.graph, s, t, ctx.need("--k", args.k));
    write_text_file(args.out, serialize_matrix(out.matrix));
    record["kPrime"] = out.k;
    record["recoverySign"] = out.recovery_sign;
  } else {
    throw UsageError("reduce: unknown --name '" + args.name +
                     "' (hom-to-reach, reachcolour-to-hom, reach-to-mc, reach-to-pdet)");
  }
  write_text_file(args.out + ".record.json", record.dump() + "\n");
  record["out"] = args.out;
  record["gateApplied"] = false;
  return record;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting for parameterised counting problems", "paracount"};
  app.require_subcommand(1);
  Args args;

  struct Command {
    CLI::App* app;
    Handler handler;
  };
  std::vector<Command> commands;

  auto graph_options = [&](CLI::App* sub, bool endpoints) {
    sub->add_option("--graph", args.graph, "Graph file");
    if (endpoints) {
      sub->add_option("--s", args.s, "Start vertex (default: graph file)");
      sub->add_option("--t", args.t, "End vertex (default: graph file)");
    }
  };

  auto* reach = app.add_subcommand("reach", "s-t walks with exactly k vertices");
  graph_options(reach, true);
  reach->add_option("--k", args.k, "Number of vertices on the walk");
  commands.push_back({reach, run_reach});

  auto* logreach = app.add_subcommand("logreach", "s-t walks with a edges, gated on a <= k*log|V|");
  graph_options(logreach, true);
  logreach->add_option("--a", args.a, "Number of edges");
  logreach->add_option("--k", args.k, "Parameter");
  logreach->add_option("--b", args.b, "Out-degree bound")->capture_default_str();
  commands.push_back({logreach, run_logreach});

  auto* logwalk = app.add_subcommand("logwalk", "all walks with a edges, gated on a <= k*log|V|");
  graph_options(logwalk, false);
  logwalk->add_option("--a", args.a, "Number of edges");
  logwalk->add_option("--k", args.k, "Parameter");
  logwalk->add_option("--b", args.b, "Out-degree bound")->capture_default_str();
  commands.push_back({logwalk, run_logwalk});

  auto* reachcolour = app.add_subcommand("reachcolour", "colour-respecting s-t walks");
  graph_options(reachcolour, true);
  reachcolour->add_option("--k", args.k, "Number of vertices on the walk");
  commands.push_back({reachcolour, run_reachcolour});

  auto* reach2cnf = app.add_subcommand("reach2cnf", "s-t walks whose edge set satisfies a CNF");
  graph_options(reach2cnf, true);
  reach2cnf->add_option("--cnf", args.cnf, "DIMACS file (variable i is edge i-1)");
  reach2cnf->add_option("--a", args.a, "Number of edges");
  reach2cnf->add_option("--k", args.k, "Parameter");
  commands.push_back({reach2cnf, run_reach2cnf});

  auto* cyclecover = app.add_subcommand("cyclecover2cnf", "CNF-constrained cycle covers");
  graph_options(cyclecover, false);
  cyclecover->add_option("--cnf", args.cnf, "DIMACS file (variable i is edge i-1)");
  cyclecover->add_option("--a", args.a, "Vertices per cycle budget");
  cyclecover->add_option("--k", args.k, "Cycle budget");
  commands.push_back({cyclecover, run_cyclecover2cnf});

  auto* mc = app.add_subcommand("mc", "satisfying assignments of a quantifier-free formula");
  mc->add_option("--formula", args.formula, "Formula file");
  mc->add_option("--structure", args.structure, "Structure file");
  mc->add_option("--k", args.k, "Parameter (must equal the formula size)");
  mc->add_option("--method", args.method, "brute or local");
  mc->add_option("--r", args.r, "Locality bound for --method local");
  mc->add_option("--arity", args.arity, "Arity bound for --method local");
  commands.push_back({mc, run_mc});

  auto* hom = app.add_subcommand("hom", "homomorphisms from the coloured path P_n*");
  hom->add_option("--n", args.n, "Path length");
  hom->add_option("--target", args.target, "Target structure file");
  hom->add_option("--k", args.k, "Parameter");
  hom->add_option("--method", args.method, "layered or oracle");
  hom->add_option("--limit", args.limit, "Enumeration cap");
  commands.push_back({hom, run_hom});

  auto* pdet = app.add_subcommand("pdet", "parameterised determinant");
  pdet->add_option("--matrix", args.matrix, "Matrix file");
  pdet->add_option("--k", args.k, "Number of moved points");
  pdet->add_option("--method", args.method, "direct or clow");
  pdet->add_option("--limit", args.limit, "Enumeration cap");
  commands.push_back({pdet, run_pdet});

  auto* bp = app.add_subcommand("bp", "branching programs with nondeterministic inputs");
  bp->add_option("--program", args.program, "Program file");
  bp->add_option("--x", args.x, "Ordinary input as a 0/1 string");
  bp->add_option("--y", args.y, "Nondeterministic input for --mode accepts");
  bp->add_option("--mode", args.mode, "count, fast, accepts, certify or stagger");
  bp->add_option("--out", args.out, "Output file for --mode stagger");
  commands.push_back({bp, run_bp});

  auto* reduce = app.add_subcommand("reduce", "run a count-preserving reduction");
  reduce->add_option("--name", args.name,
                     "hom-to-reach, reachcolour-to-hom, reach-to-mc or reach-to-pdet");
  reduce->add_option("--in", args.in, "Input instance file");
  reduce->add_option("--out", args.out, "Output instance file");
  reduce->add_option("--s", args.s, "Start vertex (default: graph file)");
  reduce->add_option("--t", args.t, "End vertex (default: graph file)");
  reduce->add_option("--k", args.k, "Parameter");
  reduce->add_option("--n", args.n, "Path length for hom-to-reach");
  commands.push_back({reduce, run_reduce});

  auto* selftest = app.add_subcommand("selftest", "run the cross-oracle property suites");
  selftest->add_option("--seed", args.seed, "Random seed")->capture_default_str();
  selftest->add_option("--scale", args.scale, "smoke or full")
      ->check(CLI::IsMember({"smoke", "full"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
        .count();
  };

  if (selftest->parsed()) {
    const auto scale = args.scale == "full" ? check::Scale::Full : check::Scale::Smoke;
    json results = json::array();
    bool all_passed = true;
    for (const check::SuiteEntry& entry : check::suites()) {
      const check::PropertyResult r = entry.run(args.seed, scale);
      all_passed = all_passed && r.passed;
      err << (r.passed ? "PASS " : "FAIL ") << "criterion " << r.criterion << " " << r.name << " ("
          << r.cases << " cases, " << static_cast<long long>(r.elapsed_ms) << " ms)"
          << (r.passed ? "" : ": " + r.detail) << "\n";
      results.push_back({{"criterion", r.criterion},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"cases", r.cases},
                         {"elapsedMs", r.elapsed_ms},
                         {"detail", r.detail}});
    }
    out << json{{"passed", all_passed},
                {"seed", args.seed},
                {"scale", args.scale},
                {"results", std::move(results)},
                {"elapsedMs", elapsed_ms()}}
               .dump()
        << "\n";
    return all_passed ? 0 : 1;
  }

  for (const Command& command : commands) {
    if (!command.app->parsed()) continue;
    Context ctx(command.app, args);
    try {
      json report = command.handler(ctx, args);
      report["elapsedMs"] = elapsed_ms();
      report["digest"] = ctx.digest();
      out << report.dump() << "\n";
      return 0;
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      err << e.what() << "\n";
      return 1;
    }
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace paracount
