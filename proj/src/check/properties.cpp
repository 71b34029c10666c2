#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "paracount/check.hpp"
#include "paracount/error.hpp"
#include "paracount/walk_count.hpp"

namespace paracount::check {

namespace {

constexpr std::uint64_t kLimit = 10'000'000;

class Run {
 public:
  Run(int criterion, std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.criterion = criterion;
    result_.name = std::move(name);
  }

  void fail(const std::string& detail) {
    if (!result_.passed) return;
    result_.passed = false;
    result_.detail = "case " + std::to_string(result_.cases) + ": " + detail;
  }

  void expect(bool ok, const std::string& detail) {
    if (!ok) fail(detail);
  }

  void expect_equal(const BigInt& actual, const BigInt& expected, const std::string& what) {
    if (actual != expected) {
      fail(what + " gave " + to_decimal(actual) + ", expected " + to_decimal(expected));
    }
  }

  // Runs one case; domain errors count as failures rather than aborting.
  template <typename Body>
  void run_case(Body&& body) {
    ++result_.cases;
    try {
      body();
    } catch (const Error& e) {
      fail(std::string("unexpected error ") + e.what());
    }
  }

  PropertyResult finish() {
    result_.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    return result_;
  }

 private:
  PropertyResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::uint64_t cases(Scale scale, std::uint64_t full) {
  return scale == Scale::Full ? full : std::max<std::uint64_t>(full / 10, 5);
}

Rng seeded(std::uint64_t seed, std::uint64_t criterion) {
  return Rng(seed * 0x9E3779B97F4A7C15ULL + criterion);
}

double density(Rng& rng) { return static_cast<double>(uniform(rng, 2, 9)) / 10.0; }

Vertex any_vertex(Rng& rng, std::size_t n) { return static_cast<Vertex>(uniform(rng, 0, n - 1)); }

std::string describe(const ZeroOneMatrix& a) {
  std::string out = "[";
  for (const auto& row : a.rows()) {
    out += "[";
    for (int entry : row) out += std::to_string(entry);
    out += "]";
  }
  return out + "]";
}

std::string describe(const ClowSequence& w) {
  std::string out = "(";
  for (const Clow& c : w.clows) {
    out += "[";
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      out += (i ? "," : "") + std::to_string(c.body[i]);
    }
    out += "]";
  }
  return out + ")";
}

std::multiset<std::pair<Vertex, Vertex>> traversed_edges(const ClowSequence& w) {
  std::multiset<std::pair<Vertex, Vertex>> edges;
  for (const Clow& c : w.clows) {
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      edges.insert({c.body[i], c.body[(i + 1) % c.body.size()]});
    }
  }
  return edges;
}

ZeroOneMatrix complete_matrix(std::size_t n) {
  return ZeroOneMatrix::create(std::vector<std::vector<int>>(n, std::vector<int>(n, 1)));
}

}  // namespace

PropertyResult check_clow_expansion(std::uint64_t seed, Scale scale) {
  Run run(1, "clow expansion equals pdet");
  Rng rng = seeded(seed, 1);
  for (std::uint64_t i = 0; i < cases(scale, 500); ++i) {
    run.run_case([&] {
      const ZeroOneMatrix a = random_matrix(rng, uniform(rng, 1, 5), density(rng));
      for (std::uint64_t k = 0; k <= a.size(); ++k) {
        const SignedValue direct = pdet_direct(a, k);
        const std::string where = describe(a) + " k=" + std::to_string(k);
        run.expect_equal(pdet_clow(a, k, kLimit), direct, "pdet_clow " + where);
        run.expect_equal(clow_expansion(a, k, clow_sign), direct, "signed clow sum " + where);
      }
    });
  }
  return run.finish();
}

PropertyResult check_involution(std::uint64_t seed, Scale scale) {
  Run run(2, "eta is a sign-reversing involution");
  Rng rng = seeded(seed, 2);
  std::vector<ZeroOneMatrix> matrices;
  for (std::size_t n = 1; n <= 4; ++n) matrices.push_back(complete_matrix(n));
  for (std::uint64_t i = 0; i < cases(scale, 60); ++i) {
    matrices.push_back(random_matrix(rng, uniform(rng, 1, 4), density(rng)));
  }
  for (const ZeroOneMatrix& a : matrices) {
    for (std::uint64_t k = 0; k <= 4; ++k) {
      run.run_case([&] {
        const auto all = enumerate_k_clow_sequences(a, k, kLimit);
        std::set<std::string> members;
        for (const ClowSequence& w : all) members.insert(describe(w));
        SignedValue fixed_sum = 0;
        SignedValue moved_sum = 0;
        for (const ClowSequence& w : all) {
          const std::string where = describe(a) + " W=" + describe(w);
          const ClowSequence image = eta(w);
          validate_k_clow_sequence(image);
          run.expect(eta(image) == w, "eta(eta(W)) != W for " + where);
          const bool fixed = image == w;
          run.expect(fixed == w.is_cycle_cover(), "fixed point mismatch for " + where);
          run.expect(image.total_edges() == w.total_edges(), "edge count changed for " + where);
          run.expect(members.contains(describe(image)), "eta leaves the k-clow set for " + where);
          if (fixed) {
            fixed_sum += clow_sign(w);
          } else {
            moved_sum += clow_sign(w);
            run.expect(clow_sign(image) == -clow_sign(w), "sign not flipped for " + where);
            run.expect(traversed_edges(image) == traversed_edges(w),
                       "edge multiset changed for " + where);
          }
        }
        const std::string where = describe(a) + " k=" + std::to_string(k);
        run.expect_equal(moved_sum, 0, "sum over non-fixed sequences " + where);
        if (k <= a.size()) run.expect_equal(fixed_sum, pdet_direct(a, k), "fixed-point sum " + where);
      });
    }
  }
  return run.finish();
}

PropertyResult check_determinant(std::uint64_t seed, Scale scale) {
  Run run(3, "sum of pdet equals det");
  Rng rng = seeded(seed, 3);
  for (std::uint64_t i = 0; i < cases(scale, 200); ++i) {
    run.run_case([&] {
      const ZeroOneMatrix a = random_unit_diagonal_matrix(rng, uniform(rng, 1, 5), density(rng));
      run.expect_equal(det_cross_check(a), determinant_by_permutations(a), describe(a));
    });
  }
  return run.finish();
}

PropertyResult check_back_edge(std::uint64_t seed, Scale scale) {
  Run run(4, "back-edge reduction identity");
  Rng rng = seeded(seed, 4);
  for (std::uint64_t i = 0; i < cases(scale, 200); ++i) {
    run.run_case([&] {
      const std::size_t n = uniform(rng, 2, 6);
      const DirectedGraph g = random_dag(rng, n, density(rng));
      Vertex s = any_vertex(rng, n);
      Vertex t = any_vertex(rng, n);
      while (t == s) t = any_vertex(rng, n);
      if (coin(rng, 0.8) && s > t) std::swap(s, t);
      const std::uint64_t k = uniform(rng, 1, std::min<std::uint64_t>(5, n));
      const PdetInstance out = reduce_reach_to_pdet(g, s, t, k);
      const WalkCount walks = reach_oracle(g, s, t, k);
      run.expect_equal(pdet_direct(out.matrix, k), out.recovery_sign * walks,
                       "pdet(A',k) for " + describe(out.matrix) + " k=" + std::to_string(k));
      run.expect_equal(count_reach(g, s, t, k), walks, "count_reach on the DAG");
    });
  }
  return run.finish();
}

PropertyResult check_walk_counters(std::uint64_t seed, Scale scale) {
  Run run(5, "walk counters match enumeration");
  Rng rng = seeded(seed, 5);
  std::uint64_t gate_zero = 0;
  for (std::uint64_t i = 0; i < cases(scale, 300); ++i) {
    run.run_case([&] {
      const std::size_t n = uniform(rng, 1, 6);
      const DirectedGraph g = random_bounded_graph(rng, n, uniform(rng, 1, 3), coin(rng, 0.5));
      const std::string shape = "n=" + std::to_string(n) + " |E|=" + std::to_string(g.edge_count());
      const Vertex s = any_vertex(rng, n);
      const Vertex t = any_vertex(rng, n);

      const std::uint64_t k = uniform(rng, 0, 6);
      run.expect_equal(count_reach(g, s, t, k), reach_oracle(g, s, t, k), "count_reach " + shape);
      if (k >= 2) {
        WalkCount recurrence = 0;
        for (Vertex u = 0; u < n; ++u) {
          if (g.has_edge(u, t)) recurrence += count_reach(g, s, u, k - 1);
        }
        run.expect_equal(count_reach(g, s, t, k), recurrence, "reach recurrence " + shape);
      }

      const std::uint64_t a = uniform(rng, 0, 6);
      const std::uint64_t kp = uniform(rng, 0, 3);
      const std::uint64_t b = std::max<std::uint64_t>(2, max_out_degree(g));
      if (!log_gate_passes(a, kp, n)) ++gate_zero;
      const WalkCount reach_b = count_log_reach_b(g, s, t, a, kp, b);
      run.expect_equal(reach_b, log_reach_oracle(g, s, t, a, kp), "count_log_reach_b " + shape);
      const WalkCount walk_b = count_log_walk_b(g, a, kp, b);
      run.expect_equal(walk_b, log_walk_oracle(g, a, kp), "count_log_walk_b " + shape);
      WalkCount summed = 0;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) summed += count_log_reach_b(g, u, v, a, kp, b);
      }
      run.expect_equal(walk_b, summed, "log walk as a sum of log reach " + shape);

      const std::uint64_t m = uniform(rng, 1, std::min<std::size_t>(n, 5));
      const ColouredInstance ci = random_coloured(rng, n, m);
      const std::uint64_t kc = coin(rng, 0.8) ? m : uniform(rng, 0, 6);
      run.expect_equal(count_reach_colour(ci.colouring, ci.s, ci.t, kc),
                       reach_colour_oracle(ci.colouring, ci.s, ci.t, kc),
                       "count_reach_colour " + shape);

      const DirectedGraph dag = random_dag(rng, n, density(rng));
      run.expect_equal(count_reach(dag, s, t, k), path_oracle(dag, s, t, k), "DAG paths " + shape);
    });
  }
  if (scale == Scale::Full) run.expect(gate_zero > 0, "no gate-zero case was generated");
  return run.finish();
}

PropertyResult check_cnf_counters(std::uint64_t seed, Scale scale) {
  Run run(6, "CNF counters match enumerate-then-filter");
  Rng rng = seeded(seed, 6);
  for (std::uint64_t i = 0; i < cases(scale, 200); ++i) {
    run.run_case([&] {
      const std::size_t n = uniform(rng, 1, 6);
      const DirectedGraph g = random_bounded_graph(rng, n, 2, true);
      const EdgeCNF phi = random_cnf(rng, g, 3);
      const EdgeCNF empty;
      const std::string shape = "n=" + std::to_string(n) + " |E|=" + std::to_string(g.edge_count()) +
                                " |phi|=" + std::to_string(phi.size());
      const Vertex s = any_vertex(rng, n);
      const Vertex t = any_vertex(rng, n);
      const std::uint64_t a = uniform(rng, 0, 4);
      const std::uint64_t k = uniform(rng, 0, 3);

      run.expect_equal(count_log_reach2_cnf(g, s, t, phi, a, k),
                       log_reach2_cnf_oracle(g, s, t, phi, a, k), "count_log_reach2_cnf " + shape);
      run.expect_equal(count_log_reach2_cnf(g, s, t, empty, a, k),
                       count_log_reach_b(g, s, t, a, k, 2), "empty CNF vs log reach " + shape);

      const std::uint64_t ca = uniform(rng, 0, 4);
      const std::uint64_t ck = uniform(rng, 0, 3);
      run.expect_equal(count_cycle_cover2_cnf(g, phi, ca, ck), cycle_cover2_cnf_oracle(g, phi, ca, ck),
                       "count_cycle_cover2_cnf " + shape);
      run.expect_equal(count_cycle_cover2_cnf(g, empty, ca, ck),
                       cycle_cover2_cnf_oracle(g, empty, ca, ck),
                       "count_cycle_cover2_cnf without constraints " + shape);
    });
  }
  return run.finish();
}

PropertyResult check_locality(std::uint64_t seed, Scale scale) {
  Run run(7, "local sweep equals brute force");
  Rng rng = seeded(seed, 7);
  for (std::uint64_t i = 0; i < cases(scale, 200); ++i) {
    run.run_case([&] {
      const LocalFormula lf = random_local_formula(rng, uniform(rng, 0, 2), 4);
      const std::uint64_t size = formula_size(lf.formula);
      const std::uint64_t k = coin(rng, 0.9) ? size : uniform(rng, 1, size + 2);
      const std::string where = "r=" + std::to_string(lf.r) + " size=" + std::to_string(size) +
                                " k=" + std::to_string(k);
      run.expect(locality_radius(lf.formula) <= lf.r, "generator exceeded locality " + where);
      run.expect(max_arity(lf.formula) <= 2, "generator exceeded arity " + where);
      run.expect(lf.formula.free_variables().size() <= 4, "too many variables " + where);
      const WalkCount brute = count_mc(lf.formula, lf.structure, k);
      run.expect_equal(count_mc_local(lf.formula, lf.structure, k, lf.r, 2), brute,
                       "count_mc_local " + where);
      BigInt cap = 1;
      for (std::size_t v = 0; v < lf.formula.free_variables().size(); ++v) {
        cap *= lf.structure.universe_size();
      }
      run.expect(brute <= cap, "count exceeds |dom|^v " + where);
    });
  }
  return run.finish();
}

PropertyResult check_parsimony(std::uint64_t seed, Scale scale) {
  Run run(8, "reductions are parsimonious");
  Rng rng = seeded(seed, 8);
  const std::uint64_t per = cases(scale, 100);

  std::vector<HomInstance> hom;
  std::vector<ReachColourInstance> colour;
  std::vector<ReachInstance> reach;
  std::vector<ReachInstance> dags;
  for (std::uint64_t i = 0; i < per; ++i) {
    const std::size_t n = uniform(rng, 2, 4);
    hom.push_back({n, random_hom_target(rng, n, uniform(rng, 1, 5)), uniform(rng, n - 1, n + 2)});

    const std::uint64_t m = uniform(rng, 2, 4);
    ColouredInstance ci = random_coloured(rng, uniform(rng, m, 6), m);
    colour.push_back({std::move(ci.colouring), ci.s, ci.t, m});

    const std::size_t gn = uniform(rng, 1, 6);
    const DirectedGraph g = random_graph(rng, gn, density(rng), coin(rng, 0.5));
    reach.push_back({g, any_vertex(rng, gn), any_vertex(rng, gn), uniform(rng, 2, 5)});

    const std::size_t dn = uniform(rng, 2, 6);
    Vertex s = any_vertex(rng, dn);
    Vertex t = any_vertex(rng, dn);
    while (t == s) t = any_vertex(rng, dn);
    if (s > t) std::swap(s, t);
    dags.push_back({random_dag(rng, dn, density(rng)), s, t,
                    uniform(rng, 1, std::min<std::uint64_t>(5, dn))});
  }

  auto reach_count = [](const ReachInstance& in) { return reach_oracle(in.graph, in.s, in.t, in.k); };
  auto absorb = [&](const ParsimonyReport& report) {
    run.run_case([&] {
      if (!report.passed()) {
        run.fail(report.reduction + " instance " + std::to_string(report.failures[0].instance) +
                 ": " + report.failures[0].detail);
      }
      run.expect(report.checked == per, report.reduction + " checked too few instances");
    });
  };

  absorb(verify_parsimonious<HomInstance, ReachInstance>(
      hom_to_reach_reduction(), hom,
      [](const HomInstance& in) -> BigInt {
        if (in.n > in.k) return 0;
        return count_hom_oracle(make_path_star(in.n).structure, in.target, kLimit);
      },
      reach_count));

  absorb(verify_parsimonious<ReachColourInstance, HomTarget>(
      reach_colour_to_hom_reduction(), colour,
      [](const ReachColourInstance& in) {
        return reach_colour_oracle(in.colouring, in.s, in.t, in.k);
      },
      [](const HomTarget& out) {
        return count_hom_oracle(out.pattern.structure, out.target, kLimit);
      }));

  absorb(verify_parsimonious<ReachInstance, McInstance>(
      reach_to_mc_reduction(), reach, reach_count,
      [](const McInstance& out) { return count_mc(out.formula, out.structure, out.k); }));
  for (const ReachInstance& in : reach) {
    run.run_case([&] {
      const McInstance out = reduce_reach_to_mc(in.graph, in.s, in.t, in.k);
      run.expect(locality_radius(out.formula) == 1 && max_arity(out.formula) == 2,
                 "phi_k is not 1-local of arity 2");
    });
  }

  auto pdet_value = [](const PdetInstance& out) -> BigInt {
    return out.recovery_sign * pdet_direct(out.matrix, out.k);
  };
  absorb(verify_parsimonious<ReachInstance, PdetInstance>(reach_to_pdet_reduction(), dags,
                                                          reach_count, pdet_value));

  // The verifier must notice a corrupted transform.
  auto mutant = reach_to_pdet_reduction();
  mutant.transform = [](const ReachInstance& in) {
    PdetInstance out = reduce_reach_to_pdet(in.graph, in.s, in.t, in.k);
    out.recovery_sign = -out.recovery_sign;
    return out;
  };
  run.run_case([&] {
    const auto report = verify_parsimonious<ReachInstance, PdetInstance>(mutant, dags, reach_count,
                                                                         pdet_value);
    run.expect(!report.passed(), "sign-flipped reach-to-pdet mutant went undetected");
  });
  return run.finish();
}

PropertyResult check_hom_correspondence(std::uint64_t seed, Scale scale) {
  Run run(9, "walks correspond to homomorphisms");
  Rng rng = seeded(seed, 9);
  for (std::uint64_t i = 0; i < cases(scale, 100); ++i) {
    run.run_case([&] {
      const std::size_t n = uniform(rng, 2, 4);
      const RelationalStructure b = random_hom_target(rng, n, uniform(rng, 1, 5));
      const PathStarStructure pattern = make_path_star(n);
      const HomReachGraph layered = build_hom_reach_graph(n, b);
      const auto walks =
          enumerate_walks(layered.graph, layered.s, layered.t, layered.walk_vertices - 1, kLimit);
      const auto homs = enumerate_homomorphisms(pattern.structure, b, kLimit);
      std::set<ElementMap> images;
      for (const Walk& w : walks) {
        const ElementMap h = walk_to_homomorphism(layered, w);
        run.expect(is_homomorphism(h, pattern.structure, b), "walk image is not a homomorphism");
        images.insert(h);
      }
      const std::string where = "n=" + std::to_string(n) + " |B|=" + std::to_string(b.universe_size());
      run.expect(images.size() == walks.size(), "two walks map to one homomorphism, " + where);
      run.expect(std::set<ElementMap>(homs.begin(), homs.end()) == images,
                 "walk images differ from the homomorphisms, " + where);
      run.expect_equal(count_hom_path_star(n, b, n), homs.size(), "count_hom_path_star " + where);
    });
  }
  return run.finish();
}

PropertyResult check_branching_programs(std::uint64_t seed, Scale scale) {
  Run run(10, "branching-program counters and staggering");
  Rng rng = seeded(seed, 10);
  for (std::uint64_t i = 0; i < cases(scale, 300); ++i) {
    run.run_case([&] {
      const auto num_x = static_cast<std::uint32_t>(uniform(rng, 0, 4));
      const auto num_y = static_cast<std::uint32_t>(uniform(rng, 0, 4));
      const BranchingProgram p = random_ordered_bp(rng, num_x, num_y);
      const BranchingProgram staggered = stagger(p);
      run.expect(check_read_once_certified(staggered).certified(), "stagger output not certified");
      const bool certified = check_read_once_certified(p).certified();
      for (const auto& x : all_bit_strings(num_x)) {
        const WalkCount acc = bp_count_acc(p, x);
        run.expect_equal(bp_count_acc(staggered, x), acc, "#acc after stagger");
        run.expect_equal(bp_count_fast(staggered, x), acc, "bp_count_fast on the staggered program");
        if (certified) run.expect_equal(bp_count_fast(p, x), acc, "bp_count_fast");
      }
    });
  }
  return run.finish();
}

const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> table{
      {1, "clow expansion", 60, check_clow_expansion},
      {2, "involution", 30, check_involution},
      {3, "determinant", 30, check_determinant},
      {4, "back edge", 30, check_back_edge},
      {5, "walk counters", 30, check_walk_counters},
      {6, "cnf counters", 30, check_cnf_counters},
      {7, "locality", 60, check_locality},
      {8, "parsimony", 60, check_parsimony},
      {9, "hom correspondence", 30, check_hom_correspondence},
      {10, "branching programs", 30, check_branching_programs},
  };
  return table;
}

std::vector<PropertyResult> run_suites(std::uint64_t seed, Scale scale) {
  std::vector<PropertyResult> results;
  for (const SuiteEntry& entry : suites()) results.push_back(entry.run(seed, scale));
  return results;
}

}  // namespace paracount::check
