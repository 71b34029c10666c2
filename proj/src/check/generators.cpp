#include <algorithm>
#include <map>
#include <set>

#include "paracount/check.hpp"

namespace paracount::check {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

DirectedGraph random_graph(Rng& rng, std::size_t n, double density, bool loops) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if ((u != v || loops) && coin(rng, density)) edges.push_back({u, v});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return DirectedGraph::create(n, std::move(edges));
}

DirectedGraph random_dag(Rng& rng, std::size_t n, double density) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng, density)) edges.push_back({u, v});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return DirectedGraph::create(n, std::move(edges));
}

DirectedGraph random_bounded_graph(Rng& rng, std::size_t n, std::size_t b, bool loops) {
  std::vector<Edge> edges;
  std::vector<Vertex> targets(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) targets[v] = v;
    std::shuffle(targets.begin(), targets.end(), rng);
    const std::size_t degree = uniform(rng, 0, std::min(b, n));
    std::size_t taken = 0;
    for (Vertex v : targets) {
      if (taken == degree) break;
      if (v == u && !loops) continue;
      edges.push_back({u, v});
      ++taken;
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return DirectedGraph::create(n, std::move(edges));
}

ZeroOneMatrix random_matrix(Rng& rng, std::size_t n, double density) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (auto& row : rows) {
    for (int& entry : row) entry = coin(rng, density) ? 1 : 0;
  }
  return ZeroOneMatrix::create(rows);
}

ZeroOneMatrix random_unit_diagonal_matrix(Rng& rng, std::size_t n, double density) {
  auto rows = random_matrix(rng, n, density).rows();
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return ZeroOneMatrix::create(rows);
}

EdgeCNF random_cnf(Rng& rng, const DirectedGraph& g, std::size_t max_clauses) {
  std::vector<Clause> clauses(uniform(rng, 0, max_clauses));
  for (Clause& clause : clauses) {
    if (g.edge_count() == 0 || coin(rng, 0.05)) continue;  // empty clause
    const std::size_t width = uniform(rng, 1, 3);
    for (std::size_t i = 0; i < width; ++i) {
      clause.push_back({static_cast<EdgeId>(uniform(rng, 0, g.edge_count() - 1)), coin(rng, 0.5)});
    }
  }
  return EdgeCNF::create(g, std::move(clauses));
}

ColouredInstance random_coloured(Rng& rng, std::size_t n, std::uint64_t m) {
  const Vertex s = static_cast<Vertex>(uniform(rng, 0, n - 1));
  Vertex t = s;
  if (m > 1) {
    while (t == s) t = static_cast<Vertex>(uniform(rng, 0, n - 1));
  }
  std::vector<std::uint32_t> colours(n);
  for (auto& c : colours) c = static_cast<std::uint32_t>(uniform(rng, 1, m));
  colours[s] = 1;
  colours[t] = static_cast<std::uint32_t>(m);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const bool step = colours[v] == colours[u] + 1;
      if (coin(rng, step ? 0.6 : 0.15)) edges.push_back({u, v});
    }
  }
  return {VertexColouring::create(DirectedGraph::create(n, std::move(edges)), colours), s, t, m};
}

namespace {

QFFormula random_tree(Rng& rng, const std::vector<QFFormula>& atoms, std::size_t lo,
                      std::size_t hi, bool allow_negation) {
  if (allow_negation && coin(rng, 0.2)) {
    return QFFormula::negation(random_tree(rng, atoms, lo, hi, false));
  }
  if (hi - lo == 1) return atoms[lo];
  const std::size_t parts = uniform(rng, 2, std::min<std::size_t>(3, hi - lo));
  std::set<std::size_t> cuts;
  while (cuts.size() + 1 < parts) cuts.insert(uniform(rng, lo + 1, hi - 1));
  std::vector<QFFormula> children;
  std::size_t start = lo;
  for (std::size_t cut : cuts) {
    children.push_back(random_tree(rng, atoms, start, cut, true));
    start = cut;
  }
  children.push_back(random_tree(rng, atoms, start, hi, true));
  return coin(rng, 0.5) ? QFFormula::conjunction(children) : QFFormula::disjunction(children);
}

}  // namespace

LocalFormula random_local_formula(Rng& rng, std::uint64_t r, std::size_t max_vars) {
  const std::size_t atom_count = uniform(rng, 1, 5);
  std::map<std::string, std::size_t> first_use;
  std::vector<QFFormula> atoms;
  for (std::size_t i = 0; i < atom_count; ++i) {
    std::vector<std::string> reusable;
    for (const auto& [name, first] : first_use) {
      if (i - first <= r) reusable.push_back(name);
    }
    auto pick = [&]() {
      if (coin(rng, 0.15)) return Term::constant("c");
      const bool fresh_ok = first_use.size() < max_vars;
      if (!reusable.empty() && (!fresh_ok || coin(rng, 0.6))) {
        return Term::var(reusable[uniform(rng, 0, reusable.size() - 1)]);
      }
      if (!fresh_ok) return Term::constant("c");
      const std::string name = "v" + std::to_string(first_use.size() + 1);
      first_use[name] = i;
      reusable.push_back(name);
      return Term::var(name);
    };
    const std::uint64_t kind = uniform(rng, 0, 99);
    if (kind < 45) {
      Term a = pick();
      Term b = pick();
      atoms.push_back(QFFormula::atom("E", {a, b}));
    } else if (kind < 75) {
      atoms.push_back(QFFormula::atom("U", {pick()}));
    } else {
      Term a = pick();
      Term b = pick();
      atoms.push_back(QFFormula::equality(a, b));
    }
  }
  QFFormula phi = random_tree(rng, atoms, 0, atoms.size(), true);

  const std::size_t universe = uniform(rng, 1, 5);
  std::vector<Tuple> e_tuples;
  std::vector<Tuple> u_tuples;
  const double density = static_cast<double>(uniform(rng, 1, 9)) / 10.0;
  for (Element a = 0; a < universe; ++a) {
    if (coin(rng, 0.5)) u_tuples.push_back({a});
    for (Element b = 0; b < universe; ++b) {
      if (coin(rng, density)) e_tuples.push_back({a, b});
    }
  }
  RelationalStructure structure = RelationalStructure::create(
      Vocabulary::create({{"E", 2}, {"U", 1}}, {"c"}), universe,
      {{"E", e_tuples}, {"U", u_tuples}},
      {{"c", static_cast<Element>(uniform(rng, 0, universe - 1))}});
  return {std::move(phi), std::move(structure), r};
}

RelationalStructure random_hom_target(Rng& rng, std::size_t n, std::size_t universe) {
  std::map<std::string, std::vector<Tuple>> interpretation;
  const double density = static_cast<double>(uniform(rng, 2, 8)) / 10.0;
  auto& edges = interpretation["E"];
  for (Element a = 0; a < universe; ++a) {
    for (Element b = 0; b < universe; ++b) {
      if (coin(rng, density)) edges.push_back({a, b});
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    auto& cls = interpretation["C" + std::to_string(i)];
    for (Element a = 0; a < universe; ++a) {
      if (coin(rng, 0.4)) cls.push_back({a});
    }
  }
  return RelationalStructure::create(path_star_vocabulary(n), universe, interpretation, {});
}

namespace {

struct BpSkeleton {
  std::vector<std::vector<NodeId>> layers;
  std::vector<NodeLabel::Kind> kinds;
  std::vector<RawBpEdge> edges;
  NodeId sink = 0;
};

BpSkeleton random_skeleton(Rng& rng, std::uint32_t num_x, std::uint32_t num_y) {
  BpSkeleton sk;
  const std::size_t layer_count = uniform(rng, 2, 5);
  NodeId next = 0;
  for (std::size_t i = 0; i < layer_count; ++i) {
    const std::size_t width = (i == 0 || i + 1 == layer_count) ? 1 : uniform(rng, 1, 3);
    std::vector<NodeId> layer;
    for (std::size_t j = 0; j < width; ++j) layer.push_back(next++);
    sk.layers.push_back(std::move(layer));
  }
  sk.sink = next - 1;
  sk.kinds.assign(next, NodeLabel::Kind::Pass);
  auto later_node = [&](std::size_t layer) {
    std::size_t target = layer + 1;
    if (target + 1 < layer_count && coin(rng, 0.3)) target = uniform(rng, target, layer_count - 1);
    const auto& candidates = sk.layers[target];
    return candidates[uniform(rng, 0, candidates.size() - 1)];
  };
  for (std::size_t i = 0; i + 1 < layer_count; ++i) {
    for (NodeId v : sk.layers[i]) {
      std::vector<NodeLabel::Kind> options{NodeLabel::Kind::Pass};
      if (num_x > 0) options.insert(options.end(), 2, NodeLabel::Kind::X);
      if (num_y > 0) options.insert(options.end(), 2, NodeLabel::Kind::Y);
      sk.kinds[v] = options[uniform(rng, 0, options.size() - 1)];
      if (sk.kinds[v] == NodeLabel::Kind::Pass) {
        sk.edges.push_back({v, later_node(i), std::nullopt});
        continue;
      }
      for (std::int64_t bit = 0; bit <= 1; ++bit) {
        if (coin(rng, 0.85)) sk.edges.push_back({v, later_node(i), bit});
      }
    }
  }
  return sk;
}

}  // namespace

BranchingProgram random_ordered_bp(Rng& rng, std::uint32_t num_x, std::uint32_t num_y) {
  while (true) {
    const BpSkeleton sk = random_skeleton(rng, num_x, num_y);
    for (int attempt = 0; attempt < 20; ++attempt) {
      std::map<NodeId, NodeLabel> labels;
      for (NodeId v = 0; v < sk.kinds.size(); ++v) {
        if (v == sk.sink) continue;
        switch (sk.kinds[v]) {
          case NodeLabel::Kind::X:
            labels[v] = NodeLabel::x(static_cast<std::uint32_t>(uniform(rng, 1, num_x)));
            break;
          case NodeLabel::Kind::Y:
            labels[v] = NodeLabel::y(static_cast<std::uint32_t>(uniform(rng, 1, num_y)));
            break;
          case NodeLabel::Kind::Pass:
            labels[v] = NodeLabel::pass();
            break;
        }
      }
      BranchingProgram p =
          BranchingProgram::create(sk.layers, labels, sk.edges, num_x, num_y, 0, sk.sink);
      if (reads_y_in_order(p)) return p;
    }
  }
}

std::vector<std::vector<bool>> all_bit_strings(std::size_t width) {
  std::vector<std::vector<bool>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits) {
    std::vector<bool> x(width);
    for (std::size_t i = 0; i < width; ++i) x[i] = (bits >> i) & 1U;
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace paracount::check
