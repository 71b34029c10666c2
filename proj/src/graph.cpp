#include "paracount/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "paracount/error.hpp"

namespace paracount {

DirectedGraph DirectedGraph::create(std::size_t n, std::vector<Edge> edges) {
  DirectedGraph g;
  g.n_ = n;
  g.successors_.resize(n);
  g.out_edges_.resize(n);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    if (e.source >= n || e.target >= n) {
      fail("endpoint-out-of-range", "edge " + std::to_string(id) + " = (" +
                                        std::to_string(e.source) + "," +
                                        std::to_string(e.target) + ") with n=" +
                                        std::to_string(n));
    }
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    fail("duplicate-edge",
         "(" + std::to_string(dup->source) + "," + std::to_string(dup->target) + ")");
  }
  g.edges_ = std::move(edges);

  std::vector<EdgeId> order(g.edges_.size());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return g.edges_[a] < g.edges_[b]; });
  for (EdgeId id : order) {
    const Edge& e = g.edges_[id];
    g.successors_[e.source].push_back(e.target);
    g.out_edges_[e.source].push_back(id);
  }
  return g;
}

bool DirectedGraph::has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

std::optional<EdgeId> DirectedGraph::edge_id(Vertex u, Vertex v) const {
  if (u >= n_) return std::nullopt;
  const auto& succ = successors_[u];
  auto it = std::lower_bound(succ.begin(), succ.end(), v);
  if (it == succ.end() || *it != v) return std::nullopt;
  return out_edges_[u][static_cast<std::size_t>(it - succ.begin())];
}

bool DirectedGraph::is_acyclic() const {
  // Kahn's algorithm; self-loops count as cycles.
  std::vector<std::size_t> indegree(n_, 0);
  for (const Edge& e : edges_) ++indegree[e.target];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n_; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : successors_[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == n_;
}

VertexColouring VertexColouring::create(DirectedGraph graph, std::vector<std::uint32_t> colours) {
  if (colours.size() != graph.vertex_count()) {
    fail("bad-colouring", "expected " + std::to_string(graph.vertex_count()) +
                              " colours, got " + std::to_string(colours.size()));
  }
  VertexColouring vc;
  for (std::size_t v = 0; v < colours.size(); ++v) {
    if (colours[v] == 0) {
      fail("bad-colouring", "vertex " + std::to_string(v) + " has colour 0; colours start at 1");
    }
    vc.m_ = std::max(vc.m_, colours[v]);
  }
  vc.graph_ = std::move(graph);
  vc.colours_ = std::move(colours);
  return vc;
}

void require_vertex(const DirectedGraph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    fail("vertex-out-of-range",
         std::to_string(v) + " not in [0," + std::to_string(g.vertex_count()) + ")");
  }
}

std::size_t max_out_degree(const DirectedGraph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.successors(v).size());
  return best;
}

CountMatrix multiply(const CountMatrix& lhs, const CountMatrix& rhs) {
  const std::size_t n = lhs.size();
  CountMatrix out(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      if (lhs[i][m] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += lhs[i][m] * rhs[m][j];
    }
  }
  return out;
}

CountMatrix walk_count_matrix(const DirectedGraph& g, std::uint64_t length) {
  const std::size_t n = g.vertex_count();
  CountMatrix current(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) current[i][i] = 1;
  for (std::uint64_t step = 0; step < length; ++step) {
    CountMatrix next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (Vertex m = 0; m < n; ++m) {
        if (current[i][m] == 0) continue;
        for (Vertex j : g.successors(m)) next[i][j] += current[i][m];
      }
    }
    current = std::move(next);
  }
  return current;
}

namespace {

struct WalkSearch {
  const DirectedGraph& g;
  Vertex target;
  std::uint64_t length;
  std::uint64_t limit;
  Walk prefix;
  std::vector<Walk> found;

  void run() {
    if (prefix.size() == length + 1) {
      if (prefix.back() != target) return;
      if (found.size() >= limit) {
        fail("limit-exceeded", "more than " + std::to_string(limit) + " walks");
      }
      found.push_back(prefix);
      return;
    }
    for (Vertex next : g.successors(prefix.back())) {
      prefix.push_back(next);
      run();
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<Walk> enumerate_walks(const DirectedGraph& g, Vertex s, Vertex t,
                                  std::uint64_t length, std::uint64_t limit) {
  require_vertex(g, s);
  require_vertex(g, t);
  if (limit == 0) fail("invalid-argument", "limit must be positive");
  WalkSearch search{g, t, length, limit, {s}, {}};
  search.run();
  return std::move(search.found);
}

}  // namespace paracount
