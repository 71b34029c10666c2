#include "paracount/hom.hpp"

#include <string>

#include "paracount/error.hpp"
#include "paracount/walk_count.hpp"

namespace paracount {

namespace {

std::string colour_name(std::size_t i) { return "C" + std::to_string(i); }

}  // namespace

Vocabulary path_star_vocabulary(std::size_t n) {
  std::vector<RelationSymbol> relations{{"E", 2}};
  for (std::size_t i = 1; i <= n; ++i) relations.push_back({colour_name(i), 1});
  return Vocabulary::create(std::move(relations), {});
}

PathStarStructure make_path_star(std::size_t n) {
  if (n < 2) fail("n-too-small", "P_n needs n >= 2, got " + std::to_string(n));
  std::map<std::string, std::vector<Tuple>> interpretation;
  auto& edges = interpretation["E"];
  for (Element i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
    edges.push_back({i + 1, i});
  }
  for (Element i = 0; i < n; ++i) interpretation[colour_name(i + 1)] = {{i}};
  return {n, RelationalStructure::create(path_star_vocabulary(n), n, interpretation, {})};
}

bool is_homomorphism(const ElementMap& h, const RelationalStructure& a,
                     const RelationalStructure& b) {
  if (!a.vocabulary().same_relations(b.vocabulary())) {
    fail("vocabulary-mismatch", "structures disagree on relation symbols");
  }
  if (h.size() != a.universe_size()) {
    fail("width-mismatch", "map defined on " + std::to_string(h.size()) + " of " +
                               std::to_string(a.universe_size()) + " elements");
  }
  for (Element image : h) {
    if (image >= b.universe_size()) return false;
  }
  const auto& rels = a.vocabulary().relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto target = static_cast<std::size_t>(b.vocabulary().relation_index(rels[r].name));
    for (const Tuple& tuple : a.relation(r)) {
      Tuple mapped;
      mapped.reserve(tuple.size());
      for (Element e : tuple) mapped.push_back(h[e]);
      if (!b.holds(target, mapped)) return false;
    }
  }
  return true;
}

std::vector<ElementMap> enumerate_homomorphisms(const RelationalStructure& a,
                                                const RelationalStructure& b,
                                                std::uint64_t limit) {
  if (!a.vocabulary().same_relations(b.vocabulary())) {
    fail("vocabulary-mismatch", "structures disagree on relation symbols");
  }
  BigInt maps = 1;
  for (std::size_t i = 0; i < a.universe_size(); ++i) maps *= b.universe_size();
  if (maps > limit) {
    fail("limit-exceeded", to_decimal(maps) + " candidate maps exceed limit " + std::to_string(limit));
  }
  std::vector<ElementMap> out;
  ElementMap h(a.universe_size(), 0);
  const std::size_t width = h.size();
  while (true) {
    if (is_homomorphism(h, a, b)) out.push_back(h);
    // Increment with the last position fastest so output is lexicographic.
    std::size_t pos = width;
    while (pos > 0) {
      if (++h[pos - 1] < b.universe_size()) break;
      h[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

WalkCount count_hom_oracle(const RelationalStructure& a, const RelationalStructure& b,
                           std::uint64_t limit) {
  return enumerate_homomorphisms(a, b, limit).size();
}

HomReachGraph build_hom_reach_graph(std::size_t n, const RelationalStructure& b) {
  if (n < 2) fail("n-too-small", "P_n needs n >= 2, got " + std::to_string(n));
  if (!b.vocabulary().same_relations(path_star_vocabulary(n))) {
    fail("vocabulary-mismatch", "target must be over (E, C1..C" + std::to_string(n) + ")");
  }
  HomReachGraph out;
  const std::size_t elements = b.universe_size();
  out.element_of.resize(elements);
  out.colour_of.assign(elements, 0);
  for (Element e = 0; e < elements; ++e) out.element_of[e] = e;

  // vertices_of_colour[i] lists the vertices standing for members of C_i.
  std::vector<std::vector<Vertex>> vertices_of_colour(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (const Tuple& member : b.relation(colour_name(i))) {
      const Element e = member.front();
      Vertex v = e;
      if (out.colour_of[e] != 0) {
        v = static_cast<Vertex>(out.element_of.size());
        out.element_of.push_back(e);
        out.colour_of.push_back(0);
      }
      out.colour_of[v] = static_cast<std::uint32_t>(i);
      vertices_of_colour[i].push_back(v);
    }
  }
  const std::size_t inner = out.element_of.size();
  out.s = static_cast<Vertex>(inner);
  out.t = static_cast<Vertex>(inner + 1);
  out.walk_vertices = n + 2;

  std::vector<Edge> edges;
  for (Vertex v : vertices_of_colour[1]) edges.push_back({out.s, v});
  const auto e_index = static_cast<std::size_t>(b.vocabulary().relation_index("E"));
  for (std::size_t i = 1; i < n; ++i) {
    for (Vertex x : vertices_of_colour[i]) {
      for (Vertex y : vertices_of_colour[i + 1]) {
        const Element ex = out.element_of[x];
        const Element ey = out.element_of[y];
        // P_n* has both orientations of every path edge.
        if (b.holds(e_index, {ex, ey}) && b.holds(e_index, {ey, ex})) edges.push_back({x, y});
      }
    }
  }
  for (Vertex v : vertices_of_colour[n]) edges.push_back({v, out.t});
  out.graph = DirectedGraph::create(inner + 2, std::move(edges));
  return out;
}

ElementMap walk_to_homomorphism(const HomReachGraph& g, const Walk& walk) {
  if (walk.size() != g.walk_vertices || walk.front() != g.s || walk.back() != g.t) {
    fail("invalid-argument", "not an s-t walk of the layered graph");
  }
  ElementMap h;
  for (std::size_t i = 1; i + 1 < walk.size(); ++i) h.push_back(g.element_of.at(walk[i]));
  return h;
}

WalkCount count_hom_path_star(std::size_t n, const RelationalStructure& b, std::uint64_t k) {
  const HomReachGraph layered = build_hom_reach_graph(n, b);
  if (n > k) return 0;
  return count_reach(layered.graph, layered.s, layered.t, layered.walk_vertices);
}

}  // namespace paracount
