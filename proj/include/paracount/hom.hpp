#pragma once

#include <cstdint>
#include <vector>

#include "paracount/count.hpp"
#include "paracount/fo.hpp"
#include "paracount/graph.hpp"

namespace paracount {

/// Vocabulary (E/2, C1/1, ..., Cn/1) of the coloured path P_n*.
Vocabulary path_star_vocabulary(std::size_t n);

/// P_n*: universe 0..n-1, symmetric path edges, C_i = {i-1}.
struct PathStarStructure {
  std::size_t n = 0;
  RelationalStructure structure;
};

/// Throws n-too-small for n < 2.
PathStarStructure make_path_star(std::size_t n);

/// h[a] is the image of element a.
using ElementMap = std::vector<Element>;

/// Throws vocabulary-mismatch when A and B disagree on relation symbols.
bool is_homomorphism(const ElementMap& h, const RelationalStructure& a,
                     const RelationalStructure& b);

/// Every homomorphism A -> B, maps in lexicographic order. Throws
/// limit-exceeded when |dom(B)|^|dom(A)| exceeds `limit`.
std::vector<ElementMap> enumerate_homomorphisms(const RelationalStructure& a,
                                                const RelationalStructure& b,
                                                std::uint64_t limit);

WalkCount count_hom_oracle(const RelationalStructure& a, const RelationalStructure& b,
                           std::uint64_t limit);

/// Layered digraph whose s-t walks with n+2 vertices correspond one-to-one
/// with homomorphisms P_n* -> B.
///
/// Vertices 0..|B|-1 are the elements of B; s and t are appended last. An
/// element lying in several colour classes C_i gets one extra vertex per
/// additional class (placed between the elements and s), so that the
/// position on a walk always determines the colour. When the colour classes
/// are pairwise disjoint no extra vertices exist.
struct HomReachGraph {
  DirectedGraph graph;
  Vertex s = 0;
  Vertex t = 0;
  std::uint64_t walk_vertices = 0;      // n + 2
  std::vector<Element> element_of;      // per non-terminal vertex
  std::vector<std::uint32_t> colour_of;  // 0 when the vertex has no colour
};

/// Throws vocabulary-mismatch unless B is over (E, C1..Cn).
HomReachGraph build_hom_reach_graph(std::size_t n, const RelationalStructure& b);

/// Image of an s-t walk under the correspondence (v_1..v_n) -> h(i) = v_i.
ElementMap walk_to_homomorphism(const HomReachGraph& g, const Walk& walk);

/// Number of homomorphisms P_n* -> B if n <= k, else 0; computed as
/// count_reach on the layered graph.
WalkCount count_hom_path_star(std::size_t n, const RelationalStructure& b, std::uint64_t k);

}  // namespace paracount
