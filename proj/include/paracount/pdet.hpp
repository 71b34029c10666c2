#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "paracount/count.hpp"
#include "paracount/graph.hpp"

namespace paracount {

/// Square {0,1} matrix read as the adjacency matrix of G_A.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix() = default;

  /// Throws bad-matrix when a row has the wrong width or an entry is not
  /// 0 or 1.
  static ZeroOneMatrix create(const std::vector<std::vector<int>>& rows);
  static ZeroOneMatrix from_graph(const DirectedGraph& g);

  std::size_t size() const noexcept { return n_; }
  bool at(std::size_t row, std::size_t col) const { return bits_.at(row * n_ + col); }
  std::vector<std::vector<int>> rows() const;

  /// Off-diagonal successors of v in ascending order.
  const std::vector<Vertex>& successors(Vertex v) const { return successors_.at(v); }

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
  std::vector<std::vector<Vertex>> successors_;
};

/// Closed walk (w_1, ..., w_{r-1}, w_1) whose head w_1 is its least vertex
/// and occurs only once in the body. The number of edges equals
/// body.size().
struct Clow {
  std::vector<Vertex> body;

  Vertex head() const { return body.front(); }
  std::size_t edge_count() const noexcept { return body.size(); }
  bool is_simple_cycle() const;

  friend bool operator==(const Clow&, const Clow&) = default;
  friend auto operator<=>(const Clow&, const Clow&) = default;
};

/// Clows with strictly ascending heads over vertices 0..n-1.
struct ClowSequence {
  std::size_t n = 0;
  std::vector<Clow> clows;

  std::size_t total_edges() const;
  /// True when every clow is a simple cycle and the clows are pairwise
  /// vertex-disjoint, i.e. the sequence is a partial cycle cover.
  bool is_cycle_cover() const;

  friend bool operator==(const ClowSequence&, const ClowSequence&) = default;
};

/// Throws invalid-clow-sequence unless W is a k-clow sequence: heads
/// ascending, each head minimal and unrepeated, every clow with at least
/// two edges and no self-loop edge.
void validate_k_clow_sequence(const ClowSequence& w);

/// Sum over permutations moving exactly k points of sign(pi) times the
/// product of a_{i,pi(i)} over moved points. Throws k-out-of-range if k > n.
SignedValue pdet_direct(const ZeroOneMatrix& a, std::uint64_t k);

/// (-1)^(2n - k + r') with r' the number of clows.
SignedValue clow_sign(const ClowSequence& w);

/// Visits every k-clow sequence of G_A of weight 1, in the order of the
/// guessing machine's choices: first a head, then at each step either an
/// extension by a successor (ascending) or closing the clow and guessing a
/// larger head. `parity` is the machine's running sign: it starts at
/// (-1)^(2n-k) and flips whenever a clow closes. Returns the number
/// visited. Throws limit-exceeded after `limit` sequences.
std::uint64_t for_each_k_clow_sequence(
    const ZeroOneMatrix& a, std::uint64_t k, std::uint64_t limit,
    const std::function<void(const ClowSequence& w, int parity)>& visit);

std::vector<ClowSequence> enumerate_k_clow_sequences(const ZeroOneMatrix& a, std::uint64_t k,
                                                     std::uint64_t limit);

/// Accepting-path counts of the two sign-splitting machines: `positive`
/// counts sequences of sign +1, `negative` those of sign -1.
struct ClowMachineCounts {
  WalkCount positive = 0;
  WalkCount negative = 0;

  SignedValue difference() const { return positive - negative; }
};

ClowMachineCounts clow_machine_counts(const ZeroOneMatrix& a, std::uint64_t k,
                                      std::uint64_t limit);

/// Signed k-clow expansion; equals pdet_direct.
SignedValue pdet_clow(const ZeroOneMatrix& a, std::uint64_t k, std::uint64_t limit);

/// Sign-reversing involution on k-clow sequences; fixes exactly the
/// partial cycle covers. Throws invalid-clow-sequence on malformed input.
ClowSequence eta(const ClowSequence& w);

/// Sum over k of pdet_direct(A, k) for a unit-diagonal matrix, which is
/// det(A). Throws diagonal-not-unit.
SignedValue det_cross_check(const ZeroOneMatrix& a);

}  // namespace paracount
