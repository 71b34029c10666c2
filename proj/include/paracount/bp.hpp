#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paracount/count.hpp"

namespace paracount {

using NodeId = std::uint32_t;

/// What a node reads: ordinary input x_i, nondeterministic input y_j (both
/// 1-based), or nothing (a pass node with a single forced edge).
struct NodeLabel {
  enum class Kind { X, Y, Pass };
  Kind kind = Kind::Pass;
  std::uint32_t index = 0;

  static NodeLabel x(std::uint32_t i) { return {Kind::X, i}; }
  static NodeLabel y(std::uint32_t j) { return {Kind::Y, j}; }
  static NodeLabel pass() { return {Kind::Pass, 0}; }

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

/// Edge as read from input; `bit` is empty for edges leaving pass nodes.
struct RawBpEdge {
  NodeId from = 0;
  NodeId to = 0;
  std::optional<std::int64_t> bit;
};

struct BpEdge {
  NodeId from = 0;
  NodeId to = 0;
  std::optional<bool> bit;

  friend bool operator==(const BpEdge&, const BpEdge&) = default;
};

/// Layered DAG with labelled nodes and bit-labelled edges. Node ids are
/// 0..N-1 and every id lies in exactly one layer.
class BranchingProgram {
 public:
  BranchingProgram() = default;

  /// Throws not-layered, bad-bit-label, source-sink-misplaced or
  /// bad-node-label.
  static BranchingProgram create(std::vector<std::vector<NodeId>> layers,
                                 const std::map<NodeId, NodeLabel>& labels,
                                 const std::vector<RawBpEdge>& edges, std::uint32_t num_x,
                                 std::uint32_t num_y, NodeId source, NodeId sink);

  std::size_t node_count() const noexcept { return layer_of_.size(); }
  const std::vector<std::vector<NodeId>>& layers() const noexcept { return layers_; }
  std::size_t layer_of(NodeId v) const { return layer_of_.at(v); }
  const std::optional<NodeLabel>& label(NodeId v) const { return labels_.at(v); }
  const std::vector<BpEdge>& edges() const noexcept { return edges_; }
  /// Indices into edges() of the edges leaving v.
  const std::vector<std::size_t>& out_edges(NodeId v) const { return out_.at(v); }
  std::uint32_t num_x() const noexcept { return num_x_; }
  std::uint32_t num_y() const noexcept { return num_y_; }
  NodeId source() const noexcept { return source_; }
  NodeId sink() const noexcept { return sink_; }

  /// Every non-sink node reachable from the source has exactly two
  /// outgoing edges labelled 0 and 1 (pass nodes excluded).
  bool is_deterministic() const;

  /// No node has two outgoing edges with the same bit, so each (x, y)
  /// selects at most one path.
  bool is_deterministic_given_y() const;

  /// Nodes lying on some source-to-sink path.
  std::vector<bool> useful_nodes() const;

 private:
  std::vector<std::vector<NodeId>> layers_;
  std::vector<std::size_t> layer_of_;
  std::vector<std::optional<NodeLabel>> labels_;
  std::vector<BpEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::uint32_t num_x_ = 0;
  std::uint32_t num_y_ = 0;
  NodeId source_ = 0;
  NodeId sink_ = 0;
};

/// True iff some source-to-sink path is consistent with (x, y). Throws
/// width-mismatch.
bool bp_accepts(const BranchingProgram& p, const std::vector<bool>& x,
                const std::vector<bool>& y);

/// Largest num_y accepted by bp_count_acc.
inline constexpr std::uint32_t kMaxEnumeratedYBits = 24;

/// Number of y in {0,1}^numY accepted together with x, by enumeration.
/// Throws not-deterministic, too-many-y-bits or width-mismatch.
WalkCount bp_count_acc(const BranchingProgram& p, const std::vector<bool>& x);

/// cut_layers[j] is i_j for j = 0..numY; y_j may only label layers in
/// [i_{j-1}, i_j]. Indices may run past the last layer.
struct ReadOnceCertificate {
  std::vector<std::size_t> cut_layers;
};

/// Either a certificate or the pair (first, second) of y indices that no
/// band layout can separate.
struct ReadOnceCheck {
  std::optional<ReadOnceCertificate> certificate;
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  std::string reason;

  bool certified() const noexcept { return certificate.has_value(); }
};

ReadOnceCheck check_read_once_certified(const BranchingProgram& p);

/// True iff along every source-to-sink path the y indices read strictly
/// increase.
bool reads_y_in_order(const BranchingProgram& p);

/// Read-once certified program with the same #acc for every x. Nodes off
/// every source-to-sink path are dropped. Throws order-property-violated
/// unless reads_y_in_order(p).
BranchingProgram stagger(const BranchingProgram& p);

/// #acc by a layer sweep over (node, last y index read). Throws
/// precondition-violated unless p is deterministic given y, certified,
/// and reads each y at most once per path; width-mismatch on bad x.
WalkCount bp_count_fast(const BranchingProgram& p, const std::vector<bool>& x);

/// numY <= f_of_m * ceil(log2 numX).
bool nondeterminism_bounded(const BranchingProgram& p, std::uint64_t f_of_m);

}  // namespace paracount
