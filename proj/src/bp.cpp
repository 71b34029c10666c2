#include "paracount/bp.hpp"

#include <algorithm>
#include <numeric>

#include "paracount/error.hpp"

namespace paracount {

namespace {

std::string node_name(NodeId v) { return "node " + std::to_string(v); }

}  // namespace

BranchingProgram BranchingProgram::create(std::vector<std::vector<NodeId>> layers,
                                          const std::map<NodeId, NodeLabel>& labels,
                                          const std::vector<RawBpEdge>& edges,
                                          std::uint32_t num_x, std::uint32_t num_y,
                                          NodeId source, NodeId sink) {
  if (layers.empty()) fail("not-layered", "no layers");
  std::size_t n = 0;
  for (const auto& layer : layers) n += layer.size();

  BranchingProgram p;
  p.num_x_ = num_x;
  p.num_y_ = num_y;
  p.layer_of_.assign(n, 0);
  std::vector<bool> placed(n, false);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (NodeId v : layers[i]) {
      if (v >= n) fail("not-layered", node_name(v) + " but only " + std::to_string(n) + " nodes");
      if (placed[v]) fail("not-layered", node_name(v) + " appears in two layers");
      placed[v] = true;
      p.layer_of_[v] = i;
    }
  }
  if (source >= n || p.layer_of_[source] != 0) {
    fail("source-sink-misplaced", "source " + std::to_string(source) + " is not in layer 0");
  }
  if (sink >= n || p.layer_of_[sink] != layers.size() - 1) {
    fail("source-sink-misplaced", "sink " + std::to_string(sink) + " is not in the last layer");
  }
  p.source_ = source;
  p.sink_ = sink;

  p.labels_.assign(n, std::nullopt);
  for (const auto& [v, label] : labels) {
    if (v >= n) fail("bad-node-label", "label for unknown " + node_name(v));
    if (v == sink) fail("bad-node-label", "the sink carries a label");
    const bool in_range = label.kind == NodeLabel::Kind::Pass ||
                          (label.index >= 1 && label.index <= (label.kind == NodeLabel::Kind::X
                                                                   ? num_x
                                                                   : num_y));
    if (!in_range) {
      fail("bad-node-label", node_name(v) + " reads input " + std::to_string(label.index) +
                                 " out of range");
    }
    p.labels_[v] = label;
  }

  p.out_.assign(n, {});
  for (const RawBpEdge& raw : edges) {
    if (raw.from >= n || raw.to >= n) {
      fail("not-layered", "edge (" + std::to_string(raw.from) + "," + std::to_string(raw.to) +
                              ") has an unknown endpoint");
    }
    if (p.layer_of_[raw.to] <= p.layer_of_[raw.from]) {
      fail("not-layered", "edge (" + std::to_string(raw.from) + "," + std::to_string(raw.to) +
                              ") does not go to a later layer");
    }
    const auto& label = p.labels_[raw.from];
    if (!label) fail("bad-node-label", node_name(raw.from) + " has outgoing edges but no label");
    BpEdge edge{raw.from, raw.to, std::nullopt};
    if (label->kind == NodeLabel::Kind::Pass) {
      if (raw.bit) fail("bad-bit-label", "edge leaving pass " + node_name(raw.from) + " has a bit");
      if (!p.out_[raw.from].empty()) {
        fail("bad-node-label", "pass " + node_name(raw.from) + " has more than one edge");
      }
    } else {
      if (!raw.bit || (*raw.bit != 0 && *raw.bit != 1)) {
        fail("bad-bit-label", "edge leaving " + node_name(raw.from) + " needs bit 0 or 1");
      }
      edge.bit = *raw.bit == 1;
    }
    p.out_[raw.from].push_back(p.edges_.size());
    p.edges_.push_back(edge);
  }
  p.layers_ = std::move(layers);
  return p;
}

namespace {

std::vector<NodeId> nodes_in_layer_order(const BranchingProgram& p) {
  std::vector<NodeId> order;
  for (const auto& layer : p.layers()) order.insert(order.end(), layer.begin(), layer.end());
  return order;
}

std::vector<bool> reachable_from_source(const BranchingProgram& p) {
  std::vector<bool> seen(p.node_count(), false);
  seen[p.source()] = true;
  for (NodeId v : nodes_in_layer_order(p)) {
    if (!seen[v]) continue;
    for (std::size_t e : p.out_edges(v)) seen[p.edges()[e].to] = true;
  }
  return seen;
}

// descendants[v][w] is true when w is reachable from v by a nonempty path.
std::vector<std::vector<bool>> descendants(const BranchingProgram& p) {
  const auto order = nodes_in_layer_order(p);
  std::vector<std::vector<bool>> below(p.node_count(), std::vector<bool>(p.node_count(), false));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& row = below[*it];
    for (std::size_t e : p.out_edges(*it)) {
      const NodeId w = p.edges()[e].to;
      row[w] = true;
      for (std::size_t u = 0; u < row.size(); ++u) {
        if (below[w][u]) row[u] = true;
      }
    }
  }
  return below;
}

bool is_y(const std::optional<NodeLabel>& label) {
  return label && label->kind == NodeLabel::Kind::Y;
}

bool consistent(const BranchingProgram& p, const BpEdge& e, const std::vector<bool>& x,
                const std::vector<bool>& y) {
  const auto& label = *p.label(e.from);
  switch (label.kind) {
    case NodeLabel::Kind::X:
      return *e.bit == x[label.index - 1];
    case NodeLabel::Kind::Y:
      return *e.bit == y[label.index - 1];
    case NodeLabel::Kind::Pass:
      return true;
  }
  return false;
}

void require_width(const BranchingProgram& p, const std::vector<bool>& x) {
  if (x.size() != p.num_x()) {
    fail("width-mismatch", "x has " + std::to_string(x.size()) + " bits, expected " +
                               std::to_string(p.num_x()));
  }
}

}  // namespace

bool BranchingProgram::is_deterministic() const {
  const auto reached = reachable_from_source(*this);
  for (NodeId v = 0; v < node_count(); ++v) {
    if (!reached[v] || v == sink_) continue;
    if (!labels_[v]) return false;
    const auto& out = out_[v];
    if (labels_[v]->kind == NodeLabel::Kind::Pass) {
      if (out.size() != 1) return false;
      continue;
    }
    if (out.size() != 2 || edges_[out[0]].bit == edges_[out[1]].bit) return false;
  }
  return true;
}

bool BranchingProgram::is_deterministic_given_y() const {
  for (NodeId v = 0; v < node_count(); ++v) {
    bool seen[2] = {false, false};
    for (std::size_t e : out_[v]) {
      if (!edges_[e].bit) continue;
      bool& slot = seen[*edges_[e].bit ? 1 : 0];
      if (slot) return false;
      slot = true;
    }
  }
  return true;
}

std::vector<bool> BranchingProgram::useful_nodes() const {
  const auto forward = reachable_from_source(*this);
  std::vector<bool> backward(node_count(), false);
  backward[sink_] = true;
  const auto order = nodes_in_layer_order(*this);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t e : out_[*it]) {
      if (backward[edges_[e].to]) backward[*it] = true;
    }
  }
  std::vector<bool> useful(node_count());
  for (NodeId v = 0; v < node_count(); ++v) useful[v] = forward[v] && backward[v];
  return useful;
}

bool bp_accepts(const BranchingProgram& p, const std::vector<bool>& x,
                const std::vector<bool>& y) {
  require_width(p, x);
  if (y.size() != p.num_y()) {
    fail("width-mismatch", "y has " + std::to_string(y.size()) + " bits, expected " +
                               std::to_string(p.num_y()));
  }
  std::vector<bool> reached(p.node_count(), false);
  reached[p.source()] = true;
  for (NodeId v : nodes_in_layer_order(p)) {
    if (!reached[v]) continue;
    for (std::size_t e : p.out_edges(v)) {
      if (consistent(p, p.edges()[e], x, y)) reached[p.edges()[e].to] = true;
    }
  }
  return reached[p.sink()];
}

WalkCount bp_count_acc(const BranchingProgram& p, const std::vector<bool>& x) {
  if (!p.is_deterministic_given_y()) {
    fail("not-deterministic", "some node has two outgoing edges with the same bit");
  }
  if (p.num_y() > kMaxEnumeratedYBits) {
    fail("too-many-y-bits", std::to_string(p.num_y()) + " nondeterministic bits exceed " +
                                std::to_string(kMaxEnumeratedYBits));
  }
  require_width(p, x);
  WalkCount total = 0;
  std::vector<bool> y(p.num_y(), false);
  const std::uint64_t assignments = std::uint64_t{1} << p.num_y();
  for (std::uint64_t bits = 0; bits < assignments; ++bits) {
    for (std::uint32_t j = 0; j < p.num_y(); ++j) y[j] = (bits >> j) & 1U;
    if (bp_accepts(p, x, y)) total += 1;
  }
  return total;
}

ReadOnceCheck check_read_once_certified(const BranchingProgram& p) {
  const std::uint32_t m = p.num_y();
  std::vector<std::optional<std::size_t>> lowest(m + 1);
  std::vector<std::optional<std::size_t>> highest(m + 1);
  for (NodeId v = 0; v < p.node_count(); ++v) {
    if (!is_y(p.label(v))) continue;
    const std::uint32_t j = p.label(v)->index;
    const std::size_t layer = p.layer_of(v);
    lowest[j] = std::min(lowest[j].value_or(layer), layer);
    highest[j] = std::max(highest[j].value_or(layer), layer);
  }

  // Each cut is placed as early as possible; a band fails only if even the
  // earliest placement of its left cut overshoots the variable's first use.
  ReadOnceCheck result;
  std::vector<std::size_t> cuts(m + 1, 0);
  std::vector<std::uint32_t> forced_by(m + 1, 0);  // variable that pinned cut j, 0 if none
  for (std::uint32_t j = 1; j <= m; ++j) {
    if (lowest[j] && *lowest[j] < cuts[j - 1]) {
      result.first = forced_by[j - 1] == 0 ? j : forced_by[j - 1];
      result.second = j;
      result.reason = "y_" + std::to_string(j) + " occurs in layer " +
                      std::to_string(*lowest[j]) + " before its band can start at layer " +
                      std::to_string(cuts[j - 1]);
      return result;
    }
    cuts[j] = cuts[j - 1] + 1;
    forced_by[j] = forced_by[j - 1];
    if (highest[j] && *highest[j] >= cuts[j]) {
      cuts[j] = *highest[j];
      forced_by[j] = j;
    }
  }
  result.certificate = ReadOnceCertificate{std::move(cuts)};
  return result;
}

bool reads_y_in_order(const BranchingProgram& p) {
  const auto useful = p.useful_nodes();
  const auto below = descendants(p);
  for (NodeId u = 0; u < p.node_count(); ++u) {
    if (!useful[u] || !is_y(p.label(u))) continue;
    for (NodeId v = 0; v < p.node_count(); ++v) {
      if (!useful[v] || !below[u][v] || !is_y(p.label(v))) continue;
      if (p.label(v)->index <= p.label(u)->index) return false;
    }
  }
  return true;
}

BranchingProgram stagger(const BranchingProgram& p) {
  if (!reads_y_in_order(p)) {
    fail("order-property-violated", "some path reads y indices out of order or twice");
  }
  const auto useful = p.useful_nodes();
  if (!useful[p.source()]) {
    return BranchingProgram::create({{0}, {1}}, {{0, NodeLabel::pass()}}, {}, p.num_x(),
                                    p.num_y(), 0, 1);
  }

  // Largest y index read up to and including each node.
  const auto order = nodes_in_layer_order(p);
  std::vector<std::uint32_t> reads(p.node_count(), 0);
  for (NodeId v : order) {
    if (!useful[v]) continue;
    if (is_y(p.label(v))) reads[v] = std::max(reads[v], p.label(v)->index);
    for (std::size_t e : p.out_edges(v)) {
      const NodeId w = p.edges()[e].to;
      if (useful[w]) reads[w] = std::max(reads[w], reads[v]);
    }
  }
  const std::size_t width = p.layers().size();
  std::vector<std::size_t> new_layer(p.node_count(), 0);
  for (NodeId v : order) new_layer[v] = reads[v] * width + p.layer_of(v);

  std::vector<std::vector<NodeId>> layers(new_layer[p.sink()] + 1);
  std::map<NodeId, NodeLabel> labels;
  std::vector<RawBpEdge> edges;
  NodeId next_id = 0;
  auto add_node = [&](std::size_t layer, std::optional<NodeLabel> label) {
    const NodeId id = next_id++;
    layers.at(layer).push_back(id);
    if (label) labels[id] = *label;
    return id;
  };

  NodeId source = 0;
  const bool needs_pass_source = new_layer[p.source()] != 0;
  if (needs_pass_source) source = add_node(0, NodeLabel::pass());
  std::vector<NodeId> renamed(p.node_count(), 0);
  for (NodeId v : order) {
    if (useful[v]) renamed[v] = add_node(new_layer[v], p.label(v));
  }
  if (needs_pass_source) {
    edges.push_back({source, renamed[p.source()], std::nullopt});
  } else {
    source = renamed[p.source()];
  }

  for (const BpEdge& e : p.edges()) {
    if (!useful[e.from] || !useful[e.to]) continue;
    std::optional<std::int64_t> bit;
    if (e.bit) bit = *e.bit ? 1 : 0;
    NodeId from = renamed[e.from];
    for (std::size_t layer = new_layer[e.from] + 1; layer < new_layer[e.to]; ++layer) {
      const NodeId dummy = add_node(layer, NodeLabel::pass());
      edges.push_back({from, dummy, bit});
      from = dummy;
      bit.reset();
    }
    edges.push_back({from, renamed[e.to], bit});
  }
  return BranchingProgram::create(std::move(layers), labels, edges, p.num_x(), p.num_y(), source,
                                  renamed[p.sink()]);
}

WalkCount bp_count_fast(const BranchingProgram& p, const std::vector<bool>& x) {
  require_width(p, x);
  if (!p.is_deterministic_given_y()) {
    fail("precondition-violated", "program is not deterministic given y");
  }
  const ReadOnceCheck check = check_read_once_certified(p);
  if (!check.certified()) fail("precondition-violated", "not read-once certified: " + check.reason);
  if (!reads_y_in_order(p)) fail("precondition-violated", "some path reads a y bit twice");

  // counts[v][q]: consistent partial paths reaching v whose last y read is
  // y_q, each weighted by the free choices of the bits skipped so far.
  const std::uint32_t m = p.num_y();
  const auto useful = p.useful_nodes();
  std::vector<std::vector<WalkCount>> counts(p.node_count(), std::vector<WalkCount>(m + 1, 0));
  counts[p.source()][0] = 1;
  for (NodeId v : nodes_in_layer_order(p)) {
    if (!useful[v] || v == p.sink()) continue;
    const auto& label = *p.label(v);
    for (std::size_t e : p.out_edges(v)) {
      const BpEdge& edge = p.edges()[e];
      if (!useful[edge.to]) continue;
      for (std::uint32_t q = 0; q <= m; ++q) {
        const WalkCount& c = counts[v][q];
        if (c == 0) continue;
        switch (label.kind) {
          case NodeLabel::Kind::X:
            if (*edge.bit == x[label.index - 1]) counts[edge.to][q] += c;
            break;
          case NodeLabel::Kind::Y:
            counts[edge.to][label.index] += c * pow2(label.index - q - 1);
            break;
          case NodeLabel::Kind::Pass:
            counts[edge.to][q] += c;
            break;
        }
      }
    }
  }
  WalkCount total = 0;
  for (std::uint32_t q = 0; q <= m; ++q) total += counts[p.sink()][q] * pow2(m - q);
  return total;
}

bool nondeterminism_bounded(const BranchingProgram& p, std::uint64_t f_of_m) {
  const unsigned __int128 bound = static_cast<unsigned __int128>(f_of_m) * ceil_log2(p.num_x());
  return p.num_y() <= bound;
}

}  // namespace paracount
