#include "paracount/pdet.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "paracount/error.hpp"

namespace paracount {

ZeroOneMatrix ZeroOneMatrix::create(const std::vector<std::vector<int>>& rows) {
  ZeroOneMatrix m;
  m.n_ = rows.size();
  m.bits_.assign(m.n_ * m.n_, false);
  m.successors_.resize(m.n_);
  for (std::size_t i = 0; i < m.n_; ++i) {
    if (rows[i].size() != m.n_) {
      fail("bad-matrix", "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(m.n_));
    }
    for (std::size_t j = 0; j < m.n_; ++j) {
      const int entry = rows[i][j];
      if (entry != 0 && entry != 1) {
        fail("bad-matrix", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") = " + std::to_string(entry) + " is not a bit");
      }
      m.bits_[i * m.n_ + j] = entry == 1;
      if (entry == 1 && i != j) m.successors_[i].push_back(static_cast<Vertex>(j));
    }
  }
  return m;
}

ZeroOneMatrix ZeroOneMatrix::from_graph(const DirectedGraph& g) {
  std::vector<std::vector<int>> rows(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) rows[e.source][e.target] = 1;
  return create(rows);
}

std::vector<std::vector<int>> ZeroOneMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = at(i, j) ? 1 : 0;
  }
  return out;
}

bool Clow::is_simple_cycle() const {
  std::set<Vertex> seen(body.begin(), body.end());
  return seen.size() == body.size();
}

std::size_t ClowSequence::total_edges() const {
  std::size_t total = 0;
  for (const Clow& c : clows) total += c.edge_count();
  return total;
}

bool ClowSequence::is_cycle_cover() const {
  std::set<Vertex> seen;
  for (const Clow& c : clows) {
    for (Vertex v : c.body) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

void validate_k_clow_sequence(const ClowSequence& w) {
  auto reject = [](std::size_t i, const std::string& why) {
    fail("invalid-clow-sequence", "clow " + std::to_string(i) + ": " + why);
  };
  for (std::size_t i = 0; i < w.clows.size(); ++i) {
    const auto& body = w.clows[i].body;
    if (body.size() < 2) reject(i, "fewer than two edges");
    for (Vertex v : body) {
      if (v >= w.n) reject(i, "vertex " + std::to_string(v) + " out of range");
    }
    for (std::size_t j = 1; j < body.size(); ++j) {
      if (body[j] <= body[0]) reject(i, "head is not the unique least vertex");
      if (body[j] == body[j - 1]) reject(i, "self-loop edge");
    }
    if (i > 0 && w.clows[i - 1].head() >= w.clows[i].head()) reject(i, "heads not ascending");
  }
}

namespace {

int sign_from_parity(std::uint64_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

struct DerangementSearch {
  const ZeroOneMatrix& a;
  std::vector<Vertex> subset;
  std::vector<Vertex> image;  // aligned with subset
  std::vector<bool> used;     // indexed by subset position
  SignedValue total = 0;

  void run(std::size_t pos) {
    if (pos == subset.size()) {
      total += cycle_sign();
      return;
    }
    const Vertex from = subset[pos];
    for (std::size_t j = 0; j < subset.size(); ++j) {
      const Vertex to = subset[j];
      if (used[j] || to == from || !a.at(from, to)) continue;
      used[j] = true;
      image[pos] = to;
      run(pos + 1);
      used[j] = false;
    }
  }

  // sign(pi) = (-1)^(k + number of cycles among the moved points).
  int cycle_sign() const {
    std::vector<bool> visited(subset.size(), false);
    std::uint64_t cycles = 0;
    for (std::size_t start = 0; start < subset.size(); ++start) {
      if (visited[start]) continue;
      ++cycles;
      std::size_t at = start;
      while (!visited[at]) {
        visited[at] = true;
        at = static_cast<std::size_t>(
            std::find(subset.begin(), subset.end(), image[at]) - subset.begin());
      }
    }
    return sign_from_parity(subset.size() + cycles);
  }
};

void for_each_subset(std::size_t n, std::size_t k, std::size_t from, std::vector<Vertex>& chosen,
                     const std::function<void(const std::vector<Vertex>&)>& visit) {
  if (chosen.size() == k) {
    visit(chosen);
    return;
  }
  for (std::size_t v = from; v + (k - chosen.size()) <= n; ++v) {
    chosen.push_back(static_cast<Vertex>(v));
    for_each_subset(n, k, v + 1, chosen, visit);
    chosen.pop_back();
  }
}

}  // namespace

SignedValue pdet_direct(const ZeroOneMatrix& a, std::uint64_t k) {
  if (k > a.size()) {
    fail("k-out-of-range", "k=" + std::to_string(k) + " exceeds n=" + std::to_string(a.size()));
  }
  SignedValue total = 0;
  std::vector<Vertex> chosen;
  for_each_subset(a.size(), k, 0, chosen, [&](const std::vector<Vertex>& subset) {
    DerangementSearch search{a, subset, std::vector<Vertex>(subset.size()),
                             std::vector<bool>(subset.size(), false), 0};
    search.run(0);
    total += search.total;
  });
  return total;
}

SignedValue clow_sign(const ClowSequence& w) {
  const std::uint64_t k = w.total_edges();
  return sign_from_parity(2 * w.n - k + w.clows.size());
}

namespace {

// Determinised guessing machine for k-clow sequences. Each clow starts with
// a guessed head; every step either extends by a successor larger than the
// head (a = 0) or closes back to the head (a = 1). Closing requires at least
// one extension, so every clow has two or more edges, and the diagonal is
// never consulted, so no self-loop is traversed.
class ClowMachine {
 public:
  ClowMachine(const ZeroOneMatrix& a, std::uint64_t k, std::uint64_t limit,
              const std::function<void(const ClowSequence&, int)>& visit)
      : a_(a), k_(k), limit_(limit), visit_(visit) {
    current_.n = a.size();
  }

  std::uint64_t run() {
    const int initial_parity = sign_from_parity(2 * a_.size() - k_);
    if (k_ == 0) {
      emit(initial_parity);
      return visited_;
    }
    for (Vertex head = 0; head < a_.size(); ++head) begin_clow(head, 0, initial_parity);
    return visited_;
  }

 private:
  void emit(int parity) {
    if (visited_ >= limit_) {
      fail("limit-exceeded", "more than " + std::to_string(limit_) + " clow sequences");
    }
    ++visited_;
    visit_(current_, parity);
  }

  void begin_clow(Vertex head, std::uint64_t count, int parity) {
    current_.clows.push_back(Clow{{head}});
    step(head, head, count, 0, parity);
    current_.clows.pop_back();
  }

  void step(Vertex head, Vertex at, std::uint64_t count, std::uint64_t ccount, int parity) {
    // a = 0: extend, keeping room for the closing edge. Deeper calls may
    // grow current_.clows, so the body is looked up afresh each time.
    if (count + 2 <= k_) {
      for (Vertex next : a_.successors(at)) {
        if (next <= head) continue;
        current_.clows.back().body.push_back(next);
        step(head, next, count + 1, ccount + 1, parity);
        current_.clows.back().body.pop_back();
      }
    }
    // a = 1: close the clow through the edge back to its head.
    if (ccount < 1 || !a_.at(at, head)) return;
    const std::uint64_t closed = count + 1;
    const int flipped = -parity;
    if (closed == k_) {
      emit(flipped);
      return;
    }
    if (closed + 2 > k_) return;
    for (Vertex next_head = head + 1; next_head < a_.size(); ++next_head) {
      begin_clow(next_head, closed, flipped);
    }
  }

  const ZeroOneMatrix& a_;
  std::uint64_t k_;
  std::uint64_t limit_;
  const std::function<void(const ClowSequence&, int)>& visit_;
  ClowSequence current_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_k_clow_sequence(
    const ZeroOneMatrix& a, std::uint64_t k, std::uint64_t limit,
    const std::function<void(const ClowSequence& w, int parity)>& visit) {
  if (limit == 0) fail("invalid-argument", "limit must be positive");
  return ClowMachine(a, k, limit, visit).run();
}

std::vector<ClowSequence> enumerate_k_clow_sequences(const ZeroOneMatrix& a, std::uint64_t k,
                                                     std::uint64_t limit) {
  std::vector<ClowSequence> out;
  for_each_k_clow_sequence(a, k, limit, [&](const ClowSequence& w, int) { out.push_back(w); });
  return out;
}

ClowMachineCounts clow_machine_counts(const ZeroOneMatrix& a, std::uint64_t k,
                                      std::uint64_t limit) {
  ClowMachineCounts counts;
  for_each_k_clow_sequence(a, k, limit, [&](const ClowSequence&, int parity) {
    if (parity > 0) {
      counts.positive += 1;
    } else {
      counts.negative += 1;
    }
  });
  return counts;
}

SignedValue pdet_clow(const ZeroOneMatrix& a, std::uint64_t k, std::uint64_t limit) {
  return clow_machine_counts(a, k, limit).difference();
}

namespace {

Clow rotate_to_min(std::vector<Vertex> cycle) {
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  return Clow{std::move(cycle)};
}

void insert_by_head(std::vector<Clow>& clows, Clow c) {
  auto pos = std::lower_bound(clows.begin(), clows.end(), c,
                              [](const Clow& x, const Clow& y) { return x.head() < y.head(); });
  clows.insert(pos, std::move(c));
}

}  // namespace

ClowSequence eta(const ClowSequence& w) {
  validate_k_clow_sequence(w);
  const std::size_t r = w.clows.size();

  // Shrink the suffix of pairwise disjoint simple cycles as far as it goes;
  // `i` ends up as the clow just before that suffix.
  std::set<Vertex> suffix_vertices;
  std::size_t i = r;
  while (i > 0) {
    const Clow& c = w.clows[i - 1];
    if (!c.is_simple_cycle()) break;
    const bool disjoint = std::none_of(c.body.begin(), c.body.end(),
                                       [&](Vertex v) { return suffix_vertices.contains(v); });
    if (!disjoint) break;
    suffix_vertices.insert(c.body.begin(), c.body.end());
    --i;
  }
  if (i == 0) return w;  // partial cycle cover: fixed point
  const std::size_t pivot = i - 1;
  const auto& body = w.clows[pivot].body;

  std::vector<std::ptrdiff_t> first_seen(w.n, -1);
  for (std::size_t p = 0; p < body.size(); ++p) {
    const Vertex v = body[p];
    for (std::size_t j = pivot + 1; j < r; ++j) {
      const auto& other = w.clows[j].body;
      auto hit = std::find(other.begin(), other.end(), v);
      if (hit == other.end()) continue;
      // Merge: splice W_j, rotated to start at v, in after this visit of v.
      ClowSequence out = w;
      std::vector<Vertex> merged(body.begin(), body.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      const std::size_t q = static_cast<std::size_t>(hit - other.begin());
      for (std::size_t step = 1; step < other.size(); ++step) {
        merged.push_back(other[(q + step) % other.size()]);
      }
      merged.push_back(v);
      merged.insert(merged.end(), body.begin() + static_cast<std::ptrdiff_t>(p) + 1, body.end());
      out.clows[pivot].body = std::move(merged);
      out.clows.erase(out.clows.begin() + static_cast<std::ptrdiff_t>(j));
      return out;
    }
    if (first_seen[v] >= 0) {
      // Split: the walk since the previous visit of v is a simple cycle.
      const auto q = static_cast<std::size_t>(first_seen[v]);
      ClowSequence out = w;
      std::vector<Vertex> cycle(body.begin() + static_cast<std::ptrdiff_t>(q),
                                body.begin() + static_cast<std::ptrdiff_t>(p));
      std::vector<Vertex> rest(body.begin(), body.begin() + static_cast<std::ptrdiff_t>(q) + 1);
      rest.insert(rest.end(), body.begin() + static_cast<std::ptrdiff_t>(p) + 1, body.end());
      out.clows[pivot].body = std::move(rest);
      insert_by_head(out.clows, rotate_to_min(std::move(cycle)));
      return out;
    }
    first_seen[v] = static_cast<std::ptrdiff_t>(p);
  }
  // Unreachable for valid input: a simple W_i disjoint from the suffix would
  // have extended the suffix.
  fail("invalid-clow-sequence", "no merge or split point found");
}

SignedValue det_cross_check(const ZeroOneMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.at(i, i)) fail("diagonal-not-unit", "a_" + std::to_string(i) + std::to_string(i) + " = 0");
  }
  SignedValue total = 0;
  for (std::uint64_t k = 0; k <= a.size(); ++k) total += pdet_direct(a, k);
  return total;
}

}  // namespace paracount
