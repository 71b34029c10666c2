#include "doctest.h"
#include "fixtures.hpp"
#include "paracount/bp.hpp"
#include "paracount/check.hpp"

using namespace paracount;
using namespace fixtures;

namespace {

BranchingProgram y_root(std::uint32_t num_y, bool both) {
  std::vector<RawBpEdge> edges{{0, 1, 1}};
  if (both) edges.push_back({0, 1, 0});
  return BranchingProgram::create({{0}, {1}}, {{0, NodeLabel::y(1)}}, edges, 0, num_y, 0, 1);
}

// Layer 0 passes to layer 1; layers 1 and 2 read the given y indices with
// both edges forward; layer 3 is the sink.
BranchingProgram two_reads(std::uint32_t first, std::uint32_t second) {
  return BranchingProgram::create(
      {{0}, {1}, {2}, {3}},
      {{0, NodeLabel::pass()}, {1, NodeLabel::y(first)}, {2, NodeLabel::y(second)}},
      {{0, 1, std::nullopt}, {1, 2, 0}, {1, 2, 1}, {2, 3, 0}, {2, 3, 1}}, 0, 2, 0, 3);
}

}  // namespace

TEST_SUITE("bp") {
  TEST_CASE("validation examples") {
    const BranchingProgram p = BranchingProgram::create({{0}, {1}}, {{0, NodeLabel::x(1)}},
                                                        {{0, 1, 0}, {0, 1, 1}}, 1, 0, 0, 1);
    CHECK(p.is_deterministic());
    CHECK(p.is_deterministic_given_y());
    CHECK(error_name([] {
            BranchingProgram::create({{0, 1}, {2}}, {{0, NodeLabel::x(1)}}, {{0, 1, 0}}, 1, 0, 0, 2);
          }) == "not-layered");
    CHECK(error_name([] {
            BranchingProgram::create({{0}, {1}}, {{0, NodeLabel::x(1)}}, {{0, 1, 2}}, 1, 0, 0, 1);
          }) == "bad-bit-label");
    CHECK(error_name([] {
            BranchingProgram::create({{0}, {1}}, {{0, NodeLabel::pass()}}, {{0, 1, 1}}, 0, 0, 0, 1);
          }) == "bad-bit-label");
    CHECK(error_name([] {
            BranchingProgram::create({{0}, {1}}, {{0, NodeLabel::x(2)}}, {{0, 1, 1}}, 1, 0, 0, 1);
          }) == "bad-node-label");
    CHECK(error_name([] {
            BranchingProgram::create({{0}, {1}}, {{1, NodeLabel::x(1)}}, {}, 1, 0, 0, 1);
          }) == "bad-node-label");
    CHECK(error_name([] { BranchingProgram::create({{0}, {1}}, {}, {}, 0, 0, 1, 1); }) ==
          "source-sink-misplaced");
    CHECK(error_name([] { BranchingProgram::create({{0}, {1}}, {}, {}, 0, 0, 0, 0); }) ==
          "source-sink-misplaced");
    CHECK(error_name([] { BranchingProgram::create({{0}, {0}}, {}, {}, 0, 0, 0, 0); }) == "not-layered");
  }

  TEST_CASE("determinism flags") {
    const BranchingProgram half = BranchingProgram::create({{0}, {1}}, {{0, NodeLabel::x(1)}},
                                                           {{0, 1, 1}}, 1, 0, 0, 1);
    CHECK_FALSE(half.is_deterministic());
    CHECK(half.is_deterministic_given_y());
    const BranchingProgram twice = BranchingProgram::create(
        {{0}, {1, 2}}, {{0, NodeLabel::y(1)}}, {{0, 1, 1}, {0, 2, 1}}, 0, 1, 0, 2);
    CHECK_FALSE(twice.is_deterministic_given_y());
    CHECK(error_name([&] { bp_count_acc(twice, {}); }) == "not-deterministic");
  }

  TEST_CASE("bp_accepts examples") {
    const BranchingProgram p = BranchingProgram::create({{0}, {1}}, {{0, NodeLabel::x(1)}},
                                                        {{0, 1, 1}}, 1, 0, 0, 1);
    CHECK(bp_accepts(p, {true}, {}));
    CHECK_FALSE(bp_accepts(p, {false}, {}));
    CHECK(error_name([&] { bp_accepts(p, {}, {}); }) == "width-mismatch");

    const BranchingProgram trivial = BranchingProgram::create({{0}}, {}, {}, 2, 1, 0, 0);
    for (const auto& x : check::all_bit_strings(2)) {
      CHECK(bp_accepts(trivial, x, {false}));
      CHECK(bp_accepts(trivial, x, {true}));
    }
    const BranchingProgram both = y_root(1, true);
    CHECK(bp_accepts(both, {}, {false}));
    CHECK(bp_accepts(both, {}, {true}));
  }

  TEST_CASE("bp_count_acc examples") {
    CHECK(bp_count_acc(y_root(1, true), {}) == 2);
    CHECK(bp_count_acc(y_root(1, false), {}) == 1);
    CHECK(bp_count_acc(y_root(2, false), {}) == 2);
    CHECK(error_name([] { bp_count_acc(y_root(kMaxEnumeratedYBits + 1, false), {}); }) ==
          "too-many-y-bits");
  }

  TEST_CASE("read-once certification examples") {
    const ReadOnceCheck ordered = check_read_once_certified(two_reads(1, 2));
    REQUIRE(ordered.certified());
    CHECK(ordered.certificate->cut_layers == std::vector<std::size_t>{0, 1, 2});

    const ReadOnceCheck swapped = check_read_once_certified(two_reads(2, 1));
    CHECK_FALSE(swapped.certified());
    CHECK(swapped.first == 1);
    CHECK(swapped.second == 2);
    CHECK_FALSE(swapped.reason.empty());

    const BranchingProgram no_y = BranchingProgram::create({{0}, {1}}, {{0, NodeLabel::x(1)}},
                                                           {{0, 1, 0}, {0, 1, 1}}, 1, 2, 0, 1);
    const ReadOnceCheck degenerate = check_read_once_certified(no_y);
    REQUIRE(degenerate.certified());
    CHECK(degenerate.certificate->cut_layers.size() == 3);
  }

  TEST_CASE("stagger examples") {
    const BranchingProgram p = two_reads(1, 2);
    const BranchingProgram q = stagger(p);
    CHECK(check_read_once_certified(q).certified());
    CHECK(bp_count_acc(q, {}) == bp_count_acc(p, {}));

    const BranchingProgram repeat = BranchingProgram::create(
        {{0}, {1}, {2}, {3}, {4}},
        {{0, NodeLabel::pass()}, {1, NodeLabel::y(1)}, {2, NodeLabel::y(2)}, {3, NodeLabel::y(1)}},
        {{0, 1, std::nullopt}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}}, 0, 2, 0, 4);
    CHECK(error_name([&] { stagger(repeat); }) == "order-property-violated");
    CHECK(error_name([] { stagger(two_reads(2, 1)); }) == "order-property-violated");
  }

  TEST_CASE("stagger delays reads that would break the bands") {
    // y_2 is read at layer 1 on one branch and y_1 at layer 2 on the other.
    const BranchingProgram p = BranchingProgram::create(
        {{0}, {1, 2}, {3}, {4}},
        {{0, NodeLabel::x(1)}, {1, NodeLabel::y(2)}, {2, NodeLabel::pass()}, {3, NodeLabel::y(1)}},
        {{0, 1, 0}, {0, 2, 1}, {1, 4, 1}, {2, 3, std::nullopt}, {3, 4, 0}}, 1, 2, 0, 4);
    CHECK(reads_y_in_order(p));
    CHECK_FALSE(check_read_once_certified(p).certified());
    const BranchingProgram q = stagger(p);
    CHECK(check_read_once_certified(q).certified());
    for (const auto& x : check::all_bit_strings(1)) {
      CHECK(bp_count_acc(q, x) == bp_count_acc(p, x));
      CHECK(bp_count_fast(q, x) == bp_count_acc(p, x));
    }
    CHECK(error_name([&] { bp_count_fast(p, {false}); }) == "precondition-violated");
  }

  TEST_CASE("bp_count_fast examples") {
    CHECK(bp_count_fast(y_root(2, false), {}) == 2);
    const BranchingProgram dead = BranchingProgram::create({{0}, {1}}, {{0, NodeLabel::y(1)}}, {}, 0, 1, 0, 1);
    CHECK(bp_count_fast(dead, {}) == 0);
    CHECK(bp_count_acc(dead, {}) == 0);
    CHECK(error_name([] { bp_count_fast(y_root(1, true), {true}); }) == "width-mismatch");
  }

  TEST_CASE("random ordered programs: fast count and stagger agree with enumeration") {
    check::Rng rng(101);
    for (int trial = 0; trial < 150; ++trial) {
      const auto num_x = static_cast<std::uint32_t>(check::uniform(rng, 0, 4));
      const auto num_y = static_cast<std::uint32_t>(check::uniform(rng, 0, 4));
      const BranchingProgram p = check::random_ordered_bp(rng, num_x, num_y);
      const BranchingProgram q = stagger(p);
      REQUIRE(check_read_once_certified(q).certified());
      for (const auto& x : check::all_bit_strings(num_x)) {
        const WalkCount expected = bp_count_acc(p, x);
        CHECK(bp_count_acc(q, x) == expected);
        CHECK(bp_count_fast(q, x) == expected);
        if (check_read_once_certified(p).certified()) CHECK(bp_count_fast(p, x) == expected);
      }
    }
  }

  TEST_CASE("nondeterminism bound") {
    CHECK(nondeterminism_bounded(y_root(2, true), 2));
    CHECK_FALSE(nondeterminism_bounded(y_root(3, true), 2));
  }
}
