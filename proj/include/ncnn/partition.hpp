#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncnn/family.hpp"

namespace ncnn {

// A classical partition of {+-1..+-n} (type A: of [n] only, the negative side
// being redundant).  Nonzero blocks come in pairs of opposite sign; the zero
// block is the unique negation-fixed part and is stored without the implicit
// element 0.  Canonical form: every block sorted ascending, block list sorted
// lexicographically, so equality is structural.
class ClassicalPartition {
 public:
  ClassicalPartition() = default;

  // All nonzero blocks (for A: the positive blocks) plus the zero block.
  static ClassicalPartition make(int n, std::vector<std::vector<int>> blocks,
                                 std::vector<int> zero);

  // Type A helper: a partition of [n].
  static ClassicalPartition from_positive_partition(
      int n, std::vector<std::vector<int>> blocks);

  // One representative per +- pair plus the zero block; mirrors are
  // reconstructed.  This is the JSON reader path.
  static ClassicalPartition from_representatives(
      const GroupFamily& g, std::vector<std::vector<int>> reps,
      std::vector<int> zero);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& zero_block() const { return zero_; }
  bool has_zero_block() const { return !zero_.empty(); }

  // The block containing e, or the zero block if e is in it.
  const std::vector<int>& block_of(int e) const;
  bool in_zero_block(int e) const;

  // One representative per +- pair: the block whose minimum-absolute-value
  // element is positive (equivalently the <_lp-least of the pair), elements
  // sorted by absolute value, blocks ordered by least positive element.
  std::vector<std::vector<int>> representatives() const;

  // Negate a set of elements wholesale (used for the D_n +-1 exchange).
  ClassicalPartition with_negated(const std::vector<int>& elems) const;

  // Family invariants: negation symmetry shape, D zero-block size, A
  // positivity.  Throws InvariantViolation.
  void validate(const GroupFamily& g) const;

  bool operator==(const ClassicalPartition&) const = default;
  auto operator<=>(const ClassicalPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;  // sorted blocks, sorted list
  std::vector<int> zero_;                 // sorted, negation-closed
  void canonicalise();
};

// A ground order for bump diagrams: a strict weak order given by ranks.
// Total except for D nonnesting, where exactly {1,-1} share a rank.
struct GroundOrder {
  std::vector<int> domain;  // ascending printed order (ties adjacent)
  std::unordered_map<int, int> rank;

  bool contains(int e) const { return rank.count(e) != 0; }
  bool less(int a, int b) const { return rank.at(a) < rank.at(b); }
  bool comparable(int a, int b) const { return rank.at(a) != rank.at(b); }
};

// The printed ground orders.  d_cut is required exactly for (D, NC) and
// selects the cut c in {2..n}; second_variant picks the order with 1 and -1
// exchanged.
GroundOrder ground_order(const GroupFamily& g, Mode mode,
                         std::optional<int> d_cut = std::nullopt,
                         bool second_variant = false);

// Cyclic rotation of a total ground order: the order starting just above s0.
GroundOrder rotate_order(const GroundOrder& o, int s0);

using Edge = std::pair<int, int>;  // (lower, higher) under the ground order

// Edges between order-consecutive same-block elements.  For B nonnesting the
// element 0 participates as a member of the zero block.
std::vector<Edge> bump_graph(const ClassicalPartition& p, const GroundOrder& o);

bool is_noncrossing_wrt(const ClassicalPartition& p, const GroundOrder& o);
bool is_nonnesting_wrt(const ClassicalPartition& p, const GroundOrder& o);

// The classical noncrossing/nonnesting predicates.  For D both quantify the
// two-order definition over cuts and additionally require a nonempty zero
// block to contain +-1 (the centre of the circular picture; without this the
// linear orders cannot see a zero block swallowing the centre dots).
bool is_classical_noncrossing(const GroupFamily& g, const ClassicalPartition& p);
bool is_classical_nonnesting(const GroupFamily& g, const ClassicalPartition& p);
bool satisfies_mode(const GroupFamily& g, Mode mode, const ClassicalPartition& p);

struct PartitionType {
  int zero_size = 0;               // nonzero elements of the zero block
  std::vector<int> pair_sizes;     // sorted descending, one per +- pair

  bool operator==(const PartitionType&) const = default;
  auto operator<=>(const PartitionType&) const = default;
};

PartitionType partition_type(const ClassicalPartition& p);

// Is q a refinement of p (every block of q inside a block of p, zero block
// included, as partitions of {+-1..+-n, 0})?
bool refines(const ClassicalPartition& q, const ClassicalPartition& p);

// Every classical partition for g satisfying the mode predicate, exactly
// once, sorted canonically.
void for_each_classical(const GroupFamily& g, Mode mode,
                        const std::function<void(const ClassicalPartition&)>& fn);
std::vector<ClassicalPartition> enumerate_classical(const GroupFamily& g,
                                                    Mode mode);

// All classical partitions regardless of mode (the raw symmetric-partition
// generator behind enumerate_classical).
void for_each_symmetric_partition(
    const GroupFamily& g,
    const std::function<void(const ClassicalPartition&)>& fn);

}  // namespace ncnn
