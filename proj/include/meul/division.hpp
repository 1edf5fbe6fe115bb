#pragma once

#include <vector>

#include "meul/composition.hpp"

namespace meul {

/// An element of a ground set. Only the total order matters.
using Element = int;

/// An ordered sequence of m pairwise disjoint blocks partitioning a ground
/// set of m integers, increasing within each block and across blocks
/// (every element of an earlier block is smaller than every element of a
/// later block). Blocks may be empty. The empty division (m = 0) is a
/// valid value: it is what deleting the last element produces.
class Division {
 public:
  Division() = default;  // empty division
  /// Validates all invariants, including block count == ground-set size.
  explicit Division(std::vector<std::vector<Element>> blocks);

  int block_count() const { return static_cast<int>(blocks_.size()); }
  bool empty() const { return blocks_.empty(); }
  const std::vector<Element>& block(int i) const { return blocks_[i]; }  // 0-based
  const std::vector<std::vector<Element>>& blocks() const { return blocks_; }

  /// The block-size sequence |C| = (|C_1|,...,|C_m|). Requires m >= 1.
  Composition shape() const;

  std::vector<Element> ground_set() const;  // sorted ascending
  bool contains(Element s) const;
  int block_of(Element s) const;  // 0-based index, -1 if absent

  friend bool operator==(const Division&, const Division&) = default;

 private:
  std::vector<std::vector<Element>> blocks_;
};

/// The canonical division of {1,...,n} with consecutive blocks of sizes
/// c_1,...,c_n. Counts of admissible permutations depend only on block
/// sizes, so this is the standard representative.
Division make_division(const Composition& c);

/// Elements removable in one step: the smallest of the first block, the
/// largest of the last block, and everything in a strictly interior block.
std::vector<Element> admissible_elements_A(const Division& d);

/// Type B rule: the smallest of the first block, and everything in any
/// other block (including all of the last block).
std::vector<Element> admissible_elements_B(const Division& d);

/// Removes an admissible element and merges its block into its neighbours:
/// the part below s joins the block on the left, the part above s joins the
/// block on the right; at the ends the whole remainder merges inward.
/// Throws std::invalid_argument if s is absent or not admissible.
Division delete_A(const Division& d, Element s);

/// Same as delete_A except in the last block, where any element may be
/// removed and the remainder of the block merges into its left neighbour.
Division delete_B(const Division& d, Element s);

}  // namespace meul
