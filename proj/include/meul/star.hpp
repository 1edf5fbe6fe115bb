#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "meul/division.hpp"
#include "meul/permutations.hpp"

namespace meul {

/// A finite sequence of elements and placeholder stars in which every
/// element of the underlying set appears exactly once. Stars stand for
/// first-block elements whose values are recoverable from their order.
struct StarPermutation {
  // nullopt is a star.
  std::vector<std::optional<Element>> entries;

  friend bool operator==(const StarPermutation&, const StarPermutation&) = default;
  friend auto operator<=>(const StarPermutation&, const StarPermutation&) = default;
};

/// 1-based positions i that either hold a star or exceed the next
/// non-star entry to their right.
std::vector<int> star_descents(const StarPermutation& sp);

/// Descents of the sequence prefix,seq... relative to a distinguished set:
/// a term is counted if it lies in c1, or if it exceeds the next term not
/// in c1 (terms of c1 in between are skipped over).
int c1_descent_count(Element prefix, std::span<const Element> seq, const std::set<Element>& c1);

/// The two directions of the bijection between deletion orders of a
/// division shaped (n-m, 0^{k-3}, r, m-r, 0^{n-k}) and star-permutations
/// of block k-1, lambda, block k with lambda first, at most n-m stars and
/// exactly k-1 star-descents. lambda must order strictly between blocks
/// k-1 and k and lie outside the ground set.
Permutation star_to_c_permutation(const StarPermutation& sp, const Division& d, int k,
                                  Element lambda);
StarPermutation c_permutation_to_star(const Permutation& w, const Division& d, int k,
                                      Element lambda);

}  // namespace meul
