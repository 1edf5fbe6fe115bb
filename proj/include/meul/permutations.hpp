#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "meul/division.hpp"
#include "meul/numeric.hpp"

namespace meul {

/// A full deletion order: every element of the ground set exactly once.
using Permutation = std::vector<Element>;

/// For each element, the 1-based index of the block it occupied immediately
/// before its deletion. Any map sending each element of block i into
/// {1,...,i} is an index function; the realizable ones come from
/// admissible deletion orders.
using IndexFunction = std::map<Element, int>;

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// All deletion orders realizable by chains of admissible type A deletions,
/// in lexicographic order. Throws resource_limit_error past `cap` outputs.
std::vector<Permutation> enumerate_A(const Division& d,
                                     std::size_t cap = kDefaultEnumerationCap);
std::vector<Permutation> enumerate_B(const Division& d,
                                     std::size_t cap = kDefaultEnumerationCap);

/// Counting variants that do not materialize the permutations.
BigInt count_permutations_A(const Division& d);
BigInt count_permutations_B(const Division& d);

/// Stepwise admissibility check; short-circuits on the first bad step.
/// Throws std::invalid_argument if w is not a permutation of the ground set.
bool is_c_permutation_A(const Division& d, const Permutation& w);
bool is_c_permutation_B(const Division& d, const Permutation& w);

/// The index function realized by a type A deletion order w.
/// Throws std::invalid_argument if w is not admissible for d.
IndexFunction index_function(const Division& d, const Permutation& w);

/// Every function mapping block i into {1,...,i}, in a deterministic
/// odometer order over elements ascending. There are prod_i i^{c_i} of them.
std::vector<IndexFunction> enumerate_index_functions(const Division& d);

/// Positions i with seq[i] > seq[i+1].
int descent_count(std::span<const Element> seq);

/// Descents of the sequence prefix,seq[0],seq[1],...
int descent_count_with_prefix(Element prefix, std::span<const Element> seq);

/// Runs the circular deletion process: blocks B_1..B_{n+1} on a circle,
/// B_i holding the i-th block of the canonical division of c and B_{n+1}
/// empty. Deleting s removes s and its whole block, pushing the part left
/// of s into the counterclockwise neighbour and the part right of s into
/// the clockwise neighbour. Returns the original index (1-based, in
/// 1..n+1) of the single block that survives all n deletions.
int circular_final_block(const Composition& c, const Permutation& w);

namespace detail {
/// Depth-first walk over all admissible deletion orders, increasing
/// element order at each step; visit(w) is called once per complete order.
/// Returns false if visit ever returns false (early stop).
bool walk_c_permutations(const Division& d, bool type_b,
                         const std::function<bool(const Permutation&)>& visit);
}  // namespace detail

}  // namespace meul
