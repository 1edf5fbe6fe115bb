#pragma once

#include <unordered_map>
#include <vector>

#include "meul/composition.hpp"
#include "meul/numeric.hpp"

namespace meul {

/// Write-once memo keyed by composition parts. Values depend only on the
/// key, so duplicate computation is harmless and insertion order is
/// irrelevant.
class MemoTable {
 public:
  const BigInt* find(const std::vector<int>& key) const;
  void put(const std::vector<int>& key, BigInt value);
  std::size_t size() const { return table_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_map<std::vector<int>, BigInt, Hash> table_;
};

/// The type A mixed Eulerian number A_c, by the deletion recursion on
/// block-size sequences. Exact; memoized per call unless a table is given.
BigInt mixed_eulerian_A(const Composition& c);
BigInt mixed_eulerian_A(const Composition& c, MemoTable& memo);

/// The type B analogue B_c. Always divisible by 2^n.
BigInt mixed_eulerian_B(const Composition& c);
BigInt mixed_eulerian_B(const Composition& c, MemoTable& memo);

/// Eulerian number A(n,k): permutations of n letters with k-1 descents.
/// Zero when k <= 0 or k > n. Requires n >= 1.
BigInt eulerian(int n, int k);

/// Refined Eulerian number A(n,k;r): permutations w of n+1 letters with
/// k-1 descents and w_1 = r+1, counted by exhaustive scan of S_{n+1}.
/// Requires 0 <= r <= n; n = 0 is allowed (the singleton S_1).
BigInt eulerian_r(int n, int k, int r);

BigInt catalan(int n);
BigInt binomial(int n, int k);
BigInt factorial(int n);

/// All weak compositions of n into n parts, lexicographically ascending.
/// There are binomial(2n-1, n-1) of them.
std::vector<Composition> all_compositions(int n);

}  // namespace meul
