#include "meul/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "meul/permutations.hpp"

namespace meul {

const BigInt* MemoTable::find(const std::vector<int>& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

void MemoTable::put(const std::vector<int>& key, BigInt value) {
  table_.emplace(key, std::move(value));
}

namespace {

// Children of the deletion recursion, expressed on block-size sequences.
// Deleting the minimum of block 1 merges the remainder into block 2;
// deleting the j-th smallest of an interior block i splits it as
// (c_{i-1}+r, c_i-r-1+c_{i+1}); deleting from block n merges leftwards.
// Type B admits every element of the last block, all giving the same child.
BigInt mixed_eulerian_rec(const std::vector<int>& c, bool type_b, MemoTable& memo) {
  const int n = static_cast<int>(c.size());
  if (n == 1) return type_b ? 2 : 1;
  if (const BigInt* hit = memo.find(c)) return *hit;

  BigInt total = 0;
  if (c[0] >= 1) {
    std::vector<int> child(c.begin() + 1, c.end());
    child[0] += c[0] - 1;
    total += mixed_eulerian_rec(child, type_b, memo);
  }
  for (int i = 1; i + 1 < n; ++i) {
    for (int r = 0; r < c[i]; ++r) {
      std::vector<int> child;
      child.reserve(n - 1);
      child.insert(child.end(), c.begin(), c.begin() + i - 1);
      child.push_back(c[i - 1] + r);
      child.push_back(c[i] - r - 1 + c[i + 1]);
      child.insert(child.end(), c.begin() + i + 2, c.end());
      total += mixed_eulerian_rec(child, type_b, memo);
    }
  }
  if (c[n - 1] >= 1) {
    std::vector<int> child(c.begin(), c.end() - 1);
    child[n - 2] += c[n - 1] - 1;
    BigInt term = mixed_eulerian_rec(child, type_b, memo);
    total += type_b ? term * c[n - 1] : term;
  }
  if (type_b) total *= 2;

  memo.put(c, total);
  return total;
}

}  // namespace

BigInt mixed_eulerian_A(const Composition& c, MemoTable& memo) {
  return mixed_eulerian_rec(c.parts(), false, memo);
}

BigInt mixed_eulerian_A(const Composition& c) {
  MemoTable memo;
  return mixed_eulerian_A(c, memo);
}

BigInt mixed_eulerian_B(const Composition& c, MemoTable& memo) {
  return mixed_eulerian_rec(c.parts(), true, memo);
}

BigInt mixed_eulerian_B(const Composition& c) {
  MemoTable memo;
  return mixed_eulerian_B(c, memo);
}

BigInt eulerian(int n, int k) {
  if (n < 1) throw std::invalid_argument("eulerian needs n >= 1");
  if (k <= 0 || k > n) return 0;
  // A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1)
  std::vector<BigInt> row{BigInt(1)};  // A(1,1)
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(m);
    for (int j = 1; j <= m; ++j) {
      BigInt v = 0;
      if (j <= m - 1) v += j * row[j - 1];
      if (j - 1 >= 1) v += (m - j + 1) * row[j - 2];
      next[j - 1] = v;
    }
    row = std::move(next);
  }
  return row[k - 1];
}

BigInt eulerian_r(int n, int k, int r) {
  if (n < 0) throw std::invalid_argument("eulerian_r needs n >= 0");
  if (r < 0 || r > n) throw std::invalid_argument("eulerian_r needs 0 <= r <= n");
  std::vector<Element> w(n + 1);
  std::iota(w.begin(), w.end(), 1);
  BigInt count = 0;
  do {
    if (w[0] == r + 1 && descent_count(w) == k - 1) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

std::vector<Composition> all_compositions(int n) {
  if (n < 1) throw std::invalid_argument("all_compositions needs n >= 1");
  std::vector<Composition> out;
  std::vector<int> cur(n, 0);
  // Lexicographic by construction: place what remains, leftmost varying slowest.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[pos] = remaining;
      out.push_back(Composition(cur));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace meul
