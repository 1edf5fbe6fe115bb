#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "meul/counting.hpp"
#include "meul/permutations.hpp"

using namespace meul;

namespace {

// Reference descent statistic by exhaustive scan, used to pin expected
// values before trusting any recurrence.
BigInt count_by_descents(int n, int descents) {
  std::vector<Element> w(n);
  std::iota(w.begin(), w.end(), 1);
  BigInt count = 0;
  do {
    if (descent_count(w) == descents) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

}  // namespace

TEST_CASE("mixed_eulerian_A known values") {
  for (int n = 1; n <= 7; ++n)
    CHECK(mixed_eulerian_A(Composition(std::vector<int>(n, 1))) == factorial(n));
  CHECK(mixed_eulerian_A(Composition({2, 0, 1})) == 3);
  CHECK(mixed_eulerian_A(Composition({2, 1, 0})) == 2);  // staircase product 1*1*2
  // Single middle block: the count is the descent count statistic.
  CHECK(count_by_descents(3, 1) == 4);
  CHECK(mixed_eulerian_A(Composition({0, 3, 0})) == 4);
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      std::vector<int> c(n, 0);
      c[k - 1] = n;
      CHECK(mixed_eulerian_A(Composition(c)) == count_by_descents(n, k - 1));
    }
}

TEST_CASE("mixed_eulerian_A reversal and positivity") {
  MemoTable memo;
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : all_compositions(n)) {
      BigInt a = mixed_eulerian_A(c, memo);
      CHECK(a >= 1);
      CHECK(a == mixed_eulerian_A(c.reversed(), memo));
    }
}

TEST_CASE("mixed_eulerian_B known values") {
  // By hand from the recursion: B over (1,1) doubles the two single-block
  // children 2+2; over (2,0) only the leading child contributes.
  CHECK(mixed_eulerian_B(Composition({1, 1})) == 8);
  CHECK(mixed_eulerian_B(Composition({2, 0})) == 4);
  CHECK(mixed_eulerian_B(Composition({0, 2})) == 8);
  for (int n = 1; n <= 6; ++n)
    CHECK(mixed_eulerian_B(Composition(std::vector<int>(n, 1))) ==
          factorial(n) * (BigInt(1) << n));
}

TEST_CASE("mixed_eulerian_B divisibility and lower bound") {
  MemoTable memo_a, memo_b;
  for (int n = 1; n <= 6; ++n) {
    BigInt scale = BigInt(1) << n;
    for (const auto& c : all_compositions(n)) {
      BigInt b = mixed_eulerian_B(c, memo_b);
      CHECK(b % scale == 0);
      CHECK(b >= scale * mixed_eulerian_A(c, memo_a));
    }
  }
}

TEST_CASE("eulerian against exhaustive descent counts") {
  CHECK(eulerian(3, 2) == 4);
  CHECK(eulerian(2, 5) == 0);
  CHECK(eulerian(4, 0) == 0);
  for (int n = 1; n <= 8; ++n) CHECK(eulerian(n, 1) == 1);
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) CHECK(eulerian(n, k) == count_by_descents(n, k - 1));
}

TEST_CASE("refined eulerian by brute force") {
  CHECK(eulerian_r(2, 2, 1) == 2);  // 213 and 231
  CHECK(eulerian_r(2, 3, 1) == 0);
  CHECK(eulerian_r(0, 1, 0) == 1);  // the singleton permutation
  CHECK_THROWS_AS(eulerian_r(3, 1, 4), std::invalid_argument);
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= n; ++r) {
      BigInt total = 0;
      for (int k = 0; k <= n + 2; ++k) total += eulerian_r(n, k, r);
      CHECK(total == factorial(n));  // each w with w_1 = r+1 counted once
    }
}

TEST_CASE("catalan, binomial, factorial") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 7) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(7) == 5040);
}

TEST_CASE("all_compositions") {
  auto one = all_compositions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Composition({1}));

  auto two = all_compositions(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == Composition({0, 2}));
  CHECK(two[1] == Composition({1, 1}));
  CHECK(two[2] == Composition({2, 0}));

  CHECK(all_compositions(3).size() == 10);
  for (int n = 1; n <= 7; ++n) {
    auto comps = all_compositions(n);
    CHECK(BigInt(comps.size()) == binomial(2 * n - 1, n - 1));
    CHECK(std::is_sorted(comps.begin(), comps.end()));
  }
}

TEST_CASE("memoized and cold computations agree") {
  MemoTable first, second;
  for (const auto& c : all_compositions(5)) {
    BigInt a = mixed_eulerian_A(c, first);
    CHECK(a == mixed_eulerian_A(c, second));
    CHECK(a == mixed_eulerian_A(c));  // fresh table per call
  }
  CHECK(first.size() == second.size());
}

TEST_CASE("recursion matches enumeration at small sizes") {
  MemoTable memo_a, memo_b;
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : all_compositions(n)) {
      Division d = make_division(c);
      CHECK(mixed_eulerian_A(c, memo_a) == count_permutations_A(d));
      CHECK(mixed_eulerian_B(c, memo_b) == (BigInt(1) << n) * count_permutations_B(d));
    }
}
