#include <doctest.h>

#include <set>

#include "meul/permutations.hpp"
#include "meul/star.hpp"

using namespace meul;

namespace {

StarPermutation sp_of(std::vector<std::optional<Element>> entries) {
  return StarPermutation{std::move(entries)};
}

constexpr std::optional<Element> kStar = std::nullopt;

}  // namespace

TEST_CASE("star descents") {
  CHECK(star_descents(sp_of({kStar, kStar})) == std::vector<int>{1, 2});
  CHECK(star_descents(sp_of({2, 1})) == std::vector<int>{1});
  CHECK(star_descents(sp_of({2, kStar, 1})) == std::vector<int>{1, 2});
  CHECK(star_descents(sp_of({1, kStar, 2})) == std::vector<int>{2});
  CHECK(star_descents(sp_of({})).empty());
}

TEST_CASE("c1 descents") {
  std::set<Element> empty;
  CHECK(c1_descent_count(5, std::vector<Element>{3, 1}, empty) == 2);  // 5>3 and 3>1
  CHECK(c1_descent_count(0, std::vector<Element>{3, 1}, empty) == 1);
  // With an empty distinguished set this is the ordinary descent count.
  for (auto seq : {std::vector<Element>{1, 2, 3}, {3, 2, 1}, {2, 3, 1}})
    CHECK(c1_descent_count(0, seq, empty) == descent_count_with_prefix(0, seq));
  // Members of the distinguished set always count; outsiders compare with
  // the next outsider, skipping members in between.
  std::set<Element> c1{10, 20};
  CHECK(c1_descent_count(5, std::vector<Element>{10, 20, 3}, c1) == 3);  // 10, 20, and 5>3
  CHECK(c1_descent_count(5, std::vector<Element>{10, 20, 7}, c1) == 2);  // 5<7 now
}

TEST_CASE("star bijection on a three-element division") {
  // Shape (1,1,1) with k=3: first block {2}, middle {4}, last {6}; the
  // pivot 5 sits strictly between the last two blocks.
  Division d({{2}, {4}, {6}});
  const int k = 3;
  const Element lambda = 5;

  auto perms = enumerate_A(d);
  REQUIRE(perms.size() == 6);
  std::set<StarPermutation> images;
  for (const auto& w : perms) {
    StarPermutation sp = c_permutation_to_star(w, d, k, lambda);
    CHECK(sp.entries.front() == std::optional<Element>(lambda));
    CHECK(star_descents(sp).size() == k - 1);
    CHECK(star_to_c_permutation(sp, d, k, lambda) == w);
    images.insert(sp);
  }
  CHECK(images.size() == perms.size());
}

TEST_CASE("star conversion validation") {
  Division d({{2}, {4}, {6}});
  CHECK_THROWS_AS(star_to_c_permutation(sp_of({4, 5, 6}), d, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(star_to_c_permutation(sp_of({5, kStar, kStar, 4, 6}), d, 3, 5),
                  std::invalid_argument);  // too many stars
  CHECK_THROWS_AS(star_to_c_permutation(sp_of({5, 4, 6}), d, 3, 5),
                  std::invalid_argument);  // only one star-descent
  CHECK_THROWS_AS(star_to_c_permutation(sp_of({5, 6, 4}), d, 2, 5),
                  std::invalid_argument);  // k out of range
  CHECK_THROWS_AS(c_permutation_to_star({2, 4, 6}, d, 3, 4), std::invalid_argument);  // bad pivot
}
