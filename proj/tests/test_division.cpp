#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "meul/counting.hpp"
#include "meul/division.hpp"

using namespace meul;

namespace {

Division div_of(std::vector<std::vector<Element>> blocks) { return Division(std::move(blocks)); }

std::vector<int> random_composition(int n, std::mt19937& rng) {
  // n of n+n-1 "stars and bars" slots are stars.
  std::vector<int> slots(2 * n - 1, 0);
  std::fill(slots.begin(), slots.begin() + n, 1);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<int> parts;
  int cur = 0;
  for (int s : slots) {
    if (s == 1) {
      ++cur;
    } else {
      parts.push_back(cur);
      cur = 0;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

TEST_CASE("composition validation") {
  CHECK_THROWS_AS(Composition({}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({-1, 3}), std::invalid_argument);
  CHECK(Composition({1, 0, 2, 1, 1}).size() == 5);
  CHECK(Composition({3, 0, 0}).reversed() == Composition({0, 0, 3}));
}

TEST_CASE("superdiagonal and subdiagonal") {
  CHECK(is_superdiagonal(Composition({2, 1, 0})));
  CHECK_FALSE(is_superdiagonal(Composition({0, 3, 0})));
  CHECK(is_superdiagonal(Composition({1, 1, 1})));
  CHECK(is_subdiagonal(Composition({1, 1, 1})));
  CHECK(is_subdiagonal(Composition({0, 1, 2})));
  CHECK_FALSE(is_subdiagonal(Composition({2, 1, 0})));
}

TEST_CASE("make_division") {
  CHECK(make_division(Composition({1, 0, 2, 1, 1})) ==
        div_of({{1}, {}, {2, 3}, {4}, {5}}));
  CHECK(make_division(Composition({3, 0, 0})) == div_of({{1, 2, 3}, {}, {}}));
  CHECK(make_division(Composition({1, 1, 1})) == div_of({{1}, {2}, {3}}));
}

TEST_CASE("division invariants") {
  CHECK_THROWS_AS(div_of({{1, 2}}), std::invalid_argument);        // block count != size
  CHECK_THROWS_AS(div_of({{2}, {1}}), std::invalid_argument);      // cross-block order
  CHECK_THROWS_AS(div_of({{1}, {1}}), std::invalid_argument);      // repeated element
  CHECK_THROWS_AS(div_of({{2, 1}, {3}, {}}), std::invalid_argument);
  CHECK(div_of({}).empty());
  CHECK_THROWS_AS(div_of({}).shape(), std::invalid_argument);
}

TEST_CASE("admissible elements, type A") {
  CHECK(admissible_elements_A(div_of({{1}, {}, {2, 3}, {4}, {5}})) ==
        std::vector<Element>{1, 2, 3, 4, 5});
  CHECK(admissible_elements_A(div_of({{1, 2, 3, 4}, {}, {}, {}})) == std::vector<Element>{1});
  // Two nonempty end blocks: only the first of the first and last of the last.
  CHECK(admissible_elements_A(div_of({{1, 2}, {}, {3, 4}})) == std::vector<Element>{1, 4});
  CHECK(admissible_elements_A(div_of({})).empty());
}

TEST_CASE("admissible elements, type B") {
  CHECK(admissible_elements_B(div_of({{}, {1, 2}})) == std::vector<Element>{1, 2});
  CHECK(admissible_elements_B(div_of({{1, 2}, {}})) == std::vector<Element>{1});
  CHECK(admissible_elements_B(div_of({{1}, {2}, {3}})) == std::vector<Element>{1, 2, 3});
}

TEST_CASE("deletion, type A") {
  Division d = div_of({{1}, {}, {2, 3}, {4}, {5}});
  CHECK(delete_A(d, 2) == div_of({{1}, {}, {3, 4}, {5}}));
  CHECK(delete_A(div_of({{1}, {}, {4, 5}}), 1) == div_of({{}, {4, 5}}));
  CHECK(delete_A(div_of({{1}, {2}, {3}}), 2) == div_of({{1}, {3}}));
  CHECK(delete_A(div_of({{7}}), 7).empty());

  CHECK_THROWS_AS(delete_A(div_of({{}, {4, 5}}), 4), std::invalid_argument);  // not admissible
  CHECK_THROWS_AS(delete_A(d, 9), std::invalid_argument);                     // absent
  CHECK_THROWS_AS(delete_A(div_of({{1, 2}, {}, {3}}), 2), std::invalid_argument);
}

TEST_CASE("deletion, type B") {
  CHECK(delete_B(div_of({{}, {1, 2}}), 1) == div_of({{2}}));
  CHECK(delete_B(div_of({{}, {1, 2}}), 2) == div_of({{1}}));
  CHECK(delete_B(div_of({{1}, {}, {2, 3}, {4}, {5}}), 2) == div_of({{1}, {}, {3, 4}, {5}}));
  CHECK(delete_B(div_of({{7}}), 7).empty());
  CHECK_THROWS_AS(delete_B(div_of({{1, 2}, {}}), 2), std::invalid_argument);
}

TEST_CASE("every type A admissible element is type B admissible") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : all_compositions(n)) {
      Division d = make_division(c);
      auto a = admissible_elements_A(d);
      auto b = admissible_elements_B(d);
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
}

TEST_CASE("deletion closure: invariants, block count, diagonality") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + static_cast<int>(rng() % 7);
    Composition c(random_composition(n, rng));
    bool type_b = rng() % 2 == 0;
    bool super = is_superdiagonal(c);
    bool sub = is_subdiagonal(c);
    Division d = make_division(c);
    while (!d.empty()) {
      auto adm = type_b ? admissible_elements_B(d) : admissible_elements_A(d);
      REQUIRE(!adm.empty());
      Element s = adm[rng() % adm.size()];
      Division next = type_b ? delete_B(d, s) : delete_A(d, s);
      // The constructor re-validates all order and disjointness invariants;
      // re-wrap to prove the produced value passes them.
      Division revalidated(next.blocks());
      CHECK(revalidated.block_count() == d.block_count() - 1);
      if (!next.empty()) {
        if (super) CHECK(is_superdiagonal(next.shape()));
        if (sub) CHECK(is_subdiagonal(next.shape()));
      }
      d = std::move(next);
    }
  }
}

TEST_CASE("deleted shape depends only on shape and position, not labels") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);
    Composition c(random_composition(n, rng));
    Division d = make_division(c);
    // Same shape on labels 10x+3.
    std::vector<std::vector<Element>> scaled;
    for (const auto& b : d.blocks()) {
      std::vector<Element> nb;
      for (Element e : b) nb.push_back(10 * e + 3);
      scaled.push_back(std::move(nb));
    }
    Division d2(scaled);
    auto adm = admissible_elements_A(d);
    for (Element s : adm) {
      Division x = delete_A(d, s);
      Division y = delete_A(d2, 10 * s + 3);
      if (!x.empty()) CHECK(x.shape() == y.shape());
    }
  }
}
