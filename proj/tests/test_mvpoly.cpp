#include <doctest.h>

#include "meul/mvpoly.hpp"

using namespace meul;

TEST_CASE("basic arithmetic") {
  MVPoly x = MVPoly::variable(2, 0);
  MVPoly y = MVPoly::variable(2, 1);
  MVPoly p = (x + y) * (x + y);
  CHECK(p.coefficient({2, 0}) == 1);
  CHECK(p.coefficient({1, 1}) == 2);
  CHECK(p.coefficient({0, 2}) == 1);
  CHECK(p.coefficient({0, 0}) == 0);
  CHECK(p == (x + y).pow(2));

  MVPoly q = p;
  q *= Rational(-1);
  CHECK((p + q).is_zero());

  CHECK(MVPoly(3).is_zero());
  CHECK(MVPoly::constant(2, 0).is_zero());
  CHECK(x.pow(0) == MVPoly::constant(2, 1));
}

TEST_CASE("cancellation drops terms") {
  MVPoly p(1);
  p.add_term({1}, Rational(1, 2));
  p.add_term({1}, Rational(-1, 2));
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
}

TEST_CASE("substitution expands linear forms") {
  // p(u) = u^2 with u = a + b - t.
  MVPoly p = MVPoly::variable(1, 0).pow(2);
  MVPoly form = MVPoly::linear(3, {{0, 1}, {1, 1}, {2, -1}});
  MVPoly q = p.substitute({form});
  CHECK(q.coefficient({2, 0, 0}) == 1);
  CHECK(q.coefficient({1, 1, 0}) == 2);
  CHECK(q.coefficient({1, 0, 1}) == -2);
  CHECK(q.coefficient({0, 1, 1}) == -2);
  CHECK(q.coefficient({0, 0, 2}) == 1);
  CHECK(q.term_count() == 6);
}

TEST_CASE("definite integration in the last variable") {
  // Integral of (t + b) dt from 0 to a equals a^2/2 + ab.
  MVPoly integrand(3);  // vars a, b, t
  integrand.add_term({0, 0, 1}, 1);
  integrand.add_term({0, 1, 0}, 1);
  MVPoly result = integrate_last(integrand, 0);
  MVPoly expect(2);
  expect.add_term({2, 0}, Rational(1, 2));
  expect.add_term({1, 1}, 1);
  CHECK(result == expect);
  CHECK_THROWS_AS(integrate_last(integrand, 2), std::invalid_argument);
}

TEST_CASE("evaluation is exact") {
  MVPoly p(2);
  p.add_term({2, 0}, Rational(1, 2));
  p.add_term({1, 1}, 2);
  p.add_term({0, 2}, Rational(1, 2));
  CHECK(p.evaluate({Rational(1), Rational(1)}) == 3);
  CHECK(p.evaluate({Rational(1, 3), Rational(0)}) == Rational(1, 18));
  CHECK_THROWS_AS(p.evaluate({Rational(1)}), std::invalid_argument);
}

TEST_CASE("reversal and homogeneity") {
  MVPoly p(3);
  p.add_term({2, 1, 0}, Rational(5, 3));
  MVPoly r = p.reversed_vars();
  CHECK(r.coefficient({0, 1, 2}) == Rational(5, 3));
  CHECK(p.is_homogeneous(3));
  CHECK_FALSE(p.is_homogeneous(2));
  CHECK(p.total_degree() == 3);
  CHECK(MVPoly(2).total_degree() == -1);
  p.add_term({0, 0, 1}, 1);
  CHECK_FALSE(p.is_homogeneous(3));
}
