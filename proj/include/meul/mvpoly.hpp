#pragma once

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "meul/numeric.hpp"

namespace meul {

/// Sparse multivariate polynomial with exact rational coefficients, keyed
/// by exponent vectors of fixed length. Zero coefficients are never stored.
class MVPoly {
 public:
  explicit MVPoly(int nvars);
  static MVPoly constant(int nvars, const Rational& value);
  static MVPoly variable(int nvars, int index);
  /// Linear combination sum coef * x_var.
  static MVPoly linear(int nvars, std::initializer_list<std::pair<int, Rational>> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  Rational coefficient(const std::vector<int>& expo) const;
  /// Adds coef * x^expo, merging with an existing term and dropping zeros.
  void add_term(const std::vector<int>& expo, const Rational& coef);

  MVPoly& operator+=(const MVPoly& rhs);
  MVPoly& operator*=(const Rational& scalar);
  friend MVPoly operator+(MVPoly lhs, const MVPoly& rhs);
  friend MVPoly operator*(const MVPoly& lhs, const MVPoly& rhs);
  friend bool operator==(const MVPoly&, const MVPoly&) = default;

  MVPoly pow(int e) const;

  /// Composition: replaces variable j by forms[j]. All forms must share a
  /// common variable count, which becomes the result's.
  MVPoly substitute(const std::vector<MVPoly>& forms) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Same polynomial with the variable order reversed.
  MVPoly reversed_vars() const;

  bool is_homogeneous(int degree) const;
  int total_degree() const;  // -1 for the zero polynomial

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

/// Definite integral in the last variable from 0 to the variable `upper`
/// among the remaining ones: t^a -> upper^{a+1}/(a+1) termwise. The result
/// has one variable fewer.
MVPoly integrate_last(const MVPoly& p, int upper);

}  // namespace meul
