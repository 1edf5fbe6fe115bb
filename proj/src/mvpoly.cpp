#include "meul/mvpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace meul {

MVPoly::MVPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

MVPoly MVPoly::constant(int nvars, const Rational& value) {
  MVPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), value);
  return p;
}

MVPoly MVPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  MVPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MVPoly MVPoly::linear(int nvars, std::initializer_list<std::pair<int, Rational>> terms) {
  MVPoly p(nvars);
  for (const auto& [var, coef] : terms) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(nvars, 0);
    e[var] = 1;
    p.add_term(e, coef);
  }
  return p;
}

Rational MVPoly::coefficient(const std::vector<int>& expo) const {
  auto it = terms_.find(expo);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MVPoly::add_term(const std::vector<int>& expo, const Rational& coef) {
  if (static_cast<int>(expo.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(expo, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

MVPoly& MVPoly::operator+=(const MVPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MVPoly& MVPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MVPoly operator+(MVPoly lhs, const MVPoly& rhs) {
  lhs += rhs;
  return lhs;
}

MVPoly operator*(const MVPoly& lhs, const MVPoly& rhs) {
  if (lhs.nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  MVPoly out(lhs.nvars_);
  std::vector<int> e(lhs.nvars_);
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < lhs.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MVPoly MVPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  MVPoly out = constant(nvars_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

MVPoly MVPoly::substitute(const std::vector<MVPoly>& forms) const {
  if (static_cast<int>(forms.size()) != nvars_)
    throw std::invalid_argument("need one replacement per variable");
  int target = forms.empty() ? 0 : forms[0].nvars();
  for (const auto& f : forms)
    if (f.nvars() != target) throw std::invalid_argument("replacement variable counts differ");

  // Power cache per variable; exponents in play are small.
  std::vector<std::vector<MVPoly>> powers(forms.size(), {MVPoly::constant(target, 1)});
  auto power = [&](int var, int e) -> const MVPoly& {
    auto& cache = powers[var];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * forms[var]);
    return cache[e];
  };

  MVPoly out(target);
  for (const auto& [expo, coef] : terms_) {
    MVPoly prod = MVPoly::constant(target, coef);
    for (int v = 0; v < nvars_; ++v)
      if (expo[v] > 0) prod = prod * power(v, expo[v]);
    out += prod;
  }
  return out;
}

Rational MVPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point length mismatch");
  Rational total = 0;
  for (const auto& [expo, coef] : terms_) {
    Rational term = coef;
    for (int v = 0; v < nvars_; ++v)
      for (int i = 0; i < expo[v]; ++i) term *= point[v];
    total += term;
  }
  return total;
}

MVPoly MVPoly::reversed_vars() const {
  MVPoly out(nvars_);
  for (const auto& [expo, coef] : terms_) {
    std::vector<int> rev(expo.rbegin(), expo.rend());
    out.add_term(rev, coef);
  }
  return out;
}

bool MVPoly::is_homogeneous(int degree) const {
  for (const auto& [expo, coef] : terms_)
    if (std::accumulate(expo.begin(), expo.end(), 0) != degree) return false;
  return true;
}

int MVPoly::total_degree() const {
  int deg = -1;
  for (const auto& [expo, coef] : terms_)
    deg = std::max(deg, std::accumulate(expo.begin(), expo.end(), 0));
  return deg;
}

MVPoly integrate_last(const MVPoly& p, int upper) {
  const int n = p.nvars();
  if (n < 1) throw std::invalid_argument("nothing to integrate");
  if (upper < 0 || upper >= n - 1) throw std::invalid_argument("upper bound variable out of range");
  MVPoly out(n - 1);
  for (const auto& [expo, coef] : p.terms()) {
    int a = expo[n - 1];
    std::vector<int> e(expo.begin(), expo.end() - 1);
    e[upper] += a + 1;
    out.add_term(e, coef / (a + 1));
  }
  return out;
}

}  // namespace meul
