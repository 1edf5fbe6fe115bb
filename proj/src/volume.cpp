#include "meul/volume.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "meul/counting.hpp"

namespace meul {

namespace {

// One slicing level: builds the m-variable polynomial from the (m-1)-variable
// one. Works in m+1 variables during substitution, the extra slot being the
// integration variable t (always last).
MVPoly volume_step(const MVPoly& prev, int m, bool type_b) {
  const int vars = m + 1;
  const int t = m;
  MVPoly total(m);

  for (int b = 0; b < m; ++b) {  // b = sliced breakpoint, 0-based
    std::vector<MVPoly> forms;
    forms.reserve(m - 1);
    if (b == 0) {
      forms.push_back(MVPoly::linear(vars, {{t, 1}, {1, 1}}));
      for (int j = 2; j < m; ++j) forms.push_back(MVPoly::variable(vars, j));
    } else if (b < m - 1) {
      for (int j = 0; j + 1 < b; ++j) forms.push_back(MVPoly::variable(vars, j));
      forms.push_back(MVPoly::linear(vars, {{b - 1, 1}, {b, 1}, {t, -1}}));
      forms.push_back(MVPoly::linear(vars, {{t, 1}, {b + 1, 1}}));
      for (int j = b + 2; j < m; ++j) forms.push_back(MVPoly::variable(vars, j));
    } else {
      for (int j = 0; j + 2 < m; ++j) forms.push_back(MVPoly::variable(vars, j));
      if (type_b)
        forms.push_back(MVPoly::linear(vars, {{m - 2, 1}, {m - 1, 1}}));
      else
        forms.push_back(MVPoly::linear(vars, {{m - 2, 1}, {m - 1, 1}, {t, -1}}));
    }

    MVPoly branch = integrate_last(prev.substitute(forms), b);
    if (type_b) branch *= Rational(2);
    total += branch;
  }
  return total;
}

MVPoly volume_poly(int n, int cap, bool type_b) {
  if (n < 1) throw std::invalid_argument("volume polynomial needs n >= 1");
  if (n > cap)
    throw resource_limit_error("volume polynomial capped at n = " + std::to_string(cap));
  MVPoly f = MVPoly::variable(1, 0);
  if (type_b) f *= Rational(2);
  for (int m = 2; m <= n; ++m) f = volume_step(f, m, type_b);
  return f;
}

}  // namespace

MVPoly volume_poly_A(int n, int cap) { return volume_poly(n, cap, false); }

MVPoly volume_poly_B(int n, int cap) { return volume_poly(n, cap, true); }

BigInt extract_mixed_eulerian(const MVPoly& f, const Composition& c) {
  const int n = c.size();
  if (f.nvars() != n || !f.is_homogeneous(n))
    throw std::invalid_argument("polynomial is not homogeneous of matching degree");
  Rational value = f.coefficient(c.parts());
  for (int i = 0; i < n; ++i) value *= factorial(c[i]).convert_to<Rational>();
  if (denominator(value) != 1 || value < 0)
    throw std::logic_error("mixed volume extraction did not give a nonnegative integer");
  return numerator(value);
}

PermutohedronSpec::PermutohedronSpec(PermFamily family, std::vector<Rational> y)
    : family_(family), y_(std::move(y)) {
  if (y_.size() < (family_ == PermFamily::A ? 2u : 1u))
    throw std::invalid_argument("parameter vector too short");
  for (std::size_t i = 0; i + 1 < y_.size(); ++i)
    if (y_[i] < y_[i + 1]) throw std::invalid_argument("parameters must be weakly decreasing");
  if (family_ == PermFamily::B && y_.back() < 0)
    throw std::invalid_argument("signed permutohedron parameters must be nonnegative");
}

namespace {

bool prefix_dominated(const std::vector<Rational>& sorted_desc, const std::vector<Rational>& y) {
  Rational xs = 0, ys = 0;
  for (std::size_t k = 0; k + 1 <= sorted_desc.size(); ++k) {
    xs += sorted_desc[k];
    ys += y[k];
    if (xs > ys) return false;
  }
  return true;
}

}  // namespace

bool permutohedron_contains(const PermutohedronSpec& spec, const std::vector<Rational>& x) {
  if (spec.family() != PermFamily::A)
    throw std::invalid_argument("permutohedron_contains needs a family A spec");
  const auto& y = spec.y();
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  Rational xtotal = 0, ytotal = 0;
  for (const auto& v : x) xtotal += v;
  for (const auto& v : y) ytotal += v;
  if (xtotal != ytotal) return false;
  std::vector<Rational> sorted = x;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  // The k-subset maximizing a coordinate sum is the k largest entries, so
  // checking sorted prefixes covers every subset constraint.
  return prefix_dominated(sorted, y);
}

bool signed_permutohedron_contains(const PermutohedronSpec& spec, const std::vector<Rational>& x) {
  if (spec.family() != PermFamily::B)
    throw std::invalid_argument("signed_permutohedron_contains needs a family B spec");
  const auto& y = spec.y();
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  std::vector<Rational> mags;
  mags.reserve(x.size());
  for (const auto& v : x) mags.push_back(v < 0 ? -v : v);
  std::sort(mags.begin(), mags.end(), std::greater<>());
  return prefix_dominated(mags, y);
}

PermutohedronSpec minkowski_to_perm(PermFamily family, const std::vector<Rational>& lambda) {
  if (lambda.empty()) throw std::invalid_argument("weight vector must be nonempty");
  for (const auto& l : lambda)
    if (l < 0) throw std::invalid_argument("weights must be nonnegative");
  const std::size_t n = lambda.size();
  std::vector<Rational> y(family == PermFamily::A ? n + 1 : n, Rational(0));
  Rational suffix = 0;
  for (std::size_t i = n; i-- > 0;) {
    suffix += lambda[i];
    y[i] = suffix;
  }
  return PermutohedronSpec(family, std::move(y));
}

std::vector<Rational> perm_to_minkowski(const PermutohedronSpec& spec) {
  const auto& y = spec.y();
  std::vector<Rational> lambda;
  if (spec.family() == PermFamily::A) {
    lambda.reserve(y.size() - 1);
    for (std::size_t i = 0; i + 1 < y.size(); ++i) lambda.push_back(y[i] - y[i + 1]);
  } else {
    lambda.reserve(y.size());
    for (std::size_t i = 0; i + 1 < y.size(); ++i) lambda.push_back(y[i] - y[i + 1]);
    lambda.push_back(y.back());
  }
  return lambda;  // nonnegative because y is validated weakly decreasing
}

CrossSection cross_section_reduce(const std::vector<Rational>& lambda, const Rational& x) {
  const int n = static_cast<int>(lambda.size());
  if (n < 1) throw std::invalid_argument("weight vector must be nonempty");
  for (const auto& l : lambda)
    if (l < 0) throw std::invalid_argument("weights must be nonnegative");

  // Suffix sums T_i = lambda_i + ... + lambda_n (1-based), T_{n+1} = 0.
  std::vector<Rational> suffix(n + 2, Rational(0));
  for (int i = n; i >= 1; --i) suffix[i] = suffix[i + 1] + lambda[i - 1];
  if (x < 0 || x > suffix[1]) throw std::invalid_argument("slice coordinate out of range");

  int i = 1;
  while (i < n && suffix[i + 1] > x) ++i;  // smallest i with T_{i+1} <= x
  CrossSection out;
  out.index = i;
  out.t = suffix[i] - x;

  if (n == 1) return out;  // slice of a segment family: no weights remain
  out.reduced.reserve(n - 1);
  if (i == 1) {
    out.reduced.push_back(out.t + lambda[1]);
    for (int j = 2; j < n; ++j) out.reduced.push_back(lambda[j]);
  } else if (i < n) {
    for (int j = 0; j + 2 < i; ++j) out.reduced.push_back(lambda[j]);
    out.reduced.push_back(lambda[i - 2] + lambda[i - 1] - out.t);
    out.reduced.push_back(out.t + lambda[i]);
    for (int j = i + 1; j < n; ++j) out.reduced.push_back(lambda[j]);
  } else {
    for (int j = 0; j + 2 < n; ++j) out.reduced.push_back(lambda[j]);
    out.reduced.push_back(lambda[n - 2] + lambda[n - 1] - out.t);
  }
  return out;
}

}  // namespace meul
