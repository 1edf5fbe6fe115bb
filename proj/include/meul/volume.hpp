#pragma once

#include <vector>

#include "meul/composition.hpp"
#include "meul/mvpoly.hpp"
#include "meul/numeric.hpp"

namespace meul {

inline constexpr int kDefaultOracleCap = 8;

/// Volume of the weighted Minkowski sum of hypersimplices as an exact
/// homogeneous degree-n polynomial in the weights, built by slicing on the
/// first coordinate and integrating the resulting lower-dimensional sums
/// symbolically. Independent of the deletion recursion on counts.
MVPoly volume_poly_A(int n, int cap = kDefaultOracleCap);

/// Type B analogue over the cross-polytope family; degree n with an extra
/// factor 2 per slice, base 2*lambda_1.
MVPoly volume_poly_B(int n, int cap = kDefaultOracleCap);

/// Reads a mixed volume out of the polynomial: (prod c_i!) times the
/// coefficient of lambda^c. Throws std::invalid_argument on a degree
/// mismatch and std::logic_error if the result is not a nonnegative
/// integer (that would mean the oracle itself is broken).
BigInt extract_mixed_eulerian(const MVPoly& f, const Composition& c);

enum class PermFamily { A, B };

/// A permutohedron P(y) (family A, y of length n+1) or signed
/// permutohedron SP(y) (family B, y of length n, y_n >= 0), with y weakly
/// decreasing.
class PermutohedronSpec {
 public:
  PermutohedronSpec(PermFamily family, std::vector<Rational> y);
  PermFamily family() const { return family_; }
  const std::vector<Rational>& y() const { return y_; }

 private:
  PermFamily family_;
  std::vector<Rational> y_;
};

/// Point membership by the prefix-sum criterion: the k largest coordinates
/// of x must not exceed y_1 + ... + y_k, and the totals must agree.
bool permutohedron_contains(const PermutohedronSpec& spec, const std::vector<Rational>& x);

/// Same with absolute values and no total constraint.
bool signed_permutohedron_contains(const PermutohedronSpec& spec, const std::vector<Rational>& x);

/// Weighted Minkowski sum -> permutohedron parameters (suffix sums, with a
/// trailing zero in family A). Inverse below via consecutive differences;
/// in family A the pair is inverse up to normalizing y_{n+1} to 0.
PermutohedronSpec minkowski_to_perm(PermFamily family, const std::vector<Rational>& lambda);
std::vector<Rational> perm_to_minkowski(const PermutohedronSpec& spec);

struct CrossSection {
  int index;                     // 1-based case selector
  Rational t;                    // distance below the upper breakpoint
  std::vector<Rational> reduced; // weights of the (n-1)-dimensional slice
};

/// Slices the weighted Minkowski sum at first coordinate x. Requires
/// 0 <= x <= sum(lambda); at a breakpoint the smaller case index is
/// returned (both sides describe the same polytope there).
CrossSection cross_section_reduce(const std::vector<Rational>& lambda, const Rational& x);

}  // namespace meul
