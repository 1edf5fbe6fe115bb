#pragma once

#include <span>
#include <string>

#include "meul/composition.hpp"
#include "meul/division.hpp"
#include "meul/mvpoly.hpp"
#include "meul/permutations.hpp"

namespace meul {

std::string format_composition(const Composition& c);  // "1,0,2,1,1"

/// Accepts "1,0,2,1,1" or the compact digit form "10211" (n <= 9).
Composition parse_composition(const std::string& text);

/// Blocks joined by "|", elements comma-separated, empty block "-".
std::string format_division(const Division& d);
Division parse_division(const std::string& text);

/// Space-free digit string when all elements are single digits, otherwise
/// comma-separated.
std::string format_permutation(const Permutation& w);

std::string format_rational(const Rational& r);  // always "num/den"
Rational parse_rational(const std::string& text);  // "3/4" or "3"

/// One line per term, "c1,...,cn : num/den", exponent vectors in
/// lexicographically descending order.
std::string format_poly(const MVPoly& p);

}  // namespace meul
