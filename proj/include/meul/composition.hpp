#pragma once

#include <vector>

namespace meul {

/// A weak composition of n into n parts: nonnegative integers (c_1,...,c_n)
/// with c_1 + ... + c_n = n. These index mixed Eulerian numbers.
class Composition {
 public:
  /// Validates that the parts are nonnegative and sum to their count.
  explicit Composition(std::vector<int> parts);

  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[i]; }  // 0-based

  Composition reversed() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Prefix sums satisfy c_1 + ... + c_i >= i for all i.
bool is_superdiagonal(const Composition& c);

/// Suffix sums satisfy c_n + ... + c_{n-i+1} >= i for all i.
bool is_subdiagonal(const Composition& c);

}  // namespace meul
