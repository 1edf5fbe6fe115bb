#include "meul/division.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace meul {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
  long long sum = 0;
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
    sum += p;
  }
  if (sum != static_cast<long long>(parts_.size()))
    throw std::invalid_argument("composition parts must sum to their count (got sum " +
                                std::to_string(sum) + " for " + std::to_string(parts_.size()) +
                                " parts)");
}

Composition Composition::reversed() const {
  std::vector<int> r(parts_.rbegin(), parts_.rend());
  return Composition(std::move(r));
}

bool is_superdiagonal(const Composition& c) {
  int prefix = 0;
  for (int i = 0; i < c.size(); ++i) {
    prefix += c[i];
    if (prefix < i + 1) return false;
  }
  return true;
}

bool is_subdiagonal(const Composition& c) { return is_superdiagonal(c.reversed()); }

Division::Division(std::vector<std::vector<Element>> blocks) : blocks_(std::move(blocks)) {
  std::size_t total = 0;
  Element prev = 0;
  bool first = true;
  for (const auto& b : blocks_) {
    total += b.size();
    for (Element e : b) {
      if (!first && e <= prev)
        throw std::invalid_argument("division elements must be strictly increasing within and across blocks");
      prev = e;
      first = false;
    }
  }
  if (total != blocks_.size())
    throw std::invalid_argument("division must have as many blocks as elements");
}

Composition Division::shape() const {
  if (empty()) throw std::invalid_argument("empty division has no shape");
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return Composition(std::move(sizes));
}

std::vector<Element> Division::ground_set() const {
  std::vector<Element> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;  // already sorted by the cross-block invariant
}

bool Division::contains(Element s) const { return block_of(s) >= 0; }

int Division::block_of(Element s) const {
  for (int i = 0; i < block_count(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), s)) return i;
  return -1;
}

Division make_division(const Composition& c) {
  std::vector<std::vector<Element>> blocks(c.size());
  Element next = 1;
  for (int i = 0; i < c.size(); ++i) {
    blocks[i].resize(c[i]);
    std::iota(blocks[i].begin(), blocks[i].end(), next);
    next += c[i];
  }
  return Division(std::move(blocks));
}

std::vector<Element> admissible_elements_A(const Division& d) {
  std::vector<Element> out;
  const int m = d.block_count();
  if (m == 0) return out;
  if (!d.block(0).empty()) out.push_back(d.block(0).front());
  for (int i = 1; i + 1 < m; ++i)
    out.insert(out.end(), d.block(i).begin(), d.block(i).end());
  if (m > 1 && !d.block(m - 1).empty()) out.push_back(d.block(m - 1).back());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> admissible_elements_B(const Division& d) {
  std::vector<Element> out;
  const int m = d.block_count();
  if (m == 0) return out;
  if (!d.block(0).empty()) out.push_back(d.block(0).front());
  for (int i = 1; i < m; ++i)
    out.insert(out.end(), d.block(i).begin(), d.block(i).end());
  return out;  // sorted already: block order follows element order
}

namespace {

// Merge two blocks whose elements are separated by the cross-block order.
std::vector<Element> merged(const std::vector<Element>& lo, const std::vector<Element>& hi) {
  std::vector<Element> out;
  out.reserve(lo.size() + hi.size());
  out.insert(out.end(), lo.begin(), lo.end());
  out.insert(out.end(), hi.begin(), hi.end());
  return out;
}

Division delete_common(const Division& d, Element s, bool type_b) {
  const int m = d.block_count();
  const int i = d.block_of(s);
  if (i < 0) throw std::invalid_argument("element not in division");

  const auto& bi = d.block(i);
  const bool is_min = bi.front() == s;
  const bool is_max = bi.back() == s;
  bool ok;
  if (type_b)
    ok = (i != 0) || is_min;
  else
    ok = (i == 0 && is_min) || (i == m - 1 && is_max) || (i != 0 && i != m - 1);
  if (!ok) throw std::invalid_argument("element not admissible");

  std::vector<Element> below(bi.begin(), std::lower_bound(bi.begin(), bi.end(), s));
  std::vector<Element> above(std::upper_bound(bi.begin(), bi.end(), s), bi.end());

  std::vector<std::vector<Element>> out;
  out.reserve(m - 1);
  if (i == m - 1) {
    // Last block: everything left of s has nowhere to go but the
    // penultimate block. Type A guarantees `above` is empty; type B
    // merges it leftwards too.
    for (int j = 0; j + 2 < m; ++j) out.push_back(d.block(j));
    if (m >= 2) out.push_back(merged(d.block(m - 2), merged(below, above)));
  } else if (i == 0) {
    out.push_back(merged(above, d.block(1)));
    for (int j = 2; j < m; ++j) out.push_back(d.block(j));
  } else {
    for (int j = 0; j + 1 < i; ++j) out.push_back(d.block(j));
    out.push_back(merged(d.block(i - 1), below));
    out.push_back(merged(above, d.block(i + 1)));
    for (int j = i + 2; j < m; ++j) out.push_back(d.block(j));
  }
  return Division(std::move(out));
}

}  // namespace

Division delete_A(const Division& d, Element s) { return delete_common(d, s, false); }

Division delete_B(const Division& d, Element s) { return delete_common(d, s, true); }

}  // namespace meul
