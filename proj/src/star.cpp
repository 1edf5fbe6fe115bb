#include "meul/star.hpp"

#include <algorithm>
#include <stdexcept>

namespace meul {

std::vector<int> star_descents(const StarPermutation& sp) {
  const auto& s = sp.entries;
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].has_value()) {
      out.push_back(static_cast<int>(i) + 1);
      continue;
    }
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!s[j].has_value()) continue;
      if (*s[i] > *s[j]) out.push_back(static_cast<int>(i) + 1);
      break;
    }
  }
  return out;
}

int c1_descent_count(Element prefix, std::span<const Element> seq, const std::set<Element>& c1) {
  std::vector<Element> v;
  v.reserve(seq.size() + 1);
  v.push_back(prefix);
  v.insert(v.end(), seq.begin(), seq.end());
  int count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (c1.count(v[i])) {
      ++count;
      continue;
    }
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (c1.count(v[j])) continue;
      if (v[i] > v[j]) ++count;
      break;
    }
  }
  return count;
}

namespace {

// The division must consist of a first block plus blocks k-1 and k, all
// others empty, with lambda strictly between the last two.
void check_shape(const Division& d, int k, Element lambda) {
  const int n = d.block_count();
  if (k < 3 || k > n) throw std::invalid_argument("need 3 <= k <= n");
  for (int i = 1; i < n; ++i)
    if (i != k - 2 && i != k - 1 && !d.block(i).empty())
      throw std::invalid_argument("blocks other than 1, k-1, k must be empty");
  if (d.contains(lambda)) throw std::invalid_argument("lambda must lie outside the ground set");
  if (!d.block(k - 2).empty() && lambda < d.block(k - 2).back())
    throw std::invalid_argument("lambda must exceed block k-1");
  if (!d.block(k - 1).empty() && lambda > d.block(k - 1).front())
    throw std::invalid_argument("lambda must precede block k");
}

}  // namespace

Permutation star_to_c_permutation(const StarPermutation& sp, const Division& d, int k,
                                  Element lambda) {
  check_shape(d, k, lambda);
  const auto& c1 = d.block(0);
  const auto& s = sp.entries;
  if (s.empty() || s.front() != std::optional<Element>(lambda))
    throw std::invalid_argument("star-permutation must start with lambda");

  std::size_t stars = 0;
  std::vector<Element> seen;
  for (const auto& e : s)
    if (e.has_value())
      seen.push_back(*e);
    else
      ++stars;
  if (stars > c1.size()) throw std::invalid_argument("too many stars");
  {
    std::vector<Element> expect = d.block(k - 2);
    expect.push_back(lambda);
    expect.insert(expect.end(), d.block(k - 1).begin(), d.block(k - 1).end());
    std::vector<Element> got = seen;
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    if (got != expect)
      throw std::invalid_argument("entries must cover block k-1, lambda, block k exactly once");
  }

  auto desc = star_descents(sp);
  if (static_cast<int>(desc.size()) != k - 1)
    throw std::invalid_argument("star-permutation must have exactly k-1 star-descents");
  const int last = desc[k - 2];  // 1-based position of the (k-1)-th star-descent

  Permutation w;
  std::size_t next_c1 = 0;
  for (int pos = 2; pos <= last; ++pos) {
    const auto& e = s[pos - 1];
    if (e.has_value())
      w.push_back(*e);
    else
      w.push_back(c1[next_c1++]);
  }
  std::vector<Element> rest;
  for (Element e : d.ground_set())
    if (std::find(w.begin(), w.end(), e) == w.end()) rest.push_back(e);
  w.insert(w.end(), rest.begin(), rest.end());
  return w;
}

StarPermutation c_permutation_to_star(const Permutation& w, const Division& d, int k,
                                      Element lambda) {
  check_shape(d, k, lambda);
  const auto& c1 = d.block(0);
  StarPermutation sp;
  sp.entries.push_back(lambda);
  for (Element e : w) {
    if (std::binary_search(c1.begin(), c1.end(), e))
      sp.entries.push_back(std::nullopt);
    else
      sp.entries.push_back(e);
  }

  auto desc = star_descents(sp);
  if (static_cast<int>(desc.size()) < k - 1)
    throw std::invalid_argument("not enough star-descents; w is not a valid deletion order");
  const int last = desc[k - 2];

  StarPermutation out;
  for (std::size_t i = 0; i < sp.entries.size(); ++i)
    if (sp.entries[i].has_value() || static_cast<int>(i) + 1 <= last)
      out.entries.push_back(sp.entries[i]);
  return out;
}

}  // namespace meul
