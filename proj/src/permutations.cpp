#include "meul/permutations.hpp"

#include <algorithm>
#include <stdexcept>

namespace meul {

namespace detail {

namespace {

bool walk_rec(const Division& d, bool type_b, Permutation& prefix,
              const std::function<bool(const Permutation&)>& visit) {
  if (d.empty()) return visit(prefix);
  auto choices = type_b ? admissible_elements_B(d) : admissible_elements_A(d);
  for (Element s : choices) {
    Division next = type_b ? delete_B(d, s) : delete_A(d, s);
    prefix.push_back(s);
    bool keep_going = walk_rec(next, type_b, prefix, visit);
    prefix.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

bool walk_c_permutations(const Division& d, bool type_b,
                         const std::function<bool(const Permutation&)>& visit) {
  Permutation prefix;
  prefix.reserve(d.block_count());
  return walk_rec(d, type_b, prefix, visit);
}

}  // namespace detail

namespace {

std::vector<Permutation> enumerate_impl(const Division& d, bool type_b, std::size_t cap) {
  std::vector<Permutation> out;
  bool completed = detail::walk_c_permutations(d, type_b, [&](const Permutation& w) {
    if (out.size() >= cap) return false;
    out.push_back(w);
    return true;
  });
  if (!completed)
    throw resource_limit_error("enumeration would exceed cap of " + std::to_string(cap) +
                               " permutations");
  return out;
}

BigInt count_impl(const Division& d, bool type_b) {
  BigInt n = 0;
  detail::walk_c_permutations(d, type_b, [&](const Permutation&) {
    ++n;
    return true;
  });
  return n;
}

bool check_impl(const Division& d, const Permutation& w, bool type_b) {
  auto ground = d.ground_set();
  Permutation sorted = w;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ground) throw std::invalid_argument("not a permutation of the ground set");
  Division cur = d;
  for (Element s : w) {
    auto adm = type_b ? admissible_elements_B(cur) : admissible_elements_A(cur);
    if (!std::binary_search(adm.begin(), adm.end(), s)) return false;
    cur = type_b ? delete_B(cur, s) : delete_A(cur, s);
  }
  return true;
}

}  // namespace

std::vector<Permutation> enumerate_A(const Division& d, std::size_t cap) {
  return enumerate_impl(d, false, cap);
}

std::vector<Permutation> enumerate_B(const Division& d, std::size_t cap) {
  return enumerate_impl(d, true, cap);
}

BigInt count_permutations_A(const Division& d) { return count_impl(d, false); }

BigInt count_permutations_B(const Division& d) { return count_impl(d, true); }

bool is_c_permutation_A(const Division& d, const Permutation& w) { return check_impl(d, w, false); }

bool is_c_permutation_B(const Division& d, const Permutation& w) { return check_impl(d, w, true); }

IndexFunction index_function(const Division& d, const Permutation& w) {
  IndexFunction idx;
  Division cur = d;
  for (Element s : w) {
    int block = cur.block_of(s);
    if (block < 0) throw std::invalid_argument("not a permutation of the ground set");
    idx[s] = block + 1;
    cur = delete_A(cur, s);  // throws if the step is not admissible
  }
  return idx;
}

std::vector<IndexFunction> enumerate_index_functions(const Division& d) {
  // Elements ascending, each with its block's 1-based index as value range.
  std::vector<Element> elems;
  std::vector<int> range;
  for (int i = 0; i < d.block_count(); ++i)
    for (Element s : d.block(i)) {
      elems.push_back(s);
      range.push_back(i + 1);
    }

  std::vector<IndexFunction> out;
  std::vector<int> value(elems.size(), 1);
  while (true) {
    IndexFunction f;
    for (std::size_t j = 0; j < elems.size(); ++j) f[elems[j]] = value[j];
    out.push_back(std::move(f));
    // Odometer: last element varies fastest.
    std::size_t j = elems.size();
    while (j > 0) {
      --j;
      if (value[j] < range[j]) {
        ++value[j];
        std::fill(value.begin() + j + 1, value.end(), 1);
        break;
      }
      if (j == 0) return out;
    }
    if (elems.empty()) return out;
  }
}

int descent_count(std::span<const Element> seq) {
  int n = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i] > seq[i + 1]) ++n;
  return n;
}

int descent_count_with_prefix(Element prefix, std::span<const Element> seq) {
  int n = descent_count(seq);
  if (!seq.empty() && prefix > seq.front()) ++n;
  return n;
}

int circular_final_block(const Composition& c, const Permutation& w) {
  const int n = c.size();
  {
    Permutation sorted = w;
    std::sort(sorted.begin(), sorted.end());
    Permutation expect(n);
    for (int i = 0; i < n; ++i) expect[i] = i + 1;
    if (sorted != expect)
      throw std::invalid_argument("circular process needs a permutation of 1..n");
  }

  // Blocks in cyclic order as (original 1-based id, elements). Element
  // order around the circle never changes; deletions only move boundaries.
  std::vector<std::pair<int, std::vector<Element>>> ring;
  Element next = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<Element> b(c[i]);
    for (int j = 0; j < c[i]; ++j) b[j] = next++;
    ring.emplace_back(i + 1, std::move(b));
  }
  ring.emplace_back(n + 1, std::vector<Element>{});

  for (Element s : w) {
    std::size_t i = 0;
    std::size_t pos = 0;
    bool found = false;
    for (i = 0; i < ring.size() && !found; ++i) {
      const auto& b = ring[i].second;
      for (pos = 0; pos < b.size(); ++pos)
        if (b[pos] == s) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) throw std::logic_error("element vanished from the ring");

    const std::size_t m = ring.size();
    const std::size_t left = (i + m - 1) % m;
    const std::size_t right = (i + 1) % m;
    auto& blk = ring[i].second;
    std::vector<Element> below(blk.begin(), blk.begin() + pos);
    std::vector<Element> above(blk.begin() + pos + 1, blk.end());
    // Left part keeps its order at the clockwise end of the left block;
    // right part goes to the counterclockwise end of the right block.
    auto& lb = ring[left].second;
    lb.insert(lb.end(), below.begin(), below.end());
    auto& rb = ring[right].second;
    rb.insert(rb.begin(), above.begin(), above.end());
    ring.erase(ring.begin() + i);
  }

  if (ring.size() != 1 || !ring[0].second.empty())
    throw std::logic_error("circular deletion did not end with one empty block");
  return ring[0].first;
}

}  // namespace meul
