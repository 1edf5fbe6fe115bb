#include "meul/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "meul/counting.hpp"
#include "meul/division.hpp"
#include "meul/permutations.hpp"
#include "meul/star.hpp"
#include "meul/textio.hpp"
#include "meul/volume.hpp"

namespace meul {

const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::fail: return "fail";
    case VerifyStatus::info: return "info";
  }
  return "?";
}

bool all_passed(std::span<const VerificationReport> reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const auto& r) { return r.status == VerifyStatus::fail; });
}

nlohmann::json reports_to_json(std::span<const VerificationReport> reports, bool with_millis) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j{{"identity", r.identity}, {"params", r.params}, {"status", to_string(r.status)}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    if (with_millis) j["millis"] = r.millis;
    out.push_back(std::move(j));
  }
  return out;
}

namespace {

struct Sweep {
  bool ok = true;
  std::string witness;
  void fail(std::string w) {
    if (ok) {
      ok = false;
      witness = std::move(w);
    }
  }
};

VerificationReport run_entry(std::string identity, std::string params,
                             const std::function<void(Sweep&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Sweep s;
  body(s);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  return {std::move(identity), std::move(params),
          s.ok ? VerifyStatus::pass : VerifyStatus::fail, s.witness, "", ms};
}

std::string range_params(int lo, int n) {
  return "n=" + std::to_string(lo) + ".." + std::to_string(n);
}

BigInt ipow(BigInt base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// prod_i i^{c_i}, the superdiagonal equality value.
BigInt staircase_product(const Composition& c) {
  BigInt r = 1;
  for (int i = 0; i < c.size(); ++i) r *= ipow(i + 1, c[i]);
  return r;
}

// Exhaustive descent statistics; these scans are the reference side of the
// Eulerian specializations, independent of any recurrence.
std::vector<BigInt> descent_histogram(int n) {
  std::vector<BigInt> hist(n, 0);
  std::vector<Element> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    ++hist[descent_count(w)];
  } while (std::next_permutation(w.begin(), w.end()));
  return hist;
}

// hist[first-1][d] counts w in S_n with w_1 = first and d descents.
std::vector<std::vector<BigInt>> first_letter_descent_histogram(int n) {
  std::vector<std::vector<BigInt>> hist(n, std::vector<BigInt>(n, 0));
  std::vector<Element> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    ++hist[w[0] - 1][descent_count(w)];
  } while (std::next_permutation(w.begin(), w.end()));
  return hist;
}

std::map<std::vector<int>, BigInt> mixed_eulerian_table(int m, bool type_b, MemoTable& memo) {
  std::map<std::vector<int>, BigInt> table;
  for (const auto& c : all_compositions(m))
    table[c.parts()] = type_b ? mixed_eulerian_B(c, memo) : mixed_eulerian_A(c, memo);
  return table;
}

// Composition of length n with the given (position, amount) bumps.
Composition sparse_composition(int n, std::initializer_list<std::pair<int, int>> bumps) {
  std::vector<int> parts(n, 0);
  for (auto [pos, amount] : bumps) parts[pos] += amount;
  return Composition(std::move(parts));
}

// Division with the same shape as the canonical one but on labels 2,4,...;
// leaves odd values free for strictly-in-between pivots.
Division doubled_division(const Composition& c) {
  std::vector<std::vector<Element>> blocks(c.size());
  Element next = 2;
  for (int i = 0; i < c.size(); ++i)
    for (int j = 0; j < c[i]; ++j) {
      blocks[i].push_back(next);
      next += 2;
    }
  return Division(std::move(blocks));
}

// 0-based positions of the distinguished-set descents of prefix,seq...
std::vector<int> c1_descent_positions(Element prefix, const Permutation& seq,
                                      const std::set<Element>& c1) {
  std::vector<Element> v;
  v.push_back(prefix);
  v.insert(v.end(), seq.begin(), seq.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (c1.count(v[i])) {
      out.push_back(static_cast<int>(i));
      continue;
    }
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (c1.count(v[j])) continue;
      if (v[i] > v[j]) out.push_back(static_cast<int>(i));
      break;
    }
  }
  return out;
}

// Shared by the inequality cross-check and the injection suite: realized
// index functions are pairwise distinct and exhaust the candidate set
// exactly on superdiagonal shapes.
void injection_sweep(int m, Sweep& inj, Sweep& surj) {
  MemoTable memo;
  for (const auto& c : all_compositions(m)) {
    Division d = make_division(c);
    auto perms = enumerate_A(d);
    std::vector<IndexFunction> realized;
    realized.reserve(perms.size());
    for (const auto& w : perms) realized.push_back(index_function(d, w));
    std::set<IndexFunction> realized_set(realized.begin(), realized.end());
    if (realized_set.size() != realized.size())
      inj.fail("c=" + format_composition(c) + ": repeated index function");

    auto all = enumerate_index_functions(d);
    std::set<IndexFunction> all_set(all.begin(), all.end());
    for (const auto& f : realized_set)
      if (!all_set.count(f)) {
        inj.fail("c=" + format_composition(c) + ": realized function out of range");
        break;
      }
    bool onto = realized_set.size() == all_set.size();
    if (onto != is_superdiagonal(c))
      surj.fail("c=" + format_composition(c) + ": onto=" + (onto ? "true" : "false") +
                ", superdiagonal=" + (is_superdiagonal(c) ? "true" : "false"));
  }
}

}  // namespace

std::vector<VerificationReport> verify_theorem_4_1(int n) {
  std::vector<VerificationReport> out;
  MemoTable memo;
  std::vector<std::map<std::vector<int>, BigInt>> tables(n + 1);
  for (int m = 1; m <= n; ++m) tables[m] = mixed_eulerian_table(m, false, memo);

  out.push_back(run_entry("4.1(a) positivity", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      for (const auto& [c, a] : tables[m])
        if (a < 1) s.fail("c=" + format_composition(Composition(c)));
  }));

  out.push_back(run_entry("4.1(b) reversal", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      for (const auto& [c, a] : tables[m]) {
        std::vector<int> rev(c.rbegin(), c.rend());
        if (a != tables[m].at(rev)) s.fail("c=" + format_composition(Composition(c)));
      }
  }));

  out.push_back(run_entry("4.1(c) eulerian specialization", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m) {
      auto hist = descent_histogram(m);
      for (int k = 1; k <= m; ++k) {
        auto c = sparse_composition(m, {{k - 1, m}});
        if (tables[m].at(c.parts()) != hist[k - 1])
          s.fail("n=" + std::to_string(m) + ", k=" + std::to_string(k));
      }
    }
  }));

  out.push_back(run_entry("4.1(d) weighted sum", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m) {
      Rational target = Rational(ipow(m + 1, m - 1));
      Rational total = 0;
      for (const auto& [c, a] : tables[m]) {
        Rational term(a);
        for (int p : c) term /= Rational(factorial(p));
        total += term;
      }
      if (total != target) s.fail("recursion sum at n=" + std::to_string(m));
      std::vector<Rational> ones(m, Rational(1));
      if (volume_poly_A(m).evaluate(ones) != target)
        s.fail("volume evaluation at n=" + std::to_string(m));
    }
  }));

  out.push_back(run_entry("4.1(e) unweighted sum", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m) {
      BigInt total = 0;
      for (const auto& [c, a] : tables[m]) total += a;
      if (total != factorial(m) * catalan(m)) s.fail("n=" + std::to_string(m));
    }
  }));

  out.push_back(run_entry("4.1(f) refined eulerian specialization", range_params(1, n),
                          [&](Sweep& s) {
    for (int m = 2; m <= n; ++m)
      for (int k = 2; k <= m; ++k)
        for (int r = 0; r <= m; ++r) {
          auto c = sparse_composition(m, {{k - 2, r}, {k - 1, m - r}});
          if (tables[m].at(c.parts()) != eulerian_r(m, k, r))
            s.fail("n=" + std::to_string(m) + ", k=" + std::to_string(k) +
                   ", r=" + std::to_string(r));
        }
  }));

  out.push_back(run_entry("4.1(g) all-ones", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m) {
      auto c = Composition(std::vector<int>(m, 1));
      if (tables[m].at(c.parts()) != factorial(m)) s.fail("n=" + std::to_string(m));
    }
  }));

  out.push_back(run_entry("4.1(h) two-block binomial", range_params(1, n), [&](Sweep& s) {
    for (int m = 2; m <= n; ++m)
      for (int k = 0; k <= m; ++k) {
        auto c = sparse_composition(m, {{0, k}, {m - 1, m - k}});
        if (tables[m].at(c.parts()) != binomial(m, k))
          s.fail("n=" + std::to_string(m) + ", k=" + std::to_string(k));
      }
  }));

  out.push_back(run_entry("4.1(i) superdiagonal product", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      for (const auto& [c, a] : tables[m]) {
        Composition comp(c);
        if (is_superdiagonal(comp) && a != staircase_product(comp))
          s.fail("c=" + format_composition(comp));
      }
  }));

  return out;
}

std::vector<VerificationReport> verify_cycle_theorem(int n) {
  std::vector<VerificationReport> out;
  MemoTable memo;

  // Classes: extend by a trailing zero and orbit under cyclic shifts.
  auto classes_of = [](int m) {
    std::map<std::vector<int>, std::set<std::vector<int>>> classes;
    for (const auto& c : all_compositions(m)) {
      std::vector<int> ext = c.parts();
      ext.push_back(0);
      std::vector<int> canon = ext;
      std::vector<int> rot = ext;
      for (int j = 0; j < m; ++j) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        canon = std::min(canon, rot);
      }
      classes[canon].insert(c.parts());
    }
    return classes;
  };

  out.push_back(run_entry("cycle class count", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      if (BigInt(classes_of(m).size()) != catalan(m)) s.fail("n=" + std::to_string(m));
  }));

  out.push_back(run_entry("cycle class sums", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      for (const auto& [canon, members] : classes_of(m)) {
        BigInt total = 0;
        for (const auto& c : members) total += mixed_eulerian_A(Composition(c), memo);
        if (total != factorial(m))
          s.fail("n=" + std::to_string(m) +
                 ", class of c=" + format_composition(Composition(*members.begin())));
      }
  }));

  const int fiber_n = std::min(n, 6);
  out.push_back(run_entry("cycle fibers", range_params(1, fiber_n), [&](Sweep& s) {
    for (int m = 1; m <= fiber_n; ++m)
      for (const auto& c : all_compositions(m)) {
        std::vector<BigInt> fibers(m + 2, 0);
        std::vector<Element> w(m);
        std::iota(w.begin(), w.end(), 1);
        do {
          ++fibers[circular_final_block(c, w)];
        } while (std::next_permutation(w.begin(), w.end()));

        std::vector<int> ext = c.parts();
        ext.push_back(0);
        for (int r = 1; r <= m + 1; ++r) {
          BigInt expect = 0;
          if (ext[r - 1] == 0) {
            std::vector<int> shifted(m);
            for (int j = 0; j < m; ++j) shifted[j] = ext[(r + j) % (m + 1)];
            expect = mixed_eulerian_A(Composition(shifted), memo);
          }
          if (fibers[r] != expect) {
            s.fail("c=" + format_composition(c) + ", r=" + std::to_string(r));
            break;
          }
        }
      }
  }));

  return out;
}

std::vector<VerificationReport> verify_inequality(int n) {
  std::vector<VerificationReport> out;
  MemoTable memo;

  out.push_back(run_entry("inequality bound", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      for (const auto& c : all_compositions(m)) {
        BigInt a = mixed_eulerian_A(c, memo);
        BigInt cap = staircase_product(c);
        if (a > cap)
          s.fail("c=" + format_composition(c) + ": " + a.str() + " > " + cap.str());
        else if ((a == cap) != is_superdiagonal(c))
          s.fail("c=" + format_composition(c) + ": equality mismatch");
      }
  }));

  const int cross_n = std::min(n, 6);
  out.push_back(run_entry("inequality index-function cross-check", range_params(1, cross_n),
                          [&](Sweep& s) {
    Sweep surj;
    for (int m = 1; m <= cross_n; ++m) injection_sweep(m, s, surj);
    if (!surj.ok) s.fail(surj.witness);
  }));

  return out;
}

std::vector<VerificationReport> verify_hybrid(int n) {
  std::vector<VerificationReport> out;
  MemoTable memo;

  auto prefix_ok = [](const Composition& c, int r) {
    int sum = 0;
    for (int i = 0; i < r; ++i) {
      sum += c[i];
      if (sum < i + 1) return false;
    }
    return true;
  };
  auto suffix_ok = [](const Composition& c, int r) {
    int sum = 0;
    const int m = c.size();
    for (int i = 0; i < m - r; ++i) {
      sum += c[m - 1 - i];
      if (sum < i + 1) return false;
    }
    return true;
  };

  out.push_back(run_entry("hybrid split formula", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      for (const auto& c : all_compositions(m)) {
        BigInt a = mixed_eulerian_A(c, memo);
        for (int r = 0; r <= m; ++r) {
          if (!prefix_ok(c, r) || !suffix_ok(c, r)) continue;
          int head = 0;
          for (int i = 0; i < r; ++i) head += c[i];
          BigInt rhs = binomial(m, head);
          for (int i = 0; i < r; ++i) rhs *= ipow(i + 1, c[i]);
          for (int j = r; j < m; ++j) rhs *= ipow(m - j, c[j]);
          if (a != rhs) s.fail("c=" + format_composition(c) + ", r=" + std::to_string(r));
        }
      }
  }));

  out.push_back(run_entry("hybrid prefix balance", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      for (const auto& c : all_compositions(m))
        for (int r = 0; r <= m; ++r) {
          if (!prefix_ok(c, r) || !suffix_ok(c, r)) continue;
          int head = 0;
          for (int i = 0; i < r; ++i) head += c[i];
          if (head != r) s.fail("c=" + format_composition(c) + ", r=" + std::to_string(r));
        }
  }));

  return out;
}

std::vector<VerificationReport> verify_partial_eulerian(int n) {
  std::vector<VerificationReport> out;
  MemoTable memo;

  out.push_back(run_entry("partial-eulerian identity", range_params(3, n), [&](Sweep& s) {
    for (int m2 = 3; m2 <= n; ++m2)  // ground-set size
      for (int k = 3; k <= m2; ++k)
        for (int m = 0; m <= m2; ++m)
          for (int r = 0; r <= m; ++r) {
            auto c = sparse_composition(m2, {{0, m2 - m}, {k - 2, r}, {k - 1, m - r}});
            BigInt lhs = mixed_eulerian_A(c, memo);
            BigInt rhs = 0;
            for (int i = 0; i <= m2 - m; ++i) rhs += binomial(m + i, m) * eulerian_r(m, k - i, r);
            if (lhs != rhs)
              s.fail("n=" + std::to_string(m2) + ", k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + ", r=" + std::to_string(r) + ": " + lhs.str() +
                     " != " + rhs.str());
          }
  }));

  const int small_n = std::min(n, 6);

  out.push_back(run_entry("partial-eulerian characterization", range_params(3, small_n),
                          [&](Sweep& s) {
    for (int m2 = 3; m2 <= small_n; ++m2)
      for (int k = 3; k <= m2; ++k)
        for (int m = 0; m <= m2; ++m)
          for (int r = 0; r <= m; ++r) {
            auto shape = sparse_composition(m2, {{0, m2 - m}, {k - 2, r}, {k - 1, m - r}});
            Division d = doubled_division(shape);
            const Element lambda = 2 * (m2 - m + r) + 1;
            std::set<Element> c1(d.block(0).begin(), d.block(0).end());

            std::set<Permutation> from_deletion;
            for (auto& w : enumerate_A(d)) from_deletion.insert(std::move(w));

            std::set<Permutation> from_filter;
            Permutation w = d.ground_set();
            do {
              bool ascending_c1 = true;
              Element prev = 0;
              for (Element e : w)
                if (c1.count(e)) {
                  if (e < prev) ascending_c1 = false;
                  prev = e;
                }
              if (!ascending_c1) continue;
              auto desc = c1_descent_positions(lambda, w, c1);
              if (static_cast<int>(desc.size()) < k - 1) continue;
              // desc positions index lambda,w_1,...,w_n; position p means
              // the descent term is w_p, so the tail starts at w[p] (0-based).
              int cut = desc[k - 2];
              bool tail_increasing = true;
              for (int p = cut; p + 1 < static_cast<int>(w.size()); ++p)
                if (w[p] > w[p + 1]) tail_increasing = false;
              if (!tail_increasing) continue;
              from_filter.insert(w);
            } while (std::next_permutation(w.begin(), w.end()));

            if (from_deletion != from_filter)
              s.fail("n=" + std::to_string(m2) + ", k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + ", r=" + std::to_string(r));
          }
  }));

  out.push_back(run_entry("star bijection", range_params(3, small_n), [&](Sweep& s) {
    for (int m2 = 3; m2 <= small_n; ++m2)
      for (int k = 3; k <= m2; ++k)
        for (int m = 0; m <= m2; ++m)
          for (int r = 0; r <= m; ++r) {
            auto shape = sparse_composition(m2, {{0, m2 - m}, {k - 2, r}, {k - 1, m - r}});
            Division d = doubled_division(shape);
            const Element lambda = 2 * (m2 - m + r) + 1;

            std::set<Permutation> perms;
            for (auto& w : enumerate_A(d)) perms.insert(std::move(w));

            // Every valid star-permutation: middles in any order, at most
            // n-m stars interleaved, exactly k-1 star-descents.
            std::vector<StarPermutation> valid;
            std::vector<Element> middles;
            middles.insert(middles.end(), d.block(k - 2).begin(), d.block(k - 2).end());
            middles.insert(middles.end(), d.block(k - 1).begin(), d.block(k - 1).end());
            std::sort(middles.begin(), middles.end());
            std::vector<Element> perm = middles;
            do {
              for (int g = 0; g <= m2 - m; ++g) {
                std::vector<char> star_at(perm.size() + g, 0);
                std::fill(star_at.begin(), star_at.begin() + g, 1);
                std::sort(star_at.begin(), star_at.end());
                do {
                  StarPermutation sp;
                  sp.entries.push_back(lambda);
                  std::size_t next = 0;
                  for (char is_star : star_at)
                    sp.entries.push_back(is_star ? std::optional<Element>()
                                                 : std::optional<Element>(perm[next++]));
                  if (static_cast<int>(star_descents(sp).size()) == k - 1)
                    valid.push_back(std::move(sp));
                } while (std::next_permutation(star_at.begin(), star_at.end()));
              }
            } while (std::next_permutation(perm.begin(), perm.end()));

            if (valid.size() != perms.size()) {
              s.fail("n=" + std::to_string(m2) + ", k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + ", r=" + std::to_string(r) +
                     ": counts differ");
              continue;
            }
            std::set<Permutation> image;
            bool bad = false;
            for (const auto& sp : valid) {
              Permutation w = star_to_c_permutation(sp, d, k, lambda);
              if (!perms.count(w) || !(c_permutation_to_star(w, d, k, lambda) == sp)) {
                bad = true;
                break;
              }
              image.insert(std::move(w));
            }
            if (bad || image != perms)
              s.fail("n=" + std::to_string(m2) + ", k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + ", r=" + std::to_string(r) +
                     ": round trip failed");
          }
  }));

  return out;
}

std::vector<VerificationReport> verify_msuz(int n) {
  std::vector<VerificationReport> out;
  MemoTable memo;

  out.push_back(run_entry("msuz closed form", range_params(2, n), [&](Sweep& s) {
    for (int m2 = 2; m2 <= n; ++m2)
      for (int k = 2; k <= m2; ++k)
        for (int m = 1; m <= m2; ++m) {
          auto c = sparse_composition(m2, {{0, m2 - m}, {k - 1, m}});
          BigInt lhs = mixed_eulerian_A(c, memo);
          BigInt rhs = 0;
          if (m2 - m >= k - 1) {
            rhs = ipow(k, m);
          } else {
            for (int i = 0; i <= m2 - k; ++i) {
              if (m - i - 1 < 1) continue;  // eulerian factor vanishes there
              rhs += BigInt(m2 - k + 1 - i) * binomial(m2 - i, m2 - m) * ipow(k, i) *
                     eulerian(m - i - 1, m - m2 + k - 1);
            }
          }
          if (lhs != rhs)
            s.fail("n=" + std::to_string(m2) + ", k=" + std::to_string(k) +
                   ", m=" + std::to_string(m) + ": " + lhs.str() + " != " + rhs.str());
        }
  }));

  return out;
}

std::vector<VerificationReport> verify_theorem_5_2(int n) {
  std::vector<VerificationReport> out;
  MemoTable memo_a, memo_b;
  std::vector<std::map<std::vector<int>, BigInt>> a_tables(n + 1), b_tables(n + 1);
  for (int m = 1; m <= n; ++m) {
    a_tables[m] = mixed_eulerian_table(m, false, memo_a);
    b_tables[m] = mixed_eulerian_table(m, true, memo_b);
  }

  out.push_back(run_entry("5.2(a) sandwich", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m) {
      BigInt scale = ipow(2, m);
      for (const auto& [c, b] : b_tables[m]) {
        Composition comp(c);
        BigInt lo = scale * a_tables[m].at(c);
        BigInt hi = scale * staircase_product(comp);
        bool super = is_superdiagonal(comp);
        if (lo > b || b > hi)
          s.fail("c=" + format_composition(comp) + ": bounds violated");
        else if ((lo == b) != super || (b == hi) != super)
          s.fail("c=" + format_composition(comp) + ": equality mismatch");
      }
    }
  }));

  out.push_back(run_entry("5.2(b) descent bound specialization", range_params(1, n),
                          [&](Sweep& s) {
    for (int m = 1; m <= n; ++m) {
      auto hist = descent_histogram(m);
      BigInt scale = ipow(2, m);
      BigInt cumulative = 0;
      for (int k = 1; k <= m; ++k) {
        cumulative += hist[k - 1];  // now counts descents <= k-1
        auto c = sparse_composition(m, {{k - 1, m}});
        if (b_tables[m].at(c.parts()) != scale * cumulative)
          s.fail("n=" + std::to_string(m) + ", k=" + std::to_string(k));
      }
    }
  }));

  out.push_back(run_entry("5.2(c) refined descent bound", range_params(1, n), [&](Sweep& s) {
    for (int m = 2; m <= n; ++m) {
      auto hist = first_letter_descent_histogram(m + 1);
      BigInt scale = ipow(2, m);
      for (int k = 1; k <= m - 1; ++k)
        for (int r = 0; r <= m; ++r) {
          BigInt count = 0;
          for (int d = 0; d <= k && d <= m; ++d) count += hist[r][d];
          auto c = sparse_composition(m, {{k - 1, r}, {k, m - r}});
          if (b_tables[m].at(c.parts()) != scale * count)
            s.fail("n=" + std::to_string(m) + ", k=" + std::to_string(k) +
                   ", r=" + std::to_string(r));
        }
    }
  }));

  out.push_back(run_entry("5.2(d) all-ones", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m) {
      auto c = Composition(std::vector<int>(m, 1));
      if (b_tables[m].at(c.parts()) != ipow(2, m) * factorial(m))
        s.fail("n=" + std::to_string(m));
    }
  }));

  {
    // The two-block formula is checked in both variants. The computed
    // values settle which one holds; the plain variant is reported as an
    // observation, not a gating check.
    Sweep corrected, printed;
    auto t0 = std::chrono::steady_clock::now();
    for (int m = 2; m <= n; ++m)
      for (int k = 0; k <= m; ++k) {
        auto c = sparse_composition(m, {{0, k}, {m - 1, m - k}});
        const BigInt& b = b_tables[m].at(c.parts());
        BigInt plain = binomial(m, k) * factorial(m - k);
        if (b != ipow(2, m) * plain)
          corrected.fail("n=" + std::to_string(m) + ", k=" + std::to_string(k));
        if (b != plain)
          printed.fail("n=" + std::to_string(m) + ", k=" + std::to_string(k) + ": formula " +
                       plain.str() + ", computed " + b.str());
      }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    out.push_back({"5.2(e) two-block, 2^n-corrected", range_params(2, n),
                   corrected.ok ? VerifyStatus::pass : VerifyStatus::fail, corrected.witness,
                   "", ms});
    out.push_back({"5.2(e) two-block as printed", range_params(2, n), VerifyStatus::info,
                   printed.witness,
                   printed.ok
                       ? "plain variant agrees with the recursion"
                       : "plain variant disagrees with the recursion; the 2^n-corrected variant "
                         "is the one the computed values support",
                   0});
  }

  out.push_back(run_entry("5.2(f) superdiagonal product", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      for (const auto& [c, b] : b_tables[m]) {
        Composition comp(c);
        if (is_superdiagonal(comp) && b != ipow(2, m) * staircase_product(comp))
          s.fail("c=" + format_composition(comp));
      }
  }));

  out.push_back(run_entry("5.2(g) subdiagonal factorial", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      for (const auto& [c, b] : b_tables[m]) {
        Composition comp(c);
        if (is_subdiagonal(comp) && b != ipow(2, m) * factorial(m))
          s.fail("c=" + format_composition(comp));
      }
  }));

  out.push_back(run_entry("5.2(h) split formula", range_params(1, n), [&](Sweep& s) {
    for (int m = 1; m <= n; ++m)
      for (const auto& [cv, b] : b_tables[m]) {
        Composition c(cv);
        for (int r = 0; r <= m; ++r) {
          int sum = 0;
          bool pre = true;
          for (int i = 0; i < r; ++i) {
            sum += c[i];
            if (sum < i + 1) pre = false;
          }
          int sufsum = 0;
          bool suf = true;
          for (int i = 0; i < m - r; ++i) {
            sufsum += c[m - 1 - i];
            if (sufsum < i + 1) suf = false;
          }
          if (!pre || !suf) continue;
          int head = 0, tail = 0;
          for (int i = 0; i < r; ++i) head += c[i];
          for (int j = r; j < m; ++j) tail += c[j];
          BigInt rhs = ipow(2, m) * binomial(m, head) * factorial(tail);
          for (int i = 0; i < r; ++i) rhs *= ipow(i + 1, c[i]);
          if (b != rhs) s.fail("c=" + format_composition(c) + ", r=" + std::to_string(r));
        }
      }
  }));

  return out;
}

std::vector<VerificationReport> verify_injection(int n) {
  std::vector<VerificationReport> out;
  Sweep inj, surj;
  auto t0 = std::chrono::steady_clock::now();
  for (int m = 1; m <= n; ++m) injection_sweep(m, inj, surj);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  t0)
                .count();
  out.push_back({"index-function injectivity", range_params(1, n),
                 inj.ok ? VerifyStatus::pass : VerifyStatus::fail, inj.witness, "", ms});
  out.push_back({"index-function surjectivity iff superdiagonal", range_params(1, n),
                 surj.ok ? VerifyStatus::pass : VerifyStatus::fail, surj.witness, "", ms});
  return out;
}

}  // namespace meul
