// Command-line front end: exact mixed Eulerian numbers three ways
// (deletion recursion, explicit enumeration, symbolic volumes), identity
// verification sweeps, and full tables.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 size cap exceeded, 4 disagreement between computation routes.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "meul/counting.hpp"
#include "meul/division.hpp"
#include "meul/numeric.hpp"
#include "meul/permutations.hpp"
#include "meul/textio.hpp"
#include "meul/verify.hpp"
#include "meul/volume.hpp"

namespace {

constexpr int kEnumerationNCap = 8;
constexpr int kRecursionNCap = 12;
constexpr int kInjectionNCap = 6;
constexpr int kVerifyNCap = 7;

meul::BigInt pow2(int n) {
  meul::BigInt r = 1;
  for (int i = 0; i < n; ++i) r *= 2;
  return r;
}

struct ComputeOptions {
  std::string type = "A";
  std::string c_text;
  std::string method = "recursion";
  int max_n = 0;
};

struct EnumerateOptions {
  std::string type = "A";
  std::string c_text;
  std::string division_text;
  std::size_t limit = meul::kDefaultEnumerationCap;
  bool trace = false;
  int max_n = 0;
};

struct VerifyOptions {
  int n = 0;
  std::string suite = "all";
  bool timings = false;
  int max_n = 0;
};

struct TableOptions {
  std::string type = "A";
  int n = 0;
  std::string format = "json";
  int max_n = 0;
};

struct OracleOptions {
  std::string type = "A";
  int n = 0;
  std::string eval_text;
  int max_n = 0;
};

void check_cap(int n, int cap, int max_n, const std::string& what) {
  if (n > std::max(cap, max_n))
    throw meul::resource_limit_error(what + " capped at n = " + std::to_string(cap) +
                                     " (raise with --max-n)");
}

int run_compute(const ComputeOptions& opt) {
  meul::Composition c = meul::parse_composition(opt.c_text);
  const int n = c.size();
  const bool type_b = opt.type == "B";

  auto by_recursion = [&] {
    check_cap(n, kRecursionNCap, opt.max_n, "recursion");
    return type_b ? meul::mixed_eulerian_B(c) : meul::mixed_eulerian_A(c);
  };
  auto by_enumeration = [&] {
    check_cap(n, kEnumerationNCap, opt.max_n, "enumeration");
    meul::Division d = meul::make_division(c);
    return type_b ? pow2(n) * meul::count_permutations_B(d) : meul::count_permutations_A(d);
  };
  auto by_oracle = [&] {
    int cap = std::max(meul::kDefaultOracleCap, opt.max_n);
    meul::MVPoly f = type_b ? meul::volume_poly_B(n, cap) : meul::volume_poly_A(n, cap);
    return meul::extract_mixed_eulerian(f, c);
  };

  if (opt.method == "recursion") {
    std::cout << by_recursion() << "\n";
  } else if (opt.method == "enumeration") {
    std::cout << by_enumeration() << "\n";
  } else if (opt.method == "oracle") {
    std::cout << by_oracle() << "\n";
  } else if (opt.method == "all") {
    meul::BigInt r = by_recursion(), e = by_enumeration(), o = by_oracle();
    bool agree = r == e && e == o;
    std::cout << r << "," << e << "," << o << (agree ? " agree" : " DISAGREE") << "\n";
    if (!agree) return 4;
  } else {
    throw std::invalid_argument("unknown method: " + opt.method);
  }
  return 0;
}

int run_enumerate(const EnumerateOptions& opt) {
  if (opt.c_text.empty() == opt.division_text.empty())
    throw std::invalid_argument("give exactly one of --c and --division");
  meul::Division d = opt.division_text.empty()
                         ? meul::make_division(meul::parse_composition(opt.c_text))
                         : meul::parse_division(opt.division_text);
  check_cap(d.block_count(), kEnumerationNCap, opt.max_n, "enumeration");
  const bool type_b = opt.type == "B";

  auto perms = type_b ? meul::enumerate_B(d, opt.limit) : meul::enumerate_A(d, opt.limit);
  for (const auto& w : perms) {
    std::cout << meul::format_permutation(w) << "\n";
    if (opt.trace) {
      meul::Division cur = d;
      for (meul::Element s : w) {
        std::cout << "  " << meul::format_division(cur) << "\n";
        cur = type_b ? meul::delete_B(cur, s) : meul::delete_A(cur, s);
      }
    }
  }
  return 0;
}

int run_verify(const VerifyOptions& opt) {
  struct Suite {
    std::string name;
    int cap;
    std::vector<meul::VerificationReport> (*run)(int);
  };
  const std::vector<Suite> suites = {
      {"4.1", kVerifyNCap, meul::verify_theorem_4_1},
      {"cycle", kVerifyNCap, meul::verify_cycle_theorem},
      {"ineq", kVerifyNCap, meul::verify_inequality},
      {"hybrid", kVerifyNCap, meul::verify_hybrid},
      {"partial", kVerifyNCap, meul::verify_partial_eulerian},
      {"msuz", kVerifyNCap, meul::verify_msuz},
      {"5.2", kVerifyNCap, meul::verify_theorem_5_2},
      {"injection", kInjectionNCap, meul::verify_injection},
  };

  std::vector<meul::VerificationReport> reports;
  bool matched = false;
  for (const auto& suite : suites) {
    if (opt.suite != "all" && opt.suite != suite.name) continue;
    matched = true;
    int n = opt.n;
    if (opt.suite == "all") {
      n = std::min(n, std::max(suite.cap, opt.max_n));
    } else {
      check_cap(n, suite.cap, opt.max_n, "suite " + suite.name);
    }
    auto part = suite.run(n);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  if (!matched) throw std::invalid_argument("unknown suite: " + opt.suite);

  std::cout << meul::reports_to_json(reports, opt.timings).dump(2) << "\n";
  return meul::all_passed(reports) ? 0 : 1;
}

int run_table(const TableOptions& opt) {
  check_cap(opt.n, kRecursionNCap, opt.max_n, "table");
  const bool type_b = opt.type == "B";
  meul::MemoTable memo;
  auto comps = meul::all_compositions(opt.n);

  if (opt.format == "csv") {
    for (int i = 1; i <= opt.n; ++i) std::cout << "c" << i << ",";
    std::cout << "value\n";
    for (const auto& c : comps) {
      meul::BigInt v = type_b ? meul::mixed_eulerian_B(c, memo) : meul::mixed_eulerian_A(c, memo);
      std::cout << meul::format_composition(c) << "," << v << "\n";
    }
  } else if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : comps) {
      meul::BigInt v = type_b ? meul::mixed_eulerian_B(c, memo) : meul::mixed_eulerian_A(c, memo);
      rows.push_back({{"c", c.parts()}, {"value", v.str()}});
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    throw std::invalid_argument("unknown format: " + opt.format);
  }
  return 0;
}

int run_oracle(const OracleOptions& opt) {
  int cap = std::max(meul::kDefaultOracleCap, opt.max_n);
  const bool type_b = opt.type == "B";
  meul::MVPoly f = type_b ? meul::volume_poly_B(opt.n, cap) : meul::volume_poly_A(opt.n, cap);
  if (opt.eval_text.empty()) {
    std::cout << meul::format_poly(f);
    return 0;
  }
  std::vector<meul::Rational> point;
  std::string cur;
  for (char ch : opt.eval_text + ",") {
    if (ch == ',') {
      point.push_back(meul::parse_rational(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  std::cout << meul::format_rational(f.evaluate(point)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed Eulerian numbers: enumeration, recursion, and symbolic volumes"};
  app.require_subcommand(1);

  ComputeOptions copt;
  auto* compute = app.add_subcommand("compute", "Compute one mixed Eulerian number");
  compute->add_option("--type", copt.type, "A or B")->check(CLI::IsMember({"A", "B"}));
  compute->add_option("--c", copt.c_text, "composition, e.g. 1,0,2,1,1 or 10211")->required();
  compute->add_option("--method", copt.method, "recursion|enumeration|oracle|all");
  compute->add_option("--max-n", copt.max_n, "raise the size caps");

  EnumerateOptions eopt;
  auto* enumerate = app.add_subcommand("enumerate", "List admissible deletion orders");
  enumerate->add_option("--type", eopt.type, "A or B")->check(CLI::IsMember({"A", "B"}));
  enumerate->add_option("--c", eopt.c_text, "composition for the canonical division");
  enumerate->add_option("--division", eopt.division_text, "division, e.g. 1|-|2,3|4|5");
  enumerate->add_option("--limit", eopt.limit, "maximum number of permutations");
  enumerate->add_flag("--trace", eopt.trace, "print the deletion chain of each permutation");
  enumerate->add_option("--max-n", eopt.max_n, "raise the size caps");

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run identity verification suites");
  verify->add_option("--n", vopt.n, "sweep sizes 1..n")->required();
  verify->add_option("--suite", vopt.suite,
                     "all|4.1|cycle|ineq|hybrid|partial|msuz|5.2|injection");
  verify->add_flag("--timings", vopt.timings, "include per-identity millis in the report");
  verify->add_option("--max-n", vopt.max_n, "raise the per-suite size caps");

  TableOptions topt;
  auto* table = app.add_subcommand("table", "Print the full table for one size");
  table->add_option("--type", topt.type, "A or B")->check(CLI::IsMember({"A", "B"}));
  table->add_option("--n", topt.n, "composition size")->required();
  table->add_option("--format", topt.format, "json|csv");
  table->add_option("--max-n", topt.max_n, "raise the size caps");

  OracleOptions oopt;
  auto* oracle = app.add_subcommand("oracle", "Dump or evaluate a volume polynomial");
  oracle->add_option("--type", oopt.type, "A or B")->check(CLI::IsMember({"A", "B"}));
  oracle->add_option("--n", oopt.n, "number of weights")->required();
  oracle->add_option("--eval", oopt.eval_text, "evaluate at rationals, e.g. 1,1/2,3");
  oracle->add_option("--max-n", oopt.max_n, "raise the size caps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return run_compute(copt);
    if (enumerate->parsed()) return run_enumerate(eopt);
    if (verify->parsed()) return run_verify(vopt);
    if (table->parsed()) return run_table(topt);
    if (oracle->parsed()) return run_oracle(oopt);
  } catch (const meul::resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
