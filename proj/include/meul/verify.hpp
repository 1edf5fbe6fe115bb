#pragma once

#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

namespace meul {

enum class VerifyStatus { pass, fail, info };

const char* to_string(VerifyStatus s);

/// One checked identity over one swept parameter range. A failing check
/// always carries the first counterexample found (lexicographically
/// smallest parameters). info entries record observations that are not
/// gating, e.g. how a formula variant compares against computed values.
struct VerificationReport {
  std::string identity;
  std::string params;
  VerifyStatus status = VerifyStatus::pass;
  std::string witness;
  std::string note;
  long long millis = 0;
};

/// True when no entry failed (info entries do not gate).
bool all_passed(std::span<const VerificationReport> reports);

/// JSON array of {identity, params, status, witness?, note?, millis?}.
nlohmann::json reports_to_json(std::span<const VerificationReport> reports,
                               bool with_millis = false);

// Each verifier sweeps every parameter set it covers up to n and computes
// both sides of each identity through disjoint code paths (deletion
// recursion, exhaustive permutation scans, symbolic volumes).

std::vector<VerificationReport> verify_theorem_4_1(int n);
std::vector<VerificationReport> verify_cycle_theorem(int n);
std::vector<VerificationReport> verify_inequality(int n);
std::vector<VerificationReport> verify_hybrid(int n);
std::vector<VerificationReport> verify_partial_eulerian(int n);
std::vector<VerificationReport> verify_msuz(int n);
std::vector<VerificationReport> verify_theorem_5_2(int n);
std::vector<VerificationReport> verify_injection(int n);

}  // namespace meul
