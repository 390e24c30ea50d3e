#pragma once

// Exhaustive verification sweeps. Each verifier enumerates a finite
// universe of instances determined by the spec and the bounds, evaluates
// the closed-form library on every instance and recomputes the same
// quantities on explicit element sets of truncated groups.

#include "qlcft/field_spec.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qlcft::oracle {

enum class TheoremId {
  THM_1_1,
  THM_1_2_I,
  THM_1_2_II,
  THM_1_2_III,
  LEMMA_2_1,
  LEMMA_2_2,
  LEMMA_2_4_II,
  LEMMA_2_4_III,
  PROP_3_1,
  STMT_3_1,
  REMARK_3_2_I,
};

const char* to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& name);
const std::vector<TheoremId>& all_theorems();

struct VerifyBounds {
  std::int64_t max_degree = 100;     // single-extension sweeps
  std::int64_t pair_degree = 50;     // pairwise sweeps
  std::int64_t n_base = 900;         // power quotients: every n dividing this
  std::int64_t shape_law_base = 450; // finite-index subgroups of E*/E*^m
  std::int64_t e1_index = 25;        // E1-level norm subgroups
  std::uint64_t budget = 10'000'000; // subgroup enumeration work
};

struct Violation {
  std::string instance;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  static constexpr std::size_t max_listed = 20;

  TheoremId theorem = TheoremId::THM_1_1;
  bool pass = true;
  std::uint64_t instances = 0;
  std::vector<Violation> violations; // first max_listed only
  std::uint64_t total_violations = 0;
  std::string universe;
  LevelMap working_levels;
  double elapsed_ms = 0;
};

/// Runs one sweep. Levels are raised to what the bounds require; throws
/// BudgetError when a truncated group or subgroup enumeration would exceed
/// the budget and ValidationError for nonpositive bounds.
VerificationReport verify(const FieldSpec& spec, TheoremId id, const VerifyBounds& bounds = {});

std::vector<VerificationReport> verify_all(const FieldSpec& spec, const VerifyBounds& bounds = {});

/// {"theorem", "pass", "instances", "violations", "total_violations",
///  "universe", "working_levels", "elapsed_ms"}; elapsed_ms is written as 0
/// when `timing` is false so that output is reproducible.
nlohmann::json to_json(const VerificationReport& report, bool timing = true);

} // namespace qlcft::oracle
