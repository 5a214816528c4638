#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "condcolor/claims.hpp"
#include "condcolor/solver.hpp"

namespace condcolor {

enum class Agreement {
  confirmed,
  construction_failed,
  solver_disagrees,
  unclaimed_probe,
  skipped,
};

const char* agreement_name(Agreement a);

struct SweepRow {
  FamilySpec spec;
  int r;
  std::optional<int> claimed_chi;
  std::optional<bool> constructed_ok;  // nullopt when no construction exists
  std::optional<int> solver_chi;       // nullopt when skipped or budget ran out
  Agreement agreement;
  std::string note;
};

struct SweepReport {
  std::vector<SweepRow> rows;

  int count(Agreement a) const;
  bool all_claims_hold() const;  // no construction_failed / solver_disagrees rows
};

struct SweepOptions {
  int solver_cap = 14;  // skip exact solving above this many vertices
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::vector<int> r_values;  // empty = theorem defaults
};

// Runs one theorem's instances over the given parameter values. For thm1
// `ns` are cycle lengths; for thm2 the (n, m) grid with n <= m is swept;
// for thm3 `ts` are ring counts; prop1 uses `ns` only.
SweepReport run_sweep(Theorem theorem, const std::vector<int>& ns, const std::vector<int>& ts,
                      const SweepOptions& opts);

std::string sweep_report_to_json(const SweepReport& report);

}  // namespace condcolor
