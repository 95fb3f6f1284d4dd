#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isomono {

enum class CheckStatus { pass, fail, skip };
std::string_view status_name(CheckStatus s);

struct CheckRecord {
  std::string id;      // e.g. "lax/pv/zero-curvature"
  CheckStatus status = CheckStatus::pass;
  std::string anchor;  // the published claim this record verifies
  std::string detail;  // residual, witness or reason
  std::optional<double> residual;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  double tol = 0;
  std::vector<CheckRecord> records;

  int count(CheckStatus s) const;
  // 0 iff no record failed.
  int exit_code() const { return count(CheckStatus::fail) == 0 ? 0 : 1; }
  std::string to_json() const;  // stable key order, two-space indent
  std::string to_text() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  double tol = 1e-10;
  int table_samples = 10;   // per singular-fibre row
  int smooth_samples = 50;  // per family in the smoothness comparison
  int cyclic_samples = 20;  // generic samples per family
  bool parallel = true;     // fan out per family; output order is fixed either way
};

const std::vector<std::string>& suite_names();

// Throws Error(UsageError) on an unknown suite name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& opts = {});

// Good-cyclic-vector counts for the nine Lax families, in kLaxFamilies order.
const std::vector<int>& expected_cyclic_counts();

}  // namespace isomono
