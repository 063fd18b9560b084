#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace etacrit {

using ComplexValue = std::complex<double>;

/// Absolute slack added to every rigorous bound before the pass decision.
inline constexpr double kReportSlack = 1e-9;

/// Outcome of one identity or inequality check.
struct VerificationReport {
  std::string check_name;
  std::vector<std::pair<std::string, std::string>> parameters;  // in insertion order
  ComplexValue lhs;
  ComplexValue rhs;
  double abs_error = 0.0;
  double rigorous_bound = 0.0;
  bool pass = false;
  // Set by exact-equality checks; when present, pass means exact_lhs == exact_rhs.
  std::optional<std::string> exact_lhs;
  std::optional<std::string> exact_rhs;
};

/// The pass decision implied by the stored fields alone.
bool recompute_pass(const VerificationReport& report);

/// Fills `pass` from the stored fields and returns the report.
VerificationReport finalize(VerificationReport report);

}  // namespace etacrit
