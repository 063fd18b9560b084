#include "etacrit/report.hpp"

#include <cmath>

namespace etacrit {

bool recompute_pass(const VerificationReport& report) {
  if (report.exact_lhs && report.exact_rhs) return *report.exact_lhs == *report.exact_rhs;
  return std::isfinite(report.abs_error) && report.abs_error <= report.rigorous_bound + kReportSlack;
}

VerificationReport finalize(VerificationReport report) {
  report.pass = recompute_pass(report);
  return report;
}

}  // namespace etacrit
