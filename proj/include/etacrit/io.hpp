#pragma once

// CSV / JSON emission for sweep rows and verification reports. Rationals are
// written as separate numerator and denominator columns, so files carry exact
// values; the *_dec columns are for reading and plotting only.

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "etacrit/criterion.hpp"
#include "etacrit/report.hpp"

namespace etacrit::io {

inline constexpr std::string_view kSweepHeader =
    "n,cutoff,main_num,main_den,main_dec,tail_high,exact_tail,period,runtime_ms";

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

struct SweepWriteOptions {
  bool include_timing = true;  // runtime_ms left empty otherwise
};

void write_sweep_csv(std::ostream& out, const std::vector<CriterionRow>& rows, const SweepWriteOptions& options = {});
void write_sweep_json(std::ostream& out, const std::vector<CriterionRow>& rows, const ConfigEcho& config,
                      const SweepWriteOptions& options = {});

/// One parsed sweep line; absent optionals were empty fields.
struct SweepRecord {
  std::int64_t n = 0;
  Rational cutoff;
  Rational main;
  double tail_high = 0.0;
  std::optional<double> exact_tail;
  std::optional<std::int64_t> period;
  std::optional<double> runtime_ms;
};

/// Parses output of write_sweep_csv. Throws std::runtime_error on a bad header or row.
std::vector<SweepRecord> read_sweep_csv(std::istream& in);

void write_reports_csv(std::ostream& out, const std::vector<VerificationReport>& reports);
void write_reports_json(std::ostream& out, const std::vector<VerificationReport>& reports, const ConfigEcho& config);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace etacrit::io
