#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string_view>

#include "etacrit/report.hpp"

namespace etacrit {

/// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 0 if every report passes, 1 otherwise.
int exit_code_for(std::span<const VerificationReport> reports);

/// Parses "a+bi", "a-bi", "bi" or "a" with decimal components.
std::complex<double> parse_complex(std::string_view text);

}  // namespace etacrit
