#pragma once

namespace etacrit {

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0. Throws std::domain_error for
/// x <= 0 or non-finite x.
double digamma(double x);

/// psi(x) - ln(x) for x > 0. For large x this is about -1/(2x) and is
/// returned without the cancellation a direct subtraction would suffer, which
/// matters when differencing psi at nearby large arguments.
double digamma_minus_log(double x);

}  // namespace etacrit
