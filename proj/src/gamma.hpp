#pragma once

namespace hyppow {

/// Gamma function for real arguments via the Lanczos approximation
/// (g = 7, 9 terms), accurate to well over 12 significant digits across
/// the range exercised here. Throws Error(Pole) at 0, -1, -2, ...
double gamma_real(double x);

}  // namespace hyppow
