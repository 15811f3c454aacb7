#include "gamma.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace hyppow {

namespace {

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_positive(double x) {
  // Valid for x >= 0.5.
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_real(double x) {
  if (!std::isfinite(x)) raise(ErrorCode::Domain, "gamma_real: non-finite argument");
  if (x <= 0.0 && x == std::floor(x)) {
    raise(ErrorCode::Pole, "gamma_real: pole at nonpositive integer");
  }
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_positive(1.0 - x));
  }
  return lanczos_positive(x);
}

}  // namespace hyppow
