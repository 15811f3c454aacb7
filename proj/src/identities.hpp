#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "families.hpp"

namespace hyppow {

/// Outcome of one machine-checked identity over one parameter set.
struct VerificationReport {
  enum class Status { Pass, FailAt, Inconclusive };

  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  long max_index = 0;
  Status status = Status::Pass;
  long fail_index = -1;
  std::vector<std::pair<long, std::string>> residuals;
  std::string notes;

  bool passed() const { return status == Status::Pass; }
  void fail_at(long index, std::string residual);
  void add_note(const std::string& note);
  nlohmann::json to_json() const;
};

// ---------------------------------------------------------------------------
// Section-4 identities, exact where possible.
// ---------------------------------------------------------------------------

/// F^2(a,b;a+b+1/2;x) = 3F2(2a,2b,a+b; a+b+1/2,2a+2b; x), checked two
/// ways: coefficient equality u_n = w_n against the closed-form w_n, and
/// membership of w_n in the order-2 recurrence.
VerificationReport verify_clausen(const Rational& a, const Rational& b, long n_max);

/// M(a,c;x) M(a,c;-x) = 2F3(a,c-a; c,c/2,(c+1)/2; x^2/4): the product
/// recurrence must match the convolution oracle, even coefficients the
/// 4^{-n}-scaled pFq terms, and odd coefficients must vanish exactly.
VerificationReport verify_ramanujan_preece(const Rational& a, const Rational& c, long n_max);

/// Coefficient-level monotonicity of F^2(a,b;c;x)/F(2a,2b;2c;x): the ratio
/// sequence u_n/v_n must be nondecreasing, and the sign of the bound
/// 2n(a-c)(b-c)/((n+1)(c+n)(2c+n-1)(2c+n)) must match sign((c-a)(c-b)).
VerificationReport ratio_monotonicity(const Rational& a, const Rational& b,
                                      const Rational& c, long n_max);

/// Limit of F^2(a,b;c;x)/F(2a,2b;2c;x) as x -> 1: the Gamma-factor ratio.
/// Requires c > max(a,b) and c > a+b; the value exceeds 1.
double gamma_ratio_limit(double a, double b, double c);

/// Truncated series ratio at x = 0.99 (N = 2000) versus gamma_ratio_limit,
/// within the given relative tolerance.
VerificationReport gamma_limit_consistency(double a, double b, double c,
                                           double rel_tol = 0.05);

/// x^2 K^2(x)/log(1-x^2) is strictly decreasing across the samples and
/// stays below -pi^2/4 (+1e-9); series truncation adapts until the tail
/// bound is under 1e-10.
VerificationReport k_log_ratio_check(const std::vector<double>& samples);

/// The product F(a,b;c;z) F(a+1,b+1;c+1;z) (power = 2) or
/// F^2(a,b;c;z) F(a+1,b+1;c+1;z) (power = 3) satisfies the shifted
/// recurrence with the printed initial values; when ab != 0 the product
/// coefficients also equal the scaled derivative of the power series.
VerificationReport contiguous_product_check(const ParameterTriple<Rational>& p,
                                            long n_max, int power);

/// The printed specialized recurrence of a corollary family equals the
/// general recurrence specialized at the family's triple, coefficient
/// function by coefficient function and end to end.
VerificationReport corollary_specialization_check(Family family,
                                                  const FamilyParams<Rational>& params,
                                                  long n_max);

/// Transcription gate for the order-3 recurrence's middle coefficient:
/// solve for beta1(n) * denominator(n) from oracle cube coefficients at
/// >= 10 indices, interpolate the unique degree-<=4 polynomial in n, and
/// require the shipped beta1 to match it exactly. `fitted` (if non-null)
/// receives the polynomial's coefficients, constant term first.
VerificationReport beta1_transcription_check(const ParameterTriple<Rational>& p,
                                             long n_lo = 2, long n_hi = 16,
                                             std::vector<Rational>* fitted = nullptr);

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

struct SuiteOverrides {
  std::optional<Rational> a, b, c, alpha, beta;
  std::optional<long> m;
  std::optional<long> n_max;

  bool empty() const { return !a && !b && !c && !alpha && !beta && !m; }
};

bool is_suite_name(const std::string& name);

/// Runs one named suite ("clausen", "ramanujan-preece", "monotonicity",
/// "contiguous", "corollary-specializations", or "all") over its default
/// grid, or over a single overridden parameter set. Tasks fan out across
/// `jobs` workers (<= 0: HYPPOW_JOBS or hardware concurrency); report
/// order is deterministic regardless of the pool size.
std::vector<VerificationReport> run_suite(const std::string& name,
                                          const SuiteOverrides& overrides, int jobs);

nlohmann::json bundle_json(const std::string& suite,
                           const std::vector<VerificationReport>& reports);

// Default parameter grids (shared with the acceptance suite).
std::vector<std::pair<Rational, Rational>> default_clausen_pairs();
std::vector<std::pair<Rational, Rational>> default_ramanujan_preece_pairs();
std::vector<std::array<Rational, 3>> default_monotonicity_grid();
std::vector<std::array<Rational, 3>> default_beta1_triples();

}  // namespace hyppow
