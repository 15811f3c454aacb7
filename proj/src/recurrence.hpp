#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "series.hpp"

namespace hyppow {

/// One recurrence coefficient as a function of the index: n -> (num, den).
/// Keeping numerator and denominator apart lets the runner detect a
/// vanishing denominator before any division happens.
template <class F>
using RatioFn = std::function<std::pair<F, F>(long)>;

/// Order-k linear recurrence t_{n+1} = sum_{j<k} coeff_fns[j](n) * t_{n-j},
/// applied for n >= start_index, with initial values t_0 .. covering every
/// back-reference of the first step.
template <class F>
struct RecurrenceSpec {
  int order = 0;
  std::vector<RatioFn<F>> coeff_fns;
  std::vector<F> initial;
  long start_index = 1;
  std::string label;
};

enum class FallbackMode { Error, OracleSubstitute };

/// What to do when a coefficient denominator vanishes at some index:
/// fail, or fill exactly that term from a per-index oracle and resume.
template <class F>
struct FallbackPolicy {
  FallbackMode mode = FallbackMode::Error;
  std::function<F(long)> oracle;

  static FallbackPolicy error() { return FallbackPolicy{FallbackMode::Error, nullptr}; }
  static FallbackPolicy substitute(std::function<F(long)> oracle_fn) {
    return FallbackPolicy{FallbackMode::OracleSubstitute, std::move(oracle_fn)};
  }
};

template <class F>
CoeffSeq<F> run_recurrence(const RecurrenceSpec<F>& spec,
                           const FallbackPolicy<F>& policy, long n_max) {
  check_series_cap<F>(n_max);
  if (spec.order <= 0 || static_cast<int>(spec.coeff_fns.size()) != spec.order) {
    raise(ErrorCode::InvalidArgument, "run_recurrence: malformed spec");
  }
  if (spec.start_index + 1 < spec.order) {
    raise(ErrorCode::InvalidArgument,
          "run_recurrence: first step would reference negative indices");
  }
  if (static_cast<long>(spec.initial.size()) < spec.start_index + 1) {
    raise(ErrorCode::InvalidArgument,
          "run_recurrence: initial values do not cover indices up to start_index");
  }
  if (policy.mode == FallbackMode::OracleSubstitute && !policy.oracle) {
    raise(ErrorCode::InvalidArgument,
          "run_recurrence: OracleSubstitute policy without an oracle");
  }

  CoeffSeq<F> out;
  out.provenance = Provenance::Recurrence;
  out.label = spec.label;
  out.terms.assign(spec.initial.begin(), spec.initial.end());
  if (static_cast<long>(out.terms.size()) > n_max + 1) {
    out.terms.resize(static_cast<size_t>(n_max) + 1);
    return out;
  }

  std::vector<std::pair<F, F>> parts(static_cast<size_t>(spec.order));
  for (long n = spec.start_index; n < n_max; ++n) {
    if (static_cast<long>(out.terms.size()) > n + 1) continue;  // seeded by initial
    bool degenerate = false;
    for (int j = 0; j < spec.order; ++j) {
      parts[static_cast<size_t>(j)] = spec.coeff_fns[static_cast<size_t>(j)](n);
      if (parts[static_cast<size_t>(j)].second.is_zero()) degenerate = true;
    }
    if (degenerate) {
      if (policy.mode == FallbackMode::Error) {
        raise(ErrorCode::ZeroDenominator,
              spec.label + ": coefficient denominator vanished at n = " + std::to_string(n));
      }
      out.terms.push_back(policy.oracle(n + 1));
      out.fallback_indices.push_back(n + 1);
      continue;
    }
    F next = F::zero();
    for (int j = 0; j < spec.order; ++j) {
      const auto& [num, den] = parts[static_cast<size_t>(j)];
      next = next + (num / den) * out.terms[static_cast<size_t>(n - j)];
    }
    out.terms.push_back(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Order-2 recurrence for the coefficients u_n of F^2(a,b;c;z):
//   u_{n+1} = alpha0(n) u_n + alpha1(n) u_{n-1},  n >= 1,
// with u_0 = 1, u_1 = 2ab/c, and
//   alpha0(n) = [2n^3 + 3(a+b+c-1)n^2 + ((a+b)(4c-3)+4ab-c+1)n + 2ab(2c-1)] / D(n)
//   alpha1(n) = -(2a+n-1)(2b+n-1)(a+b+n-1) / D(n)
//   D(n)      = (n+1)(c+n)(2c+n-1).
// ---------------------------------------------------------------------------

template <class F>
struct AlphaParts {
  F num0, num1, den;
};

template <class F>
AlphaParts<F> alpha_parts(const ParameterTriple<F>& p, long n) {
  const F a = p.a, b = p.b, c = p.c;
  const F one = F::one();
  const F fn = F::from_long(n);
  const F two = F::from_long(2), three = F::from_long(3), four = F::from_long(4);

  F num0 = two * fn * fn * fn
         + three * (a + b + c - one) * fn * fn
         + ((a + b) * (four * c - three) + four * a * b - c + one) * fn
         + two * a * b * (two * c - one);
  F num1 = -((two * a + fn - one) * (two * b + fn - one) * (a + b + fn - one));
  F den = (fn + one) * (c + fn) * (two * c + fn - one);
  return {std::move(num0), std::move(num1), std::move(den)};
}

/// Evaluated (alpha0, alpha1); throws Error(ZeroDenominator) naming the
/// vanished factor.
template <class F>
std::pair<F, F> alpha_coeffs(const ParameterTriple<F>& p, long n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "alpha_coeffs: n must be >= 1");
  auto parts = alpha_parts(p, n);
  if (parts.den.is_zero()) {
    const F fn = F::from_long(n);
    std::string factor = (p.c + fn).is_zero() ? "(c+n)" : "(2c+n-1)";
    raise(ErrorCode::ZeroDenominator,
          "alpha_coeffs: factor " + factor + " vanished at n = " + std::to_string(n));
  }
  return {parts.num0 / parts.den, parts.num1 / parts.den};
}

// ---------------------------------------------------------------------------
// Order-3 recurrence for the coefficients v_n of F^3(a,b;c;z):
//   v_{n+1} = beta0(n) v_n + beta1(n) v_{n-1} + beta2(n) v_{n-2},
// with v_0 = 1, v_1 = 3ab/c, v_2 = 3a^2b^2/c^2 + 3a(a+1)b(b+1)/(2c(c+1)),
// run from n = 2 (the n = 1 step only closes under the convention
// v_{-1} = 0, which is asserted in tests rather than relied on), and
//   D(n) = (n+1)(c+n)(2c+n-1)(3c+n-2).
// The beta1 numerator below is transcription-validated against the
// convolution oracle by an interpolation fit; see identity_lab.
// ---------------------------------------------------------------------------

template <class F>
struct BetaParts {
  F num0, num1, num2, den;
};

template <class F>
BetaParts<F> beta_parts(const ParameterTriple<F>& p, long n) {
  const F a = p.a, b = p.b, c = p.c;
  const F one = F::one();
  const F fn = F::from_long(n);
  auto k = [](long v) { return F::from_long(v); };

  const F n2 = fn * fn, n3 = n2 * fn, n4 = n3 * fn;
  const F a2 = a * a, b2 = b * b, ab = a * b;

  F num0 = k(3) * n4
         + k(6) * (a + b + k(2) * c - k(2)) * n3
         + (k(2) * a * (k(5) * b + k(11) * c - k(9)) + k(11) * c * (k(2) * b + c)
            - k(18) * b - k(26) * c + k(15)) * n2
         + (c * c * (k(18) * a + k(18) * b - k(7))
            + c * (a * (k(30) * b - k(29)) - k(29) * b + k(13))
            + k(4) * a * (k(3) - k(5) * b) + k(12) * b - k(6)) * fn
         + k(3) * ab * (c * (k(6) * c - k(7)) + k(2));

  F lin = (k(10) * a2 * b + k(6) * a2 * c - k(11) * a2 + k(10) * a * b2
           + k(22) * ab * c - k(42) * ab - k(17) * a * c + k(26) * a)
        + (k(6) * b2 * c - k(11) * b2 - k(17) * b * c + k(26) * b + k(9) * c - k(13));
  F cst = k(9) * a2 * b2 + k(36) * a2 * b * c - k(45) * a2 * b - k(18) * a2 * c
        + k(22) * a2 + k(36) * a * b2 * c - k(45) * a * b2 - k(72) * ab * c
        + k(87) * ab + k(29) * a * c - k(36) * a - k(18) * b2 * c + k(22) * b2
        + k(29) * b * c - k(36) * b - k(11) * c + k(14);
  F num1 = -(k(3) * n4
             + k(6) * (k(2) * a + k(2) * b + c - k(3)) * n3
             + (k(11) * a2 + k(42) * ab + k(22) * a * c - k(54) * a + k(11) * b2
                + k(22) * b * c - k(54) * b - k(22) * c + k(40)) * n2
             + k(3) * lin * fn + cst);

  F num2 = (k(3) * a + fn - k(2)) * (k(3) * b + fn - k(2))
         * (k(2) * a + b + fn - k(2)) * (a + k(2) * b + fn - k(2));

  F den = (fn + one) * (c + fn) * (k(2) * c + fn - one) * (k(3) * c + fn - k(2));
  return {std::move(num0), std::move(num1), std::move(num2), std::move(den)};
}

template <class F>
std::array<F, 3> beta_coeffs(const ParameterTriple<F>& p, long n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "beta_coeffs: n must be >= 1");
  auto parts = beta_parts(p, n);
  if (parts.den.is_zero()) {
    const F fn = F::from_long(n);
    std::string factor = "(3c+n-2)";
    if ((p.c + fn).is_zero()) factor = "(c+n)";
    else if ((F::from_long(2) * p.c + fn - F::one()).is_zero()) factor = "(2c+n-1)";
    raise(ErrorCode::ZeroDenominator,
          "beta_coeffs: factor " + factor + " vanished at n = " + std::to_string(n));
  }
  return {parts.num0 / parts.den, parts.num1 / parts.den, parts.num2 / parts.den};
}

// ---------------------------------------------------------------------------
// Sequence generators. The default fallback substitutes the convolution
// oracle at exactly the indices where a denominator factor vanishes
// (possible for admissible c such as c = -1/2) and resumes the recurrence.
// ---------------------------------------------------------------------------

/// Lazily extended cache of F coefficients plus derived convolutions, used
/// by the per-index fallback oracles.
template <class F>
class OracleCache {
 public:
  explicit OracleCache(ParameterTriple<F> p) : p_(std::move(p)) {}

  F f(long n) {
    extend_f(n);
    return f_[static_cast<size_t>(n)];
  }
  F square_term(long n) {
    extend_f(n);
    F acc = F::zero();
    for (long k = 0; k <= n; ++k) {
      acc = acc + f_[static_cast<size_t>(k)] * f_[static_cast<size_t>(n - k)];
    }
    return acc;
  }
  F cube_term(long n) {
    extend_f(n);
    F acc = F::zero();
    for (long k = 0; k <= n; ++k) {
      acc = acc + square_term(k) * f_[static_cast<size_t>(n - k)];
    }
    return acc;
  }

 private:
  void extend_f(long n) {
    while (static_cast<long>(f_.size()) <= n) {
      long k = static_cast<long>(f_.size()) - 1;
      F fk = F::from_long(k);
      f_.push_back(f_.back() * (p_.a + fk) * (p_.b + fk) /
                   ((p_.c + fk) * F::from_long(k + 1)));
    }
  }
  ParameterTriple<F> p_;
  std::vector<F> f_{F::one()};
};

template <class F>
RecurrenceSpec<F> square_spec(const ParameterTriple<F>& p) {
  RecurrenceSpec<F> spec;
  spec.order = 2;
  spec.label = "F^2 recurrence";
  spec.start_index = 1;
  spec.initial = {F::one(), F::from_long(2) * p.a * p.b / p.c};
  spec.coeff_fns = {
      [p](long n) { auto parts = alpha_parts(p, n); return std::make_pair(parts.num0, parts.den); },
      [p](long n) { auto parts = alpha_parts(p, n); return std::make_pair(parts.num1, parts.den); },
  };
  return spec;
}

template <class F>
RecurrenceSpec<F> cube_spec(const ParameterTriple<F>& p) {
  const F two = F::from_long(2), three = F::from_long(3);
  RecurrenceSpec<F> spec;
  spec.order = 3;
  spec.label = "F^3 recurrence";
  spec.start_index = 2;
  F v1 = three * p.a * p.b / p.c;
  F v2 = three * p.a * p.a * p.b * p.b / (p.c * p.c)
       + three * p.a * (p.a + F::one()) * (p.b + F::one()) * p.b
             / (two * p.c * (p.c + F::one()));
  spec.initial = {F::one(), std::move(v1), std::move(v2)};
  spec.coeff_fns = {
      [p](long n) { auto parts = beta_parts(p, n); return std::make_pair(parts.num0, parts.den); },
      [p](long n) { auto parts = beta_parts(p, n); return std::make_pair(parts.num1, parts.den); },
      [p](long n) { auto parts = beta_parts(p, n); return std::make_pair(parts.num2, parts.den); },
  };
  return spec;
}

template <class F>
FallbackPolicy<F> square_fallback(const ParameterTriple<F>& p) {
  auto cache = std::make_shared<OracleCache<F>>(p);
  return FallbackPolicy<F>::substitute([cache](long i) { return cache->square_term(i); });
}

template <class F>
FallbackPolicy<F> cube_fallback(const ParameterTriple<F>& p) {
  auto cache = std::make_shared<OracleCache<F>>(p);
  return FallbackPolicy<F>::substitute([cache](long i) { return cache->cube_term(i); });
}

/// Coefficients of F^2(a,b;c;z) up to index N via the order-2 recurrence.
template <class F>
CoeffSeq<F> square_coeffs(const ParameterTriple<F>& p, long n_max,
                          FallbackMode mode = FallbackMode::OracleSubstitute) {
  auto policy = mode == FallbackMode::OracleSubstitute
                    ? square_fallback(p)
                    : FallbackPolicy<F>::error();
  return run_recurrence(square_spec(p), policy, n_max);
}

/// Coefficients of F^3(a,b;c;z) up to index N via the order-3 recurrence.
template <class F>
CoeffSeq<F> cube_coeffs(const ParameterTriple<F>& p, long n_max,
                        FallbackMode mode = FallbackMode::OracleSubstitute) {
  auto policy = mode == FallbackMode::OracleSubstitute
                    ? cube_fallback(p)
                    : FallbackPolicy<F>::error();
  return run_recurrence(cube_spec(p), policy, n_max);
}

}  // namespace hyppow
