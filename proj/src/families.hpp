#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <string>

#include "recurrence.hpp"

namespace hyppow {

enum class Family {
  FSquared,
  FCubed,
  ZeroBalancedSquared,
  K2,
  E2,
  K3,
  E3,
  Chebyshev2,
  Chebyshev3,
  Legendre2,
  Legendre3,
  Gegenbauer2,
  Gegenbauer3,
  Jacobi2,
  Jacobi3,
  SinAlphaArcsin2,
  SinAlphaArcsin3,
  CosAlphaArcsin2,
  CosAlphaArcsin3,
  ContiguousProduct2,
  ContiguousProduct3,
  KummerProduct,
};

std::optional<Family> parse_family(const std::string& token);
const char* family_token(Family f);

/// How the series variable relates to the function argument.
enum class ArgMap { Identity, Square, OneMinusTwoZ };

/// Which underlying generator produces the coefficient sequence.
enum class SeriesKind { Square, Cube, ContigSquare, ContigCube, KummerProd };

/// Constant multiplier (rational part) times an integer power of pi, kept
/// symbolic so the coefficient layer stays exact.
template <class F>
struct Prefactor {
  F coeff = F::one();
  int pi_power = 0;

  std::complex<double> value() const;
};

template <class F>
struct FamilyParams {
  std::optional<long> m;        // polynomial degree
  std::optional<F> alpha, beta; // weights / trig parameter
  std::optional<F> a, b, c;     // raw series parameters
};

/// A fully resolved catalog entry: the specialized parameter triple, the
/// argument transform, the prefactor, and the exponent law
/// exponent(n) = exp_scale * n + exp_shift of the emitted series.
template <class F>
struct TransformSpec {
  Family family;
  SeriesKind kind;
  ParameterTriple<F> triple;
  ArgMap arg_map = ArgMap::Identity;
  Prefactor<F> prefactor;
  long exp_scale = 1;
  long exp_shift = 0;
  FamilyParams<F> extra;
  std::string label;

  long exponent(long n) const { return exp_scale * n + exp_shift; }
  int power() const {
    return kind == SeriesKind::Cube || kind == SeriesKind::ContigCube ? 3 : 2;
  }
};

template <class F>
TransformSpec<F> catalog_lookup(Family family, const FamilyParams<F>& params);

/// Coefficients of the underlying series (before prefactor and argument
/// map), produced by the recurrence engine with the family's initial
/// values; the prefactor and exponent law travel as metadata.
template <class F>
struct FamilySeries {
  CoeffSeq<F> seq;
  TransformSpec<F> spec;
};

template <class F>
FamilySeries<F> family_coeffs(const TransformSpec<F>& spec, long n_max,
                              FallbackMode mode = FallbackMode::OracleSubstitute);

/// Oracle for the same series by direct convolution, used in tests and as
/// the benchmark counterpart.
template <class F>
CoeffSeq<F> family_oracle(const TransformSpec<F>& spec, long n_max);

struct EvalResult {
  std::complex<double> value{0.0, 0.0};
  std::optional<double> tail_bound;
  long terms_used = 0;
};

/// Truncated evaluation prefactor * sum_{n<=N} t_n z^{exponent(n)} inside
/// |z| < 1. The tail bound is the geometric estimate from the last two
/// nonzero terms when their magnitude ratio is below 1.
template <class F>
EvalResult evaluate_family(const TransformSpec<F>& spec, const F& z, long n_max);

/// Doubles N until tail_bound < target (or the term cap is hit).
template <class F>
EvalResult evaluate_family_adaptive(const TransformSpec<F>& spec, const F& z,
                                    double tail_target, long n_cap);

// ---------------------------------------------------------------------------
// Specialized recurrences printed alongside the corollaries (exact
// rational backend only; used by the corollary-specialization check).
// Entries flagged `corrected` reproduce the specialization of the general
// theorem where the widely printed form is internally inconsistent; the
// note records what was corrected and the check pins the inconsistency.
// ---------------------------------------------------------------------------

struct PrintedRecurrence {
  int order = 0;
  std::vector<RatioFn<Rational>> coeff_fns;
  std::vector<Rational> initial;
  long start_index = 1;
  bool corrected = false;
  std::string note;
};

std::optional<PrintedRecurrence> printed_recurrence(
    Family family, const FamilyParams<Rational>& params);

/// The faulty printed Legendre-cube coefficient functions, kept so tests
/// can demonstrate they disagree with the direct expansion of P_m(1-2z)^3.
PrintedRecurrence legendre3_printed_uncorrected(long m);
/// Likewise the printed Legendre-square form with the flipped u_{n-1} sign.
PrintedRecurrence legendre2_printed_uncorrected(long m);

// ---------------------------------------------------------------------------
// Template definitions
// ---------------------------------------------------------------------------

template <class F>
std::complex<double> Prefactor<F>::value() const {
  double pi_part = 1.0;
  for (int i = 0; i < pi_power; ++i) pi_part *= std::numbers::pi;
  for (int i = 0; i > pi_power; --i) pi_part /= std::numbers::pi;
  return to_complex(coeff) * pi_part;
}

namespace detail {

template <class F>
const F& require_param(const std::optional<F>& p, const char* name) {
  if (!p) {
    raise(ErrorCode::MissingParameter, std::string("missing family parameter: ") + name);
  }
  return *p;
}

inline long require_degree(const std::optional<long>& m) {
  if (!m) raise(ErrorCode::MissingParameter, "missing family parameter: m");
  if (*m < 0) raise(ErrorCode::InvalidArgument, "polynomial degree m must be >= 0");
  return *m;
}

inline void require_positive_weight(const Rational& x, const char* name) {
  if (x.sign() <= 0) {
    raise(ErrorCode::InvalidArgument, std::string(name) + " must be positive");
  }
}
inline void require_positive_weight(const Cplx& x, const char* name) {
  if (x.is_zero()) {
    raise(ErrorCode::InvalidArgument, std::string(name) + " must be nonzero");
  }
}

template <class F>
F half_of(const F& x) {
  return x / F::from_long(2);
}

}  // namespace detail

template <class F>
TransformSpec<F> catalog_lookup(Family family, const FamilyParams<F>& params) {
  using detail::require_param;
  const F one = F::one();
  const F two = F::from_long(2);
  TransformSpec<F> spec;
  spec.family = family;
  spec.extra = params;
  spec.label = family_token(family);

  auto triple = [](F a, F b, F c) { return ParameterTriple<F>::checked(a, b, c); };

  switch (family) {
    case Family::FSquared:
    case Family::FCubed: {
      spec.kind = family == Family::FSquared ? SeriesKind::Square : SeriesKind::Cube;
      spec.triple = triple(require_param(params.a, "a"), require_param(params.b, "b"),
                           require_param(params.c, "c"));
      return spec;
    }
    case Family::ZeroBalancedSquared: {
      spec.kind = SeriesKind::Square;
      F a = require_param(params.a, "a"), b = require_param(params.b, "b");
      spec.triple = triple(a, b, a + b);
      return spec;
    }
    case Family::K2:
    case Family::E2: {
      spec.kind = SeriesKind::Square;
      F a = family == Family::K2 ? F::from_ratio(1, 2) : F::from_ratio(-1, 2);
      spec.triple = triple(a, F::from_ratio(1, 2), one);
      spec.arg_map = ArgMap::Square;
      spec.prefactor = {F::from_ratio(1, 4), 2};
      spec.exp_scale = 2;
      return spec;
    }
    case Family::K3:
    case Family::E3: {
      // The coefficients multiply z^{2n}: they expand F^3 in the variable
      // z^2, which is the only reading consistent with K^3(0) etc.
      spec.kind = SeriesKind::Cube;
      F a = family == Family::K3 ? F::from_ratio(1, 2) : F::from_ratio(-1, 2);
      spec.triple = triple(a, F::from_ratio(1, 2), one);
      spec.arg_map = ArgMap::Square;
      spec.prefactor = {F::from_ratio(1, 8), 3};
      spec.exp_scale = 2;
      return spec;
    }
    case Family::Chebyshev2:
    case Family::Chebyshev3: {
      spec.kind = family == Family::Chebyshev2 ? SeriesKind::Square : SeriesKind::Cube;
      long m = detail::require_degree(params.m);
      spec.triple = triple(F::from_long(-m), F::from_long(m), F::from_ratio(1, 2));
      spec.arg_map = ArgMap::OneMinusTwoZ;
      return spec;
    }
    case Family::Legendre2:
    case Family::Legendre3: {
      spec.kind = family == Family::Legendre2 ? SeriesKind::Square : SeriesKind::Cube;
      long m = detail::require_degree(params.m);
      spec.triple = triple(F::from_long(-m), F::from_long(m + 1), one);
      spec.arg_map = ArgMap::OneMinusTwoZ;
      return spec;
    }
    case Family::Gegenbauer2:
    case Family::Gegenbauer3: {
      int power = family == Family::Gegenbauer2 ? 2 : 3;
      spec.kind = power == 2 ? SeriesKind::Square : SeriesKind::Cube;
      long m = detail::require_degree(params.m);
      F alpha = require_param(params.alpha, "alpha");
      detail::require_positive_weight(alpha, "alpha");
      spec.triple = triple(F::from_long(-m), F::from_long(m) + two * alpha,
                           alpha + F::from_ratio(1, 2));
      spec.arg_map = ArgMap::OneMinusTwoZ;
      // Leading value C_m^(alpha)(1) = (2 alpha)_m / m!, raised to the power.
      F lead = pochhammer(two * alpha, m) / pochhammer(one, m);
      spec.prefactor.coeff = power == 2 ? lead * lead : lead * lead * lead;
      return spec;
    }
    case Family::Jacobi2:
    case Family::Jacobi3: {
      int power = family == Family::Jacobi2 ? 2 : 3;
      spec.kind = power == 2 ? SeriesKind::Square : SeriesKind::Cube;
      long m = detail::require_degree(params.m);
      F alpha = require_param(params.alpha, "alpha");
      F beta = require_param(params.beta, "beta");
      detail::require_positive_weight(alpha, "alpha");
      detail::require_positive_weight(beta, "beta");
      spec.triple = triple(F::from_long(-m), F::from_long(m + 1) + alpha + beta, alpha + one);
      spec.arg_map = ArgMap::OneMinusTwoZ;
      F lead = pochhammer(alpha + one, m) / pochhammer(one, m);
      spec.prefactor.coeff = power == 2 ? lead * lead : lead * lead * lead;
      return spec;
    }
    case Family::SinAlphaArcsin2:
    case Family::SinAlphaArcsin3: {
      int power = family == Family::SinAlphaArcsin2 ? 2 : 3;
      spec.kind = power == 2 ? SeriesKind::Square : SeriesKind::Cube;
      F alpha = require_param(params.alpha, "alpha");
      spec.triple = triple(detail::half_of(one + alpha), detail::half_of(one - alpha),
                           F::from_ratio(3, 2));
      spec.arg_map = ArgMap::Square;
      spec.prefactor.coeff = power == 2 ? alpha * alpha : alpha * alpha * alpha;
      spec.exp_scale = 2;
      spec.exp_shift = power;  // z^2 factor squared / z^3 factor cubed
      return spec;
    }
    case Family::CosAlphaArcsin2:
    case Family::CosAlphaArcsin3: {
      spec.kind = family == Family::CosAlphaArcsin2 ? SeriesKind::Square : SeriesKind::Cube;
      F alpha = require_param(params.alpha, "alpha");
      spec.triple = triple(detail::half_of(alpha), -detail::half_of(alpha), F::from_ratio(1, 2));
      spec.arg_map = ArgMap::Square;
      spec.exp_scale = 2;
      return spec;
    }
    case Family::ContiguousProduct2:
    case Family::ContiguousProduct3: {
      spec.kind = family == Family::ContiguousProduct2 ? SeriesKind::ContigSquare
                                                       : SeriesKind::ContigCube;
      spec.triple = triple(require_param(params.a, "a"), require_param(params.b, "b"),
                           require_param(params.c, "c"));
      return spec;
    }
    case Family::KummerProduct: {
      spec.kind = SeriesKind::KummerProd;
      F a = require_param(params.a, "a");
      F c = require_param(params.c, "c");
      spec.triple = triple(a, c - a, c);
      return spec;
    }
  }
  raise(ErrorCode::UnknownFamily, "unknown family");
}

namespace detail {

template <class F>
ParameterTriple<F> shift_up(const ParameterTriple<F>& p) {
  return ParameterTriple<F>{p.a + F::one(), p.b + F::one(), p.c + F::one()};
}

// F(a,b;c) * F(a+1,b+1;c+1) coefficient by direct convolution.
template <class F>
F contig_square_term(const ParameterTriple<F>& p, long i) {
  auto f = f_coeffs(p, i);
  auto g = f_coeffs(shift_up(p), i);
  F acc = F::zero();
  for (long k = 0; k <= i; ++k) {
    acc = acc + f[static_cast<size_t>(k)] * g[static_cast<size_t>(i - k)];
  }
  return acc;
}

// F^2(a,b;c) * F(a+1,b+1;c+1) coefficient by direct convolution.
template <class F>
F contig_cube_term(const ParameterTriple<F>& p, long i) {
  auto sq = cauchy_square_oracle(p, i);
  auto g = f_coeffs(shift_up(p), i);
  F acc = F::zero();
  for (long k = 0; k <= i; ++k) {
    acc = acc + sq.terms[static_cast<size_t>(k)] * g[static_cast<size_t>(i - k)];
  }
  return acc;
}

// M(a,c;x) M(a,c;-x) coefficient; the second factor is the sign-alternated
// first one.
template <class F>
F kummer_product_term(const F& a, const F& c, long i) {
  auto m = kummer_coeffs(a, c, i);
  F acc = F::zero();
  for (long k = 0; k <= i; ++k) {
    F term = m[static_cast<size_t>(k)] * m[static_cast<size_t>(i - k)];
    if ((i - k) % 2 != 0) term = -term;
    acc = acc + term;
  }
  return acc;
}

template <class F>
RecurrenceSpec<F> contig_square_spec(const ParameterTriple<F>& p) {
  RecurrenceSpec<F> spec;
  spec.order = 2;
  spec.label = "F*F(+1) recurrence";
  spec.start_index = 1;
  F u1 = p.a * p.b / p.c + (p.a + F::one()) * (p.b + F::one()) / (p.c + F::one());
  spec.initial = {F::one(), std::move(u1)};
  // From u_n/(n+1) = alpha0(n) u_{n-1}/n + alpha1(n) u_{n-2}/(n-1), n >= 2.
  spec.coeff_fns = {
      [p](long n) {
        auto parts = alpha_parts(p, n + 1);
        return std::make_pair(F::from_long(n + 2) * parts.num0,
                              F::from_long(n + 1) * parts.den);
      },
      [p](long n) {
        auto parts = alpha_parts(p, n + 1);
        return std::make_pair(F::from_long(n + 2) * parts.num1,
                              F::from_long(n) * parts.den);
      },
  };
  return spec;
}

template <class F>
RecurrenceSpec<F> contig_cube_spec(const ParameterTriple<F>& p) {
  const F one = F::one(), two = F::from_long(2), three = F::from_long(3);
  RecurrenceSpec<F> spec;
  spec.order = 3;
  spec.label = "F^2*F(+1) recurrence";
  spec.start_index = 2;
  F v1 = two * p.a * p.b / p.c + (p.a + one) * (p.b + one) / (p.c + one);
  F v2 = p.a * p.a * p.b * p.b / (p.c * p.c)
       + three * p.a * (p.a + one) * (p.b + one) * p.b / (p.c * (p.c + one))
       + (p.a + one) * (p.a + two) * (p.b + one) * (p.b + two)
             / (two * (p.c + one) * (p.c + two));
  spec.initial = {one, std::move(v1), std::move(v2)};
  // From v_n/(n+1) = beta0(n) v_{n-1}/n + beta1(n) v_{n-2}/(n-1)
  //                + beta2(n) v_{n-3}/(n-2), n >= 3.
  spec.coeff_fns = {
      [p](long n) {
        auto parts = beta_parts(p, n + 1);
        return std::make_pair(F::from_long(n + 2) * parts.num0,
                              F::from_long(n + 1) * parts.den);
      },
      [p](long n) {
        auto parts = beta_parts(p, n + 1);
        return std::make_pair(F::from_long(n + 2) * parts.num1,
                              F::from_long(n) * parts.den);
      },
      [p](long n) {
        auto parts = beta_parts(p, n + 1);
        return std::make_pair(F::from_long(n + 2) * parts.num2,
                              F::from_long(n - 1) * parts.den);
      },
  };
  return spec;
}

template <class F>
RecurrenceSpec<F> kummer_product_spec(const F& a, const F& c) {
  const F one = F::one(), two = F::from_long(2);
  RecurrenceSpec<F> spec;
  spec.order = 2;
  spec.label = "M(x)M(-x) recurrence";
  spec.start_index = 1;
  spec.initial = {one, F::zero()};
  spec.coeff_fns = {
      [](long) { return std::make_pair(F::zero(), F::one()); },
      [a, c, one, two](long n) {
        F fn = F::from_long(n);
        F num = -((two * a + fn - one) * (two * a - two * c - fn + one));
        F den = (fn + one) * (c + fn - one) * (c + fn) * (two * c + fn - one);
        return std::make_pair(std::move(num), std::move(den));
      },
  };
  return spec;
}

}  // namespace detail

template <class F>
FamilySeries<F> family_coeffs(const TransformSpec<F>& spec, long n_max, FallbackMode mode) {
  FamilySeries<F> out;
  out.spec = spec;
  const ParameterTriple<F>& p = spec.triple;
  switch (spec.kind) {
    case SeriesKind::Square:
      out.seq = square_coeffs(p, n_max, mode);
      break;
    case SeriesKind::Cube:
      out.seq = cube_coeffs(p, n_max, mode);
      break;
    case SeriesKind::ContigSquare: {
      auto policy = mode == FallbackMode::OracleSubstitute
                        ? FallbackPolicy<F>::substitute(
                              [p](long i) { return detail::contig_square_term(p, i); })
                        : FallbackPolicy<F>::error();
      out.seq = run_recurrence(detail::contig_square_spec(p), policy, n_max);
      break;
    }
    case SeriesKind::ContigCube: {
      auto policy = mode == FallbackMode::OracleSubstitute
                        ? FallbackPolicy<F>::substitute(
                              [p](long i) { return detail::contig_cube_term(p, i); })
                        : FallbackPolicy<F>::error();
      out.seq = run_recurrence(detail::contig_cube_spec(p), policy, n_max);
      break;
    }
    case SeriesKind::KummerProd: {
      F a = p.a, c = p.c;
      auto policy = mode == FallbackMode::OracleSubstitute
                        ? FallbackPolicy<F>::substitute(
                              [a, c](long i) { return detail::kummer_product_term(a, c, i); })
                        : FallbackPolicy<F>::error();
      out.seq = run_recurrence(detail::kummer_product_spec(a, c), policy, n_max);
      break;
    }
  }
  out.seq.label = spec.label;
  return out;
}

template <class F>
CoeffSeq<F> family_oracle(const TransformSpec<F>& spec, long n_max) {
  const ParameterTriple<F>& p = spec.triple;
  switch (spec.kind) {
    case SeriesKind::Square:
      return cauchy_square_oracle(p, n_max);
    case SeriesKind::Cube:
      return cauchy_cube_oracle(p, n_max);
    case SeriesKind::ContigSquare: {
      CoeffSeq<F> f{f_coeffs(p, n_max), Provenance::Oracle, "F", {}};
      CoeffSeq<F> g{f_coeffs(detail::shift_up(p), n_max), Provenance::Oracle, "F(+1)", {}};
      return cauchy_product_oracle(f, g, n_max);
    }
    case SeriesKind::ContigCube: {
      CoeffSeq<F> sq = cauchy_square_oracle(p, n_max);
      CoeffSeq<F> g{f_coeffs(detail::shift_up(p), n_max), Provenance::Oracle, "F(+1)", {}};
      return cauchy_product_oracle(sq, g, n_max);
    }
    case SeriesKind::KummerProd: {
      auto m = kummer_coeffs(p.a, p.c, n_max);
      CoeffSeq<F> plus{m, Provenance::Oracle, "M(x)", {}};
      CoeffSeq<F> minus = plus;
      for (size_t i = 1; i < minus.terms.size(); i += 2) minus.terms[i] = -minus.terms[i];
      minus.label = "M(-x)";
      return cauchy_product_oracle(plus, minus, n_max);
    }
  }
  raise(ErrorCode::InvalidArgument, "family_oracle: unknown series kind");
}

template <class F>
EvalResult evaluate_family(const TransformSpec<F>& spec, const F& z, long n_max) {
  const std::complex<double> w = to_complex(z);
  if (std::abs(w) >= 1.0) {
    raise(ErrorCode::Domain, "evaluate_family: |argument| must be < 1");
  }
  FamilySeries<F> fs = family_coeffs(spec, n_max);
  if (any_overflow(fs.seq)) {
    raise(ErrorCode::Overflow, "evaluate_family: coefficient overflow");
  }

  std::complex<double> step{1.0, 0.0};
  for (long i = 0; i < spec.exp_scale; ++i) step *= w;
  std::complex<double> zpow{1.0, 0.0};
  for (long i = 0; i < spec.exp_shift; ++i) zpow *= w;

  std::complex<double> acc{0.0, 0.0};
  double last_nonzero = -1.0, prev_nonzero = -1.0;
  for (long n = 0; n <= n_max; ++n) {
    std::complex<double> term = to_complex(fs.seq.terms[static_cast<size_t>(n)]) * zpow;
    acc += term;
    double mag = std::abs(term);
    if (mag > 0.0) {
      prev_nonzero = last_nonzero;
      last_nonzero = mag;
    }
    zpow *= step;
  }

  EvalResult result;
  result.value = spec.prefactor.value() * acc;
  result.terms_used = n_max;
  if (w == std::complex<double>{0.0, 0.0}) {
    result.tail_bound = 0.0;  // only z^0 can contribute
  } else if (spec.extra.m && n_max >= spec.power() * *spec.extra.m) {
    result.tail_bound = 0.0;  // polynomial family truncated past its degree
  } else if (prev_nonzero > 0.0 && last_nonzero > 0.0) {
    double ratio = last_nonzero / prev_nonzero;
    if (ratio < 1.0) {
      result.tail_bound = std::abs(spec.prefactor.value()) * last_nonzero * ratio / (1.0 - ratio);
    }
  }
  return result;
}

template <class F>
EvalResult evaluate_family_adaptive(const TransformSpec<F>& spec, const F& z,
                                    double tail_target, long n_cap) {
  if constexpr (std::is_same_v<F, Rational>) {
    if (n_cap > kExactSeriesCap) n_cap = kExactSeriesCap;
  }
  long n = 32;
  EvalResult result;
  while (true) {
    if (n > n_cap) n = n_cap;
    result = evaluate_family(spec, z, n);
    if (result.tail_bound && *result.tail_bound < tail_target) return result;
    if (n >= n_cap) return result;
    n *= 2;
  }
}

}  // namespace hyppow
