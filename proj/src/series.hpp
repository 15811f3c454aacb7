#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "scalar.hpp"

namespace hyppow {

enum class Provenance { Oracle, Recurrence, ClosedForm };

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Oracle: return "oracle";
    case Provenance::Recurrence: return "recurrence";
    case Provenance::ClosedForm: return "closed-form";
  }
  return "?";
}

/// A finite prefix [t_0 .. t_N] of a Maclaurin coefficient sequence.
/// `fallback_indices` lists positions a recurrence filled from its oracle
/// because a coefficient denominator vanished there.
template <class F>
struct CoeffSeq {
  std::vector<F> terms;
  Provenance provenance = Provenance::Oracle;
  std::string label;
  std::vector<long> fallback_indices;

  long max_index() const { return static_cast<long>(terms.size()) - 1; }
};

inline bool any_overflow(const CoeffSeq<Rational>&) { return false; }
inline bool any_overflow(const CoeffSeq<Cplx>& s) {
  for (const auto& t : s.terms) {
    if (t.overflowed) return true;
  }
  return false;
}

/// Exact sequences are capped to keep integer growth at desk scale.
inline constexpr long kExactSeriesCap = 10000;

template <class F>
void check_series_cap(long n_max) {
  if constexpr (std::is_same_v<F, Rational>) {
    if (n_max > kExactSeriesCap) {
      raise(ErrorCode::SeriesCap, "exact-rational sequences are capped at N = 10000");
    }
  }
}

/// n-th Maclaurin coefficient of F(a,b;c;z): (a)_n (b)_n / ((c)_n n!).
template <class F>
F f_coeff(const ParameterTriple<F>& p, long n) {
  F num = pochhammer(p.a, n) * pochhammer(p.b, n);
  F den = pochhammer(p.c, n) * pochhammer(F::one(), n);
  return num / den;
}

/// Coefficients 0..N of F(a,b;c;z) by running term ratios; O(N).
template <class F>
std::vector<F> f_coeffs(const ParameterTriple<F>& p, long n_max) {
  check_series_cap<F>(n_max);
  std::vector<F> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  F term = F::one();
  out.push_back(term);
  for (long k = 0; k < n_max; ++k) {
    F fk = F::from_long(k);
    term = term * (p.a + fk) * (p.b + fk) / ((p.c + fk) * F::from_long(k + 1));
    out.push_back(term);
  }
  return out;
}

/// n-th coefficient of a generalized pFq series:
/// prod (u_i)_n / (prod (l_j)_n * n!). Lower parameters are guarded.
template <class F>
F pfq_coeff(const std::vector<F>& upper, const std::vector<F>& lower, long n) {
  for (const F& l : lower) {
    if (violates_lower_guard(l)) {
      raise(ErrorCode::ParameterGuard,
            "pfq_coeff: lower parameter is zero or a negative integer");
    }
  }
  F num = F::one();
  for (const F& u : upper) num = num * pochhammer(u, n);
  F den = pochhammer(F::one(), n);
  for (const F& l : lower) den = den * pochhammer(l, n);
  return num / den;
}

/// n-th coefficient of Kummer's M(a,c;x): (a)_n / ((c)_n n!).
template <class F>
F kummer_coeff(const F& a, const F& c, long n) {
  if (violates_lower_guard(c)) {
    raise(ErrorCode::ParameterGuard,
          "kummer_coeff: c is zero or a negative integer");
  }
  return pochhammer(a, n) / (pochhammer(c, n) * pochhammer(F::one(), n));
}

template <class F>
std::vector<F> kummer_coeffs(const F& a, const F& c, long n_max) {
  check_series_cap<F>(n_max);
  if (violates_lower_guard(c)) {
    raise(ErrorCode::ParameterGuard,
          "kummer_coeffs: c is zero or a negative integer");
  }
  std::vector<F> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  F term = F::one();
  out.push_back(term);
  for (long k = 0; k < n_max; ++k) {
    F fk = F::from_long(k);
    term = term * (a + fk) / ((c + fk) * F::from_long(k + 1));
    out.push_back(term);
  }
  return out;
}

/// Binary convolution c_n = sum_k s_k t_{n-k}, the Cauchy product of two
/// coefficient prefixes. Requires at least N+1 terms on each side.
template <class F>
CoeffSeq<F> cauchy_product_oracle(const CoeffSeq<F>& s, const CoeffSeq<F>& t, long n_max) {
  check_series_cap<F>(n_max);
  if (s.max_index() < n_max || t.max_index() < n_max) {
    raise(ErrorCode::LengthMismatch,
          "cauchy_product_oracle: factors shorter than requested N");
  }
  CoeffSeq<F> out;
  out.provenance = Provenance::Oracle;
  out.label = "product(" + s.label + ", " + t.label + ")";
  out.terms.reserve(static_cast<size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    F acc = F::zero();
    for (long k = 0; k <= n; ++k) {
      acc = acc + s.terms[static_cast<size_t>(k)] * t.terms[static_cast<size_t>(n - k)];
    }
    out.terms.push_back(acc);
  }
  return out;
}

/// Ground-truth coefficients of F^2 by direct convolution of the series
/// definition; O(N^2).
template <class F>
CoeffSeq<F> cauchy_square_oracle(const ParameterTriple<F>& p, long n_max) {
  check_series_cap<F>(n_max);
  std::vector<F> f = f_coeffs(p, n_max);
  CoeffSeq<F> out;
  out.provenance = Provenance::Oracle;
  out.label = "F^2 oracle";
  out.terms.reserve(static_cast<size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    F acc = F::zero();
    for (long k = 0; k <= n; ++k) {
      acc = acc + f[static_cast<size_t>(k)] * f[static_cast<size_t>(n - k)];
    }
    out.terms.push_back(acc);
  }
  return out;
}

/// Ground-truth coefficients of F^3 as two nested binary convolutions;
/// O(N^2) overall.
template <class F>
CoeffSeq<F> cauchy_cube_oracle(const ParameterTriple<F>& p, long n_max) {
  check_series_cap<F>(n_max);
  CoeffSeq<F> sq = cauchy_square_oracle(p, n_max);
  CoeffSeq<F> f;
  f.terms = f_coeffs(p, n_max);
  f.label = "F";
  CoeffSeq<F> out = cauchy_product_oracle(sq, f, n_max);
  out.label = "F^3 oracle";
  return out;
}

/// Literal triple-sum form of the cube; O(N^3). Kept for the benchmark
/// surface, which quantifies what the nested form saves.
template <class F>
CoeffSeq<F> cauchy_cube_triple_loop(const ParameterTriple<F>& p, long n_max) {
  check_series_cap<F>(n_max);
  std::vector<F> f = f_coeffs(p, n_max);
  CoeffSeq<F> out;
  out.provenance = Provenance::Oracle;
  out.label = "F^3 oracle (triple loop)";
  out.terms.reserve(static_cast<size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    F acc = F::zero();
    for (long i = 0; i <= n; ++i) {
      for (long j = 0; j <= n - i; ++j) {
        acc = acc + f[static_cast<size_t>(i)] * f[static_cast<size_t>(j)] *
                        f[static_cast<size_t>(n - i - j)];
      }
    }
    out.terms.push_back(acc);
  }
  return out;
}

}  // namespace hyppow
