#include "hyppow/hyppow.h"

#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "bench.hpp"
#include "identities.hpp"

using namespace hyppow;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hyppow_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HYPPOW_E_INVALID;
    case ErrorCode::ParameterGuard: return HYPPOW_E_PARAM_GUARD;
    case ErrorCode::ZeroDenominator: return HYPPOW_E_ZERO_DENOM;
    case ErrorCode::Domain: return HYPPOW_E_DOMAIN;
    case ErrorCode::Pole: return HYPPOW_E_POLE;
    case ErrorCode::Overflow: return HYPPOW_E_OVERFLOW;
    case ErrorCode::LengthMismatch: return HYPPOW_E_LENGTH;
    case ErrorCode::UnknownFamily: return HYPPOW_E_UNKNOWN_FAMILY;
    case ErrorCode::MissingParameter: return HYPPOW_E_MISSING_PARAM;
    case ErrorCode::VerifyFail: return HYPPOW_E_VERIFY_FAIL;
    case ErrorCode::CrossCheckFail: return HYPPOW_E_CROSSCHECK;
    case ErrorCode::SeriesCap: return HYPPOW_E_SERIES_CAP;
  }
  return HYPPOW_E_INVALID;
}

template <class Fn>
hyppow_status wrap(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HYPPOW_E_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HYPPOW_E_INVALID;
  }
}

Rational parse_rational_or_throw(const char* text, const char* what) {
  if (!text) raise(ErrorCode::InvalidArgument, std::string(what) + ": null");
  auto value = Rational::parse(text);
  if (!value) {
    raise(ErrorCode::InvalidArgument,
          std::string(what) + ": cannot parse '" + text + "' as a rational");
  }
  return *value;
}

Cplx parse_cplx_or_throw(const char* text, const char* what) {
  if (!text) raise(ErrorCode::InvalidArgument, std::string(what) + ": null");
  auto value = Cplx::parse(text);
  if (!value) {
    raise(ErrorCode::InvalidArgument,
          std::string(what) + ": cannot parse '" + text + "' as a complex value");
  }
  return *value;
}

template <class F>
F parse_scalar(const char* text, const char* what);
template <>
Rational parse_scalar<Rational>(const char* text, const char* what) {
  return parse_rational_or_throw(text, what);
}
template <>
Cplx parse_scalar<Cplx>(const char* text, const char* what) {
  return parse_cplx_or_throw(text, what);
}

template <class F>
FamilyParams<F> parse_params(const char* const* keys, const char* const* values,
                             size_t count) {
  FamilyParams<F> params;
  for (size_t i = 0; i < count; ++i) {
    if (!keys[i] || !values[i]) raise(ErrorCode::InvalidArgument, "null parameter entry");
    std::string key = keys[i];
    if (key == "m") {
      char* end = nullptr;
      long m = std::strtol(values[i], &end, 10);
      if (!end || *end != '\0') {
        raise(ErrorCode::InvalidArgument, "m must be a plain integer");
      }
      params.m = m;
    } else if (key == "alpha") {
      params.alpha = parse_scalar<F>(values[i], "alpha");
    } else if (key == "beta") {
      params.beta = parse_scalar<F>(values[i], "beta");
    } else if (key == "a") {
      params.a = parse_scalar<F>(values[i], "a");
    } else if (key == "b") {
      params.b = parse_scalar<F>(values[i], "b");
    } else if (key == "c") {
      params.c = parse_scalar<F>(values[i], "c");
    } else {
      raise(ErrorCode::InvalidArgument, "unknown family parameter key: " + key);
    }
  }
  return params;
}

Family parse_family_or_throw(const char* token) {
  if (!token) raise(ErrorCode::InvalidArgument, "family: null");
  auto family = parse_family(std::string(token));
  if (!family) raise(ErrorCode::UnknownFamily, std::string("unknown family: ") + token);
  return *family;
}

FallbackMode to_mode(hyppow_zero_denom_policy policy) {
  return policy == HYPPOW_ZERO_DENOM_ERROR ? FallbackMode::Error
                                           : FallbackMode::OracleSubstitute;
}

}  // namespace

struct hyppow_seq {
  std::variant<FamilySeries<Rational>, FamilySeries<Cplx>> data;

  long length() const {
    return std::visit([](const auto& fs) { return static_cast<long>(fs.seq.terms.size()); },
                      data);
  }
};

namespace {

template <class F>
hyppow_seq* make_seq(const char* family_token_str, const char* const* keys,
                     const char* const* values, size_t count, long n_max,
                     hyppow_zero_denom_policy policy) {
  Family family = parse_family_or_throw(family_token_str);
  FamilyParams<F> params = parse_params<F>(keys, values, count);
  TransformSpec<F> spec = catalog_lookup(family, params);
  auto fs = family_coeffs(spec, n_max, to_mode(policy));
  return new hyppow_seq{std::move(fs)};
}

const hyppow_seq& deref(const hyppow_seq* seq) {
  if (!seq) raise(ErrorCode::InvalidArgument, "null sequence handle");
  return *seq;
}

template <class Fs>
void check_index(const Fs& fs, long index) {
  if (index < 0 || index >= static_cast<long>(fs.seq.terms.size())) {
    raise(ErrorCode::InvalidArgument, "sequence index out of range");
  }
}

}  // namespace

extern "C" {

hyppow_status hyppow_power_coeffs(const char* a, const char* b, const char* c,
                                  int power, long n_max, hyppow_backend backend,
                                  hyppow_zero_denom_policy policy, hyppow_seq** out) {
  return wrap([&]() -> hyppow_status {
    if (!out) raise(ErrorCode::InvalidArgument, "null output pointer");
    if (power != 2 && power != 3) {
      raise(ErrorCode::InvalidArgument, "power must be 2 or 3");
    }
    if (n_max < 0) raise(ErrorCode::InvalidArgument, "n_max must be >= 0");
    const char* family = power == 2 ? "f2" : "f3";
    const char* keys[3] = {"a", "b", "c"};
    const char* values[3] = {a, b, c};
    *out = backend == HYPPOW_BACKEND_RATIONAL
               ? make_seq<Rational>(family, keys, values, 3, n_max, policy)
               : make_seq<Cplx>(family, keys, values, 3, n_max, policy);
    return HYPPOW_OK;
  });
}

hyppow_status hyppow_family_coeffs(const char* family, const char* const* param_keys,
                                   const char* const* param_values, size_t n_params,
                                   long n_max, hyppow_backend backend,
                                   hyppow_zero_denom_policy policy, hyppow_seq** out) {
  return wrap([&]() -> hyppow_status {
    if (!out) raise(ErrorCode::InvalidArgument, "null output pointer");
    if (n_max < 0) raise(ErrorCode::InvalidArgument, "n_max must be >= 0");
    *out = backend == HYPPOW_BACKEND_RATIONAL
               ? make_seq<Rational>(family, param_keys, param_values, n_params, n_max, policy)
               : make_seq<Cplx>(family, param_keys, param_values, n_params, n_max, policy);
    return HYPPOW_OK;
  });
}

long hyppow_seq_length(const hyppow_seq* seq) { return seq ? seq->length() : 0; }

long hyppow_seq_exponent(const hyppow_seq* seq, long index) {
  if (!seq) return 0;
  return std::visit([index](const auto& fs) { return fs.spec.exponent(index); }, seq->data);
}

hyppow_status hyppow_seq_exact(const hyppow_seq* seq, long index, char** out) {
  return wrap([&]() -> hyppow_status {
    if (!out) raise(ErrorCode::InvalidArgument, "null output pointer");
    const auto& handle = deref(seq);
    const auto* fs = std::get_if<FamilySeries<Rational>>(&handle.data);
    if (!fs) {
      raise(ErrorCode::InvalidArgument, "exact values exist only on the rational backend");
    }
    check_index(*fs, index);
    *out = dup_string(fs->seq.terms[static_cast<size_t>(index)].str());
    return HYPPOW_OK;
  });
}

hyppow_status hyppow_seq_decimal(const hyppow_seq* seq, long index, int sig_digits,
                                 char** out) {
  return wrap([&]() -> hyppow_status {
    if (!out) raise(ErrorCode::InvalidArgument, "null output pointer");
    const auto& handle = deref(seq);
    std::visit(
        [&](const auto& fs) {
          check_index(fs, index);
          *out = dup_string(fs.seq.terms[static_cast<size_t>(index)].decimal(sig_digits));
        },
        handle.data);
    return HYPPOW_OK;
  });
}

hyppow_status hyppow_seq_float(const hyppow_seq* seq, long index, double* re, double* im) {
  return wrap([&]() -> hyppow_status {
    if (!re || !im) raise(ErrorCode::InvalidArgument, "null output pointer");
    const auto& handle = deref(seq);
    std::visit(
        [&](const auto& fs) {
          check_index(fs, index);
          auto z = to_complex(fs.seq.terms[static_cast<size_t>(index)]);
          *re = z.real();
          *im = z.imag();
        },
        handle.data);
    return HYPPOW_OK;
  });
}

hyppow_status hyppow_seq_prefactor(const hyppow_seq* seq, char** coeff, int* pi_power) {
  return wrap([&]() -> hyppow_status {
    if (!coeff || !pi_power) raise(ErrorCode::InvalidArgument, "null output pointer");
    const auto& handle = deref(seq);
    std::visit(
        [&](const auto& fs) {
          *coeff = dup_string(fs.spec.prefactor.coeff.str());
          *pi_power = fs.spec.prefactor.pi_power;
        },
        handle.data);
    return HYPPOW_OK;
  });
}

const char* hyppow_seq_provenance(const hyppow_seq* seq) {
  if (!seq) return "?";
  return std::visit([](const auto& fs) { return provenance_name(fs.seq.provenance); },
                    seq->data);
}

int hyppow_seq_backend(const hyppow_seq* seq) {
  if (!seq) return -1;
  return std::holds_alternative<FamilySeries<Rational>>(seq->data)
             ? HYPPOW_BACKEND_RATIONAL
             : HYPPOW_BACKEND_COMPLEX;
}

long hyppow_seq_fallback_count(const hyppow_seq* seq) {
  if (!seq) return 0;
  return std::visit(
      [](const auto& fs) { return static_cast<long>(fs.seq.fallback_indices.size()); },
      seq->data);
}

long hyppow_seq_fallback_index(const hyppow_seq* seq, long i) {
  if (!seq) return -1;
  return std::visit(
      [i](const auto& fs) -> long {
        if (i < 0 || i >= static_cast<long>(fs.seq.fallback_indices.size())) return -1;
        return fs.seq.fallback_indices[static_cast<size_t>(i)];
      },
      seq->data);
}

void hyppow_seq_free(hyppow_seq* seq) { delete seq; }

hyppow_status hyppow_family_eval(const char* family, const char* const* param_keys,
                                 const char* const* param_values, size_t n_params,
                                 const char* z, double tail_target, long term_cap,
                                 hyppow_backend backend, double* value_re,
                                 double* value_im, double* tail_bound,
                                 long* terms_used) {
  return wrap([&]() -> hyppow_status {
    if (!value_re || !value_im || !tail_bound || !terms_used) {
      raise(ErrorCode::InvalidArgument, "null output pointer");
    }
    if (term_cap <= 0) term_cap = 100000;
    if (!(tail_target > 0)) tail_target = 1e-12;
    Family fam = parse_family_or_throw(family);
    EvalResult result;
    if (backend == HYPPOW_BACKEND_RATIONAL) {
      auto params = parse_params<Rational>(param_keys, param_values, n_params);
      auto spec = catalog_lookup(fam, params);
      result = evaluate_family_adaptive(spec, parse_rational_or_throw(z, "z"),
                                        tail_target, term_cap);
    } else {
      auto params = parse_params<Cplx>(param_keys, param_values, n_params);
      auto spec = catalog_lookup(fam, params);
      result = evaluate_family_adaptive(spec, parse_cplx_or_throw(z, "z"), tail_target,
                                        term_cap);
    }
    *value_re = result.value.real();
    *value_im = result.value.imag();
    *tail_bound = result.tail_bound ? *result.tail_bound : -1.0;
    *terms_used = result.terms_used;
    return HYPPOW_OK;
  });
}

hyppow_status hyppow_verify(const char* suite, const char* const* param_keys,
                            const char* const* param_values, size_t n_params,
                            long n_max, int jobs, char** bundle_json) {
  return wrap([&]() -> hyppow_status {
    if (!bundle_json) raise(ErrorCode::InvalidArgument, "null output pointer");
    if (!suite || !is_suite_name(suite)) {
      raise(ErrorCode::InvalidArgument,
            std::string("unknown suite: ") + (suite ? suite : "(null)"));
    }
    auto params = parse_params<Rational>(param_keys, param_values, n_params);
    SuiteOverrides overrides;
    overrides.a = params.a;
    overrides.b = params.b;
    overrides.c = params.c;
    overrides.alpha = params.alpha;
    overrides.beta = params.beta;
    overrides.m = params.m;
    if (n_max > 0) overrides.n_max = n_max;
    auto reports = run_suite(suite, overrides, jobs);
    auto bundle = hyppow::bundle_json(suite, reports);
    *bundle_json = dup_string(bundle.dump(2));
    for (const auto& rep : reports) {
      if (!rep.passed()) {
        g_last_error = "suite '" + std::string(suite) + "' has non-passing reports";
        return HYPPOW_E_VERIFY_FAIL;
      }
    }
    return HYPPOW_OK;
  });
}

hyppow_status hyppow_bench(const char* family, const char* const* param_keys,
                           const char* const* param_values, size_t n_params,
                           const long* n_values, size_t n_count,
                           const hyppow_method* methods, size_t m_count,
                           hyppow_backend backend, int inject_fault,
                           char** results_json) {
  return wrap([&]() -> hyppow_status {
    if (!results_json || !n_values || !methods) {
      raise(ErrorCode::InvalidArgument, "null pointer argument");
    }
    std::vector<long> ns(n_values, n_values + n_count);
    std::vector<Method> ms;
    ms.reserve(m_count);
    for (size_t i = 0; i < m_count; ++i) {
      switch (methods[i]) {
        case HYPPOW_METHOD_RECURRENCE: ms.push_back(Method::Recurrence); break;
        case HYPPOW_METHOD_CAUCHY_BINARY: ms.push_back(Method::CauchyBinary); break;
        case HYPPOW_METHOD_CAUCHY_TRIPLE_LOOP: ms.push_back(Method::CauchyTripleLoop); break;
        default: raise(ErrorCode::InvalidArgument, "unknown method id");
      }
    }
    std::vector<BenchResult> results;
    if (backend == HYPPOW_BACKEND_RATIONAL) {
      auto params = parse_params<Rational>(param_keys, param_values, n_params);
      auto spec = catalog_lookup(parse_family_or_throw(family), params);
      results = run_bench(spec, ns, ms, inject_fault != 0);
    } else {
      auto params = parse_params<Cplx>(param_keys, param_values, n_params);
      auto spec = catalog_lookup(parse_family_or_throw(family), params);
      results = run_bench(spec, ns, ms, inject_fault != 0);
    }
    nlohmann::json items = nlohmann::json::array();
    for (const auto& r : results) {
      items.push_back({{"method", method_token(r.method)},
                       {"n", r.n},
                       {"wall_seconds", r.wall_seconds},
                       {"backend", r.backend}});
    }
    *results_json = dup_string(items.dump(2));
    return HYPPOW_OK;
  });
}

int hyppow_is_rational(const char* text) {
  if (!text) return 0;
  return Rational::parse(text).has_value() ? 1 : 0;
}

void hyppow_string_free(char* s) { std::free(s); }

const char* hyppow_last_error(void) { return g_last_error.c_str(); }

const char* hyppow_status_name(hyppow_status status) {
  switch (status) {
    case HYPPOW_OK: return "ok";
    case HYPPOW_E_INVALID: return "invalid-argument";
    case HYPPOW_E_PARAM_GUARD: return "parameter-guard";
    case HYPPOW_E_ZERO_DENOM: return "zero-denominator";
    case HYPPOW_E_DOMAIN: return "domain";
    case HYPPOW_E_POLE: return "pole";
    case HYPPOW_E_OVERFLOW: return "overflow";
    case HYPPOW_E_LENGTH: return "length-mismatch";
    case HYPPOW_E_UNKNOWN_FAMILY: return "unknown-family";
    case HYPPOW_E_MISSING_PARAM: return "missing-parameter";
    case HYPPOW_E_VERIFY_FAIL: return "verify-fail";
    case HYPPOW_E_CROSSCHECK: return "crosscheck-fail";
    case HYPPOW_E_SERIES_CAP: return "series-cap";
    case HYPPOW_E_NOMEM: return "out-of-memory";
  }
  return "?";
}

const char* hyppow_version(void) { return "1.0.0"; }

}  // extern "C"
