#include "bench.hpp"

#include <chrono>
#include <cmath>
#include <functional>

namespace hyppow {

const char* method_token(Method m) {
  switch (m) {
    case Method::Recurrence: return "recurrence";
    case Method::CauchyBinary: return "cauchy-binary";
    case Method::CauchyTripleLoop: return "cauchy-triple-loop";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& token) {
  if (token == "recurrence") return Method::Recurrence;
  if (token == "cauchy-binary") return Method::CauchyBinary;
  if (token == "cauchy-triple-loop") return Method::CauchyTripleLoop;
  return std::nullopt;
}

namespace {

double rel_distance(const Rational& x, const Rational& y) {
  if (x == y) return 0.0;
  double scale = std::max(1.0, std::abs(y.to_double()));
  return std::abs((x - y).to_double()) / scale;
}

double rel_distance(const Cplx& x, const Cplx& y) {
  double scale = std::max(1.0, y.abs());
  return std::abs(x.v - y.v) / scale;
}

template <class F>
bool agrees(const CoeffSeq<F>& got, const CoeffSeq<F>& want, long n, long* bad_index,
            double* bad_rel) {
  constexpr bool exact = std::is_same_v<F, Rational>;
  for (long i = 0; i <= n; ++i) {
    const F& g = got.terms[static_cast<size_t>(i)];
    const F& w = want.terms[static_cast<size_t>(i)];
    double rel = rel_distance(g, w);
    bool ok = exact ? g == w : rel <= 1e-9;
    if (!ok) {
      *bad_index = i;
      *bad_rel = rel;
      return false;
    }
  }
  return true;
}

// Wall time of one invocation; fast paths are repeated until the total
// elapsed time is long enough to trust the clock.
double time_call(const std::function<void()>& fn) {
  using clock = std::chrono::steady_clock;
  constexpr double kMinSeconds = 0.02;
  constexpr int kMaxReps = 10000;
  int reps = 0;
  auto begin = clock::now();
  double elapsed = 0.0;
  do {
    fn();
    ++reps;
    elapsed = std::chrono::duration<double>(clock::now() - begin).count();
  } while (elapsed < kMinSeconds && reps < kMaxReps);
  return elapsed / reps;
}

}  // namespace

template <class F>
std::vector<BenchResult> run_bench(const TransformSpec<F>& spec,
                                   const std::vector<long>& n_values,
                                   const std::vector<Method>& methods,
                                   bool inject_fault) {
  if (methods.empty() || n_values.empty()) {
    raise(ErrorCode::InvalidArgument, "run_bench: need at least one method and one N");
  }
  for (Method m : methods) {
    if (m == Method::CauchyTripleLoop && spec.kind != SeriesKind::Cube) {
      raise(ErrorCode::InvalidArgument,
            "run_bench: the triple-loop oracle only applies to cube series");
    }
  }

  auto generate = [&spec](Method m, long n) -> CoeffSeq<F> {
    switch (m) {
      case Method::Recurrence:
        return family_coeffs(spec, n).seq;
      case Method::CauchyBinary:
        return family_oracle(spec, n);
      case Method::CauchyTripleLoop:
        return cauchy_cube_triple_loop(spec.triple, n);
    }
    raise(ErrorCode::InvalidArgument, "run_bench: unknown method");
  };

  std::vector<BenchResult> results;
  for (long n : n_values) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "run_bench: N must be >= 1");
    // Correctness gate before any timing: every method must produce the
    // same coefficients (exactly under rationals, to 1e-9 relative in
    // floats, matching the recurrence-vs-oracle contract).
    std::vector<CoeffSeq<F>> outputs;
    outputs.reserve(methods.size());
    for (Method m : methods) outputs.push_back(generate(m, n));
    if (inject_fault && !outputs.empty()) {
      outputs.front().terms[static_cast<size_t>(n / 2)] += F::one();
    }
    for (size_t i = 1; i < outputs.size(); ++i) {
      long bad_index = -1;
      double bad_rel = 0.0;
      if (!agrees(outputs[i], outputs[0], n, &bad_index, &bad_rel)) {
        raise(ErrorCode::CrossCheckFail,
              std::string("run_bench: ") + method_token(methods[i]) + " and " +
                  method_token(methods[0]) + " disagree at index " +
                  std::to_string(bad_index) + " (rel " + std::to_string(bad_rel) +
                  "); timings withheld");
      }
    }
    if (inject_fault && methods.size() < 2) {
      raise(ErrorCode::CrossCheckFail, "run_bench: injected fault with no second method");
    }
    for (Method m : methods) {
      BenchResult result;
      result.method = m;
      result.n = n;
      result.backend = F::backend_name();
      result.wall_seconds = time_call([&] { generate(m, n); });
      results.push_back(result);
    }
  }
  return results;
}

template std::vector<BenchResult> run_bench<Rational>(const TransformSpec<Rational>&,
                                                      const std::vector<long>&,
                                                      const std::vector<Method>&, bool);
template std::vector<BenchResult> run_bench<Cplx>(const TransformSpec<Cplx>&,
                                                  const std::vector<long>&,
                                                  const std::vector<Method>&, bool);

}  // namespace hyppow
