#pragma once

#include <string>
#include <vector>

#include "families.hpp"

namespace hyppow {

enum class Method { Recurrence, CauchyBinary, CauchyTripleLoop };

const char* method_token(Method m);
std::optional<Method> parse_method(const std::string& token);

struct BenchResult {
  Method method;
  long n = 0;
  double wall_seconds = 0.0;
  std::string backend;
};

/// Times coefficient generation per method at each N. All requested
/// methods are generated once and cross-checked for equality first;
/// disagreement raises Error(CrossCheckFail) and no timings are produced.
/// `inject_fault` corrupts one recurrence term before the cross-check and
/// exists to prove that the guard trips (see the hidden CLI hook).
template <class F>
std::vector<BenchResult> run_bench(const TransformSpec<F>& spec,
                                   const std::vector<long>& n_values,
                                   const std::vector<Method>& methods,
                                   bool inject_fault = false);

}  // namespace hyppow
