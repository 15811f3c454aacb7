#include "families.hpp"

#include <unordered_map>

namespace hyppow {

namespace {

const std::unordered_map<std::string, Family>& token_map() {
  static const std::unordered_map<std::string, Family> map = {
      {"f2", Family::FSquared},
      {"f3", Family::FCubed},
      {"zero-balanced2", Family::ZeroBalancedSquared},
      {"k2", Family::K2},
      {"e2", Family::E2},
      {"k3", Family::K3},
      {"e3", Family::E3},
      {"chebyshev2", Family::Chebyshev2},
      {"chebyshev3", Family::Chebyshev3},
      {"legendre2", Family::Legendre2},
      {"legendre3", Family::Legendre3},
      {"gegenbauer2", Family::Gegenbauer2},
      {"gegenbauer3", Family::Gegenbauer3},
      {"jacobi2", Family::Jacobi2},
      {"jacobi3", Family::Jacobi3},
      {"sin2", Family::SinAlphaArcsin2},
      {"sin3", Family::SinAlphaArcsin3},
      {"cos2", Family::CosAlphaArcsin2},
      {"cos3", Family::CosAlphaArcsin3},
      {"contiguous2", Family::ContiguousProduct2},
      {"contiguous3", Family::ContiguousProduct3},
      {"kummer-product", Family::KummerProduct},
  };
  return map;
}

}  // namespace

std::optional<Family> parse_family(const std::string& token) {
  auto it = token_map().find(token);
  if (it == token_map().end()) return std::nullopt;
  return it->second;
}

const char* family_token(Family f) {
  for (const auto& [token, fam] : token_map()) {
    if (fam == f) return token.c_str();
  }
  return "?";
}

namespace {

using R = Rational;

R rq(long n) { return R::from_long(n); }

RatioFn<R> over(std::function<R(R)> num, std::function<R(R)> den) {
  return [num = std::move(num), den = std::move(den)](long n) {
    R fn = rq(n);
    return std::make_pair(num(fn), den(fn));
  };
}

}  // namespace

std::optional<PrintedRecurrence> printed_recurrence(Family family,
                                                    const FamilyParams<R>& params) {
  PrintedRecurrence rec;
  switch (family) {
    case Family::K2: {
      rec.order = 2;
      rec.initial = {rq(1), R::from_ratio(1, 2)};
      rec.coeff_fns = {
          over([](R n) { return n * (n * (rq(2) * n + rq(3)) + rq(2)) + R::from_ratio(1, 2); },
               [](R n) { R d = n + rq(1); return d * d * d; }),
          over([](R n) { return -(n * n * n); },
               [](R n) { R d = n + rq(1); return d * d * d; }),
      };
      return rec;
    }
    case Family::E2: {
      rec.order = 2;
      rec.initial = {rq(1), R::from_ratio(-1, 2)};
      rec.coeff_fns = {
          over([](R n) { return rq(4) * n * n * n - rq(2) * n - rq(1); },
               [](R n) { R d = n + rq(1); return rq(2) * d * d * d; }),
          over([](R n) { return -((n - rq(2)) * (n - rq(1)) * n); },
               [](R n) { R d = n + rq(1); return d * d * d; }),
      };
      return rec;
    }
    case Family::ZeroBalancedSquared: {
      if (!params.a || !params.b) return std::nullopt;
      R a = *params.a, b = *params.b;
      rec.order = 2;
      rec.initial = {rq(1), rq(2) * a * b / (a + b)};
      auto den = [a, b](R n) { return (n + rq(1)) * (a + b + n) * (rq(2) * (a + b) + n - rq(1)); };
      rec.coeff_fns = {
          over([a, b](R n) {
                 return (rq(2) * a + rq(2) * b + rq(2) * n - rq(1)) *
                        (n * n + (rq(2) * a + rq(2) * b - rq(1)) * n + rq(2) * a * b);
               },
               den),
          over([a, b](R n) {
                 return -((rq(2) * a + n - rq(1)) * (rq(2) * b + n - rq(1)) * (a + b + n - rq(1)));
               },
               den),
      };
      return rec;
    }
    case Family::Chebyshev2: {
      if (!params.m) return std::nullopt;
      R m = rq(*params.m);
      rec.order = 2;
      rec.initial = {rq(1), rq(-4) * m * m};
      rec.coeff_fns = {
          over([m](R n) { return rq(-8) * m * m + rq(4) * n * n - rq(3) * n + rq(1); },
               [](R n) { return (rq(2) * n + rq(1)) * (n + rq(1)); }),
          over([m](R n) {
                 return -(rq(2) * (n - rq(1)) * (rq(-2) * m + n - rq(1)) * (rq(2) * m + n - rq(1)));
               },
               [](R n) { return n * (n + rq(1)) * (rq(2) * n + rq(1)); }),
      };
      return rec;
    }
    case Family::Legendre2: {
      if (!params.m) return std::nullopt;
      R m = rq(*params.m);
      rec.order = 2;
      rec.initial = {rq(1), rq(-2) * m * (m + rq(1))};
      rec.corrected = true;
      rec.note =
          "u_{n-1} coefficient taken as +((2m+1)^2 n - n^3)/(n+1)^3; the "
          "commonly printed specialized form carries the opposite sign, "
          "which contradicts the direct expansion of P_m(1-2z)^2.";
      rec.coeff_fns = {
          over([m](R n) {
                 return (rq(2) * n + rq(1)) * (rq(-2) * m * (m + rq(1)) + n * n + n);
               },
               [](R n) { R d = n + rq(1); return d * d * d; }),
          over([m](R n) {
                 R p = rq(2) * m + rq(1);
                 return p * p * n - n * n * n;
               },
               [](R n) { R d = n + rq(1); return d * d * d; }),
      };
      return rec;
    }
    case Family::Gegenbauer2: {
      if (!params.m || !params.alpha) return std::nullopt;
      R m = rq(*params.m), al = *params.alpha;
      rec.order = 2;
      rec.initial = {rq(1), rq(-4) * m * (rq(2) * al + m) / (rq(2) * al + rq(1))};
      auto den = [al](R n) {
        return (n + rq(1)) * (rq(2) * al + n) * (rq(2) * al + rq(2) * n + rq(1));
      };
      rec.coeff_fns = {
          over([m, al](R n) {
                 return n * (rq(2) * al * (rq(8) * al - rq(3)) - rq(8) * m * m -
                             rq(16) * al * m + rq(1)) -
                        rq(8) * al * m * (rq(2) * al + m) + rq(4) * n * n * n +
                        rq(3) * (rq(6) * al - rq(1)) * n * n;
               },
               den),
          over([m, al](R n) {
                 return -(rq(2) * (rq(-2) * m + n - rq(1)) * (rq(2) * al + n - rq(1)) *
                          (rq(4) * al + rq(2) * m + n - rq(1)));
               },
               den),
      };
      return rec;
    }
    case Family::Jacobi2: {
      if (!params.m || !params.alpha || !params.beta) return std::nullopt;
      R m = rq(*params.m), al = *params.alpha, be = *params.beta;
      rec.order = 2;
      rec.initial = {rq(1), rq(-2) * m * (m + al + be + rq(1)) / (al + rq(1))};
      auto den = [al](R n) {
        return (n + rq(1)) * (al + n + rq(1)) * (rq(2) * al + n + rq(1));
      };
      rec.coeff_fns = {
          over([m, al, be](R n) {
                 R t = rq(2) * al + rq(2) * n + rq(1);
                 return rq(-2) * m * m * t - rq(2) * m * (al + be + rq(1)) * t +
                        n * (rq(4) * al * (al + be + rq(1)) + be + rq(2) * n * n +
                             rq(3) * n * (rq(2) * al + be + rq(1)) + rq(1));
               },
               den),
          over([m, al, be](R n) {
                 return (rq(2) * m - n + rq(1)) * (al + be + n) *
                        (rq(2) * al + rq(2) * be + rq(2) * m + n + rq(1));
               },
               den),
      };
      return rec;
    }
    case Family::SinAlphaArcsin2: {
      if (!params.alpha) return std::nullopt;
      R al = *params.alpha;
      rec.order = 2;
      rec.initial = {rq(1), (rq(1) - al * al) / rq(3)};
      rec.coeff_fns = {
          over([al](R n) { return rq(-2) * al * al + rq(4) * n * n + rq(5) * n + rq(2); },
               [](R n) { return rq(2) * n * n + rq(7) * n + rq(6); }),
          over([al](R n) { return -(rq(2) * n * (n - al) * (al + n)); },
               [](R n) { return (n + rq(1)) * (n + rq(2)) * (rq(2) * n + rq(3)); }),
      };
      return rec;
    }
    case Family::CosAlphaArcsin2: {
      if (!params.alpha) return std::nullopt;
      R al = *params.alpha;
      rec.order = 2;
      rec.initial = {rq(1), -(al * al)};
      rec.coeff_fns = {
          over([al](R n) { return rq(-2) * al * al + rq(4) * n * n - rq(3) * n + rq(1); },
               [](R n) { return rq(2) * n * n + rq(3) * n + rq(1); }),
          over([al](R n) {
                 return -(rq(2) * (n - rq(1)) * (n - rq(1) - al) * (al + n - rq(1)));
               },
               [](R n) { return n * (n + rq(1)) * (rq(2) * n + rq(1)); }),
      };
      return rec;
    }
    case Family::K3: {
      rec.order = 3;
      rec.start_index = 2;
      rec.initial = {rq(1), R::from_ratio(3, 4), R::from_ratio(39, 64)};
      auto den4 = [](R n) { R d = n + rq(1); return d * d * d * d; };
      rec.coeff_fns = {
          over([](R n) {
                 return rq(2) * n * (n + rq(1)) * (rq(6) * n * (n + rq(1)) + rq(7)) + rq(3);
               },
               [den4](R n) { return rq(4) * den4(n); }),
          over([](R n) {
                 R n2 = n * n;
                 return -(rq(48) * n2 * n2 + rq(32) * n2 + rq(1));
               },
               [den4](R n) { return rq(16) * den4(n); }),
          over([](R n) {
                 R t = rq(1) - rq(2) * n;
                 return t * t * t * t;
               },
               [den4](R n) { return rq(16) * den4(n); }),
      };
      return rec;
    }
    case Family::E3: {
      rec.order = 3;
      rec.start_index = 2;
      rec.initial = {rq(1), R::from_ratio(-3, 4), R::from_ratio(3, 64)};
      auto den4 = [](R n) { R d = n + rq(1); return d * d * d * d; };
      rec.coeff_fns = {
          over([](R n) {
                 return rq(2) * n * (rq(6) * n * n * n - rq(5) * n - rq(5)) - rq(3);
               },
               [den4](R n) { return rq(4) * den4(n); }),
          over([](R n) {
                 return -(rq(8) * n *
                              (rq(2) * n * (rq(3) * (n - rq(4)) * n + rq(13)) - rq(9)) +
                          rq(29));
               },
               [den4](R n) { return rq(16) * den4(n); }),
          over([](R n) {
                 return (rq(2) * n - rq(7)) * (rq(2) * n - rq(5)) * (rq(2) * n - rq(3)) *
                        (rq(2) * n - rq(1));
               },
               [den4](R n) { return rq(16) * den4(n); }),
      };
      return rec;
    }
    case Family::Chebyshev3: {
      if (!params.m) return std::nullopt;
      R m = rq(*params.m);
      R m2 = m * m, m4 = m2 * m2;
      rec.order = 3;
      rec.start_index = 2;
      rec.initial = {rq(1), rq(-6) * m2, rq(2) * (rq(7) * m4 - m2)};
      auto den = [](R n) {
        return n * (n + rq(1)) * (rq(2) * n - rq(1)) * (rq(2) * n + rq(1));
      };
      rec.coeff_fns = {
          over([m2](R n) { return rq(-20) * m2 + rq(6) * n * n - rq(9) * n + rq(5); },
               [](R n) { return rq(2) * n * n + rq(3) * n + rq(1); }),
          over([m2, m4](R n) {
                 return rq(-36) * m4 +
                        rq(20) * m2 * (n - rq(1)) * (rq(4) * n - rq(5)) -
                        rq(2) * (n - rq(1)) *
                            (rq(2) * n * (rq(3) * (n - rq(4)) * n + rq(17)) - rq(17));
               },
               den),
          over([m2, m4](R n) {
                 R t = n - rq(2);
                 return rq(4) * (rq(9) * m4 - rq(10) * m2 * t * t + t * t * t * t);
               },
               den),
      };
      return rec;
    }
    case Family::Legendre3: {
      if (!params.m) return std::nullopt;
      long ml = *params.m;
      R m = rq(ml);
      R s = m * (m + rq(1));
      rec.order = 3;
      rec.start_index = 2;
      rec.initial = {rq(1), rq(-3) * s,
                     R::from_ratio(3, 4) *
                         (rq(5) * m * m * m * m + rq(10) * m * m * m + rq(3) * m * m -
                          rq(2) * m)};
      rec.corrected = true;
      rec.note =
          "coefficient functions derived by substituting (-m, m+1, 1) into "
          "the general cube recurrence; the commonly printed specialized "
          "form (denominators n(n+1)(2n-1)(2n+1)) contradicts the direct "
          "expansion of P_m(1-2z)^3 already at m=1, n=2.";
      auto den4 = [](R n) { R d = n + rq(1); return d * d * d * d; };
      rec.coeff_fns = {
          over([s](R n) {
                 return n * (n + rq(1)) * (rq(3) * n * n + rq(3) * n + rq(1)) -
                        s * (rq(10) * n * n + rq(10) * n + rq(3));
               },
               den4),
          over([s, m](R n) {
                 R n2 = n * n;
                 return -(rq(3) * n2 * n2 - (rq(20) * s + rq(3)) * n2 +
                          s * (rq(3) * m + rq(1)) * (rq(3) * m + rq(2)));
               },
               den4),
          over([m](R n) {
                 return (n - rq(2) - rq(3) * m) * (n + rq(1) + rq(3) * m) *
                        (n - rq(1) - m) * (n + m);
               },
               den4),
      };
      return rec;
    }
    case Family::SinAlphaArcsin3: {
      if (!params.alpha) return std::nullopt;
      R al = *params.alpha;
      R a2 = al * al, a4 = a2 * a2;
      rec.order = 3;
      rec.start_index = 2;
      rec.initial = {rq(1), (rq(1) - a2) / rq(2),
                     (rq(13) * a4 - rq(50) * a2 + rq(37)) / rq(120)};
      rec.note =
          "leading value v_0 = 1 (the series of F^3 starts at 1); the "
          "printed corollary lists v_0 = 0, inconsistent with its own "
          "series.";
      auto den = [](R n) {
        return rq(4) * (n + rq(1)) * (n + rq(2)) * (rq(2) * n + rq(3)) * (rq(2) * n + rq(5));
      };
      rec.coeff_fns = {
          over([a2](R n) { return rq(-5) * a2 + rq(6) * n * n + rq(9) * n + rq(5); },
               [](R n) { return rq(2) * n * n + rq(9) * n + rq(10); }),
          over([a2, a4](R n) {
                 return rq(-9) * a4 + rq(10) * a2 +
                        rq(20) * a2 * n * (rq(4) * n + rq(3)) -
                        rq(4) * n * (rq(4) * n * (rq(3) * n * (n + rq(1)) + rq(2)) + rq(3)) -
                        rq(1);
               },
               den),
          over([a2, a4](R n) {
                 R t = rq(1) - rq(2) * n;
                 return rq(9) * a4 - rq(10) * a2 * t * t + t * t * t * t;
               },
               den),
      };
      return rec;
    }
    case Family::CosAlphaArcsin3: {
      if (!params.alpha) return std::nullopt;
      R al = *params.alpha;
      R a2 = al * al, a4 = a2 * a2;
      rec.order = 3;
      rec.start_index = 2;
      rec.initial = {rq(1), R::from_ratio(-3, 2) * a2,
                     (rq(7) * a4 - rq(4) * a2) / rq(8)};
      rec.note =
          "leading value v_0 = 1 (cos^3 at z = 0); the printed corollary "
          "lists v_0 = 0, inconsistent with its own series.";
      auto den = [](R n) {
        return rq(4) * n * (n + rq(1)) * (rq(2) * n - rq(1)) * (rq(2) * n + rq(1));
      };
      rec.coeff_fns = {
          over([a2](R n) { return rq(-5) * a2 + rq(6) * n * n - rq(9) * n + rq(5); },
               [](R n) { return rq(2) * n * n + rq(3) * n + rq(1); }),
          over([a2, a4](R n) {
                 return rq(-9) * a4 +
                        rq(20) * a2 * (n - rq(1)) * (rq(4) * n - rq(5)) -
                        rq(8) * (n - rq(1)) *
                            (rq(2) * n * (rq(3) * (n - rq(4)) * n + rq(17)) - rq(17));
               },
               den),
          over([a2, a4](R n) {
                 R t = n - rq(2);
                 return rq(9) * a4 - rq(40) * a2 * t * t + rq(16) * t * t * t * t;
               },
               den),
      };
      return rec;
    }
    default:
      return std::nullopt;
  }
}

PrintedRecurrence legendre2_printed_uncorrected(long ml) {
  R m = rq(ml);
  PrintedRecurrence rec;
  rec.order = 2;
  rec.initial = {rq(1), rq(-2) * m * (m + rq(1))};
  rec.coeff_fns = {
      over([m](R n) { return (rq(2) * n + rq(1)) * (rq(-2) * m * (m + rq(1)) + n * n + n); },
           [](R n) { R d = n + rq(1); return d * d * d; }),
      over([m](R n) {
             R p = rq(2) * m + rq(1);
             return -(p * p * n - n * n * n);
           },
           [](R n) { R d = n + rq(1); return d * d * d; }),
  };
  return rec;
}

PrintedRecurrence legendre3_printed_uncorrected(long ml) {
  R m = rq(ml);
  R s = m * (m + rq(1));
  PrintedRecurrence rec;
  rec.order = 3;
  rec.start_index = 2;
  rec.initial = {rq(1), rq(-3) * s,
                 R::from_ratio(3, 4) * (rq(5) * m * m * m * m + rq(10) * m * m * m +
                                        rq(3) * m * m - rq(2) * m)};
  auto den = [](R n) {
    return n * (n + rq(1)) * (rq(2) * n - rq(1)) * (rq(2) * n + rq(1));
  };
  rec.coeff_fns = {
      over([s](R n) { return rq(3) * (n + rq(1)) * (rq(2) * n - rq(1)) - rq(20) * s; },
           [](R n) { return (n + rq(1)) * (rq(2) * n + rq(1)); }),
      over([s, m](R n) {
             R n2 = n * n;
             return rq(4) * ((rq(20) * s + rq(3)) * n2 - rq(3) * (rq(5) * s + rq(1)) * n -
                             s * (rq(3) * m + rq(1)) * (rq(3) * m + rq(2)) -
                             rq(3) * n2 * n2 + rq(3) * n2 * n);
           },
           den),
      over([m](R n) {
             return rq(4) * (m - n + rq(1)) * (rq(3) * m - n + rq(2)) * (m + n) *
                    (rq(3) * m + n + rq(1));
           },
           den),
  };
  return rec;
}

}  // namespace hyppow
