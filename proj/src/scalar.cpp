#include "scalar.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace hyppow {

Rational::Rational(long num, long den) {
  if (den == 0) raise(ErrorCode::Domain, "rational with zero denominator");
  v_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
  canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// "[sign]digits[.digits][eE[sign]digits]" as an exact rational.
std::optional<mpq_class> parse_decimal(std::string_view s) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  long exp10 = 0;
  auto epos = body.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view exppart = body.substr(epos + 1);
    body = body.substr(0, epos);
    bool eneg = false;
    if (!exppart.empty() && (exppart[0] == '+' || exppart[0] == '-')) {
      eneg = exppart[0] == '-';
      exppart.remove_prefix(1);
    }
    if (!all_digits(exppart) || exppart.size() > 6) return std::nullopt;
    exp10 = std::strtol(std::string(exppart).c_str(), nullptr, 10);
    if (eneg) exp10 = -exp10;
  }
  std::string digits;
  auto dot = body.find('.');
  if (dot != std::string_view::npos) {
    std::string_view intpart = body.substr(0, dot);
    std::string_view fracpart = body.substr(dot + 1);
    if (intpart.empty() && fracpart.empty()) return std::nullopt;
    if (!intpart.empty() && !all_digits(intpart)) return std::nullopt;
    if (!fracpart.empty() && !all_digits(fracpart)) return std::nullopt;
    digits = std::string(intpart) + std::string(fracpart);
    exp10 -= static_cast<long>(fracpart.size());
  } else {
    if (!all_digits(body)) return std::nullopt;
    digits = std::string(body);
  }
  mpz_class num(digits.empty() ? "0" : digits);
  if (negative) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  mpq_class q;
  if (exp10 >= 0) {
    q = mpq_class(num * scale);
  } else {
    q = mpq_class(num, scale);
  }
  q.canonicalize();
  return q;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return Rational(q);
  }
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    auto q = parse_decimal(s);
    if (!q) return std::nullopt;
    return Rational(*q);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  q.canonicalize();
  return Rational(q);
}

std::string Rational::decimal(int sig_digits) const {
  if (sig_digits < 1) sig_digits = 1;
  mpf_class f(v_, static_cast<unsigned>(sig_digits) * 4 + 64);
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dFg", sig_digits);
  char* out = nullptr;
  gmp_asprintf(&out, fmt, f.get_mpf_t());
  std::string result(out);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(out, std::strlen(out) + 1);
  return result;
}

namespace {

std::string format_double(double x, int sig_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, x);
  return buf;
}

// One component of "re+imi": decimal literal or "p/q".
std::optional<double> parse_part(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.find('/') != std::string_view::npos) {
    auto q = Rational::parse(s);
    if (!q) return std::nullopt;
    return q->to_double();
  }
  std::string buf(s);
  char* end = nullptr;
  double value = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Cplx> Cplx::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i' && s.back() != 'I') {
    auto re = parse_part(s);
    if (!re) return std::nullopt;
    return Cplx(*re, 0.0);
  }
  std::string body = s.substr(0, s.size() - 1);
  // Split at the sign that separates the real part from the imaginary one:
  // the last '+'/'-' that is neither leading nor an exponent sign.
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_str, im_str;
  if (split == std::string::npos) {
    re_str = "0";
    im_str = body;
  } else {
    re_str = body.substr(0, split);
    im_str = body.substr(split);
  }
  if (im_str.empty() || im_str == "+") im_str = "1";
  if (im_str == "-") im_str = "-1";
  auto re = parse_part(re_str);
  auto im = parse_part(im_str);
  if (!re || !im) return std::nullopt;
  return Cplx(*re, *im);
}

std::string Cplx::str(int sig_digits) const {
  if (v.imag() == 0.0) return format_double(v.real(), sig_digits);
  std::string re = format_double(v.real(), sig_digits);
  std::string im = format_double(v.imag(), sig_digits);
  if (!im.empty() && im[0] != '-') return re + "+" + im + "i";
  return re + im + "i";
}

bool violates_lower_guard(const Rational& c) {
  return c.is_integer() && c.sign() <= 0;
}

bool violates_lower_guard(const Cplx& c) {
  constexpr double kTol = 1e-12;
  if (std::abs(c.v.imag()) > kTol) return false;
  double nearest = std::round(c.v.real());
  return nearest <= 0.0 && std::abs(c.v.real() - nearest) <= kTol;
}

}  // namespace hyppow
