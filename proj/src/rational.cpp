#include "prf/rational.hpp"

#include "prf/error.hpp"

#include <cctype>

namespace prf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::VariableClash: return "VariableClash";
    case ErrorKind::NonSquareSystem: return "NonSquareSystem";
    case ErrorKind::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorKind::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotZeroDimensionalFiber: return "NotZeroDimensionalFiber";
    case ErrorKind::UnknownQuantity: return "UnknownQuantity";
    case ErrorKind::NonSquareAfterElimination: return "NonSquareAfterElimination";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  // round half away from zero
  Integer rounded = floor(scaled + Rational(1, 2));
  std::string s = rounded.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (q < 0 && rounded != 0) s.insert(0, "-");
  return s;
}

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  // Stern-Brocot descent on continued fractions.
  Integer fl = floor(lo);
  if (fl + 1 < hi) {
    // an integer lies strictly inside; pick the one closest to zero
    Integer candidate = fl + 1;
    if (lo < 0 && hi > 0) candidate = 0;
    else if (hi <= 0) {
      Integer c = floor(hi);
      if (c == hi) c -= 1;
      candidate = c;
    }
    return Rational(candidate);
  }
  // lo and hi share the integer part fl (or hi == fl + 1)
  Rational flq(fl);
  Rational a = lo - flq;  // in [0, 1)
  Rational b = hi - flq;  // in (0, 1]
  // simplest in (a, b) with 0 <= a < b <= 1: invert
  if (a == 0) {
    // (0, b): 1/n with n = floor(1/b) + 1
    Integer n = floor(Rational(1) / b) + 1;
    Rational r(1, 1);
    r /= Rational(n);
    return flq + r;
  }
  Rational inner = simplest_between(Rational(1) / b, Rational(1) / a);
  return flq + Rational(1) / inner;
}

}  // namespace prf
