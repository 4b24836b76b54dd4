#include "levelmod/rational.hpp"

#include "levelmod/errors.hpp"

#include <cctype>
#include <sstream>

namespace levelmod {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  value_ = den < 0 ? Value(Integer(-num), Integer(-den)) : Value(num, den);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::ParseError, "sign in denominator of '" + std::string(text) + "'");
  }
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer Rational::numerator() const { return boost::multiprecision::numerator(value_); }

Integer Rational::denominator() const { return boost::multiprecision::denominator(value_); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InternalInconsistency, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  const Integer den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::string Rational::decimal(int digits) const {
  // Long division keeps this exact up to the requested digit count.
  Integer num = numerator();
  const Integer den = denominator();
  std::ostringstream os;
  if (num < 0) {
    os << '-';
    num = -num;
  }
  os << Integer(num / den).str();
  Integer rem = num % den;
  if (digits > 0 && rem != 0) {
    os << '.';
    for (int i = 0; i < digits && rem != 0; ++i) {
      rem *= 10;
      os << Integer(rem / den).str();
      rem %= den;
    }
  }
  return os.str();
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (long j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace levelmod
