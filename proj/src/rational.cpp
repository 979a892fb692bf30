#include "qtwist/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "qtwist/error.hpp"

namespace qtwist {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw Error(ErrorKind::argument, "not a rational number: '" + std::string(whole) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) {
    throw Error(ErrorKind::argument, "empty rational literal");
  }

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw Error(ErrorKind::argument, "not a rational number: '" + std::string(whole) + "'");
    }
    return Rational(num, BigInt(std::string(den_text), 10));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw Error(ErrorKind::argument, "not a rational number: '" + std::string(whole) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den = pow(BigInt(10), frac_part.size());
    if (negative) num = -num;
    return Rational(num, den);
  }

  return Rational(parse_integer(text, whole));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

long double Rational::to_long_double() const {
  // Head and tail doubles from a 128-bit mpf carry more than the 64-bit
  // long double mantissa; the 2exp form keeps exponents out of double range.
  mpf_class f(value_, 128);
  long head_exp = 0;
  const double head = mpf_get_d_2exp(&head_exp, f.get_mpf_t());
  mpf_class rest(head, 128);
  if (head_exp >= 0) {
    mpf_mul_2exp(rest.get_mpf_t(), rest.get_mpf_t(), static_cast<mp_bitcnt_t>(head_exp));
  } else {
    mpf_div_2exp(rest.get_mpf_t(), rest.get_mpf_t(), static_cast<mp_bitcnt_t>(-head_exp));
  }
  rest = f - rest;
  long tail_exp = 0;
  const double tail = mpf_get_d_2exp(&tail_exp, rest.get_mpf_t());
  return std::ldexp(static_cast<long double>(head), static_cast<int>(head_exp)) +
         std::ldexp(static_cast<long double>(tail), static_cast<int>(tail_exp));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) {
    throw Error(ErrorKind::division_by_zero, "inverse of zero");
  }
  mpq_class out;
  mpq_inv(out.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(out));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorKind::division_by_zero, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    return pow(base.inverse(), -exponent);
  }
  // GMP has no mpq power; numerator and denominator are coprime so their
  // powers stay coprime.
  const auto e = static_cast<unsigned long>(exponent);
  BigInt num = pow(base.numerator(), e);
  BigInt den = pow(base.denominator(), e);
  return Rational(num, den);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace qtwist
