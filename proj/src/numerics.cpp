#include "qtwist/numerics.hpp"

#include <cmath>

namespace qtwist {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::argument: return "argument";
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::branch_ambiguity: return "branch-ambiguity";
    case ErrorKind::pole: return "pole";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::singular: return "singular";
    case ErrorKind::method: return "method";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::precondition: return "precondition";
  }
  return "unknown";
}

Rational ipow(const Rational& base, std::int64_t exponent) {
  if (exponent == 0) return Rational(1);
  return pow(base, exponent);
}

Complex ipow(const Complex& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw Error(ErrorKind::division_by_zero, "negative power of zero");
    return ipow(Complex(1) / base, -exponent);
  }
  Complex result(1);
  Complex square = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= square;
    e >>= 1U;
    if (e != 0) square *= square;
  }
  return result;
}

namespace {

bool is_integral(Real x) { return std::isfinite(x) && std::trunc(x) == x; }

bool is_positive_real(const Complex& z) { return z.imag() == 0 && z.real() > 0; }

}  // namespace

Complex real_power(const Complex& q, Real x) {
  if (is_integral(x) && std::fabs(x) < Real(1) / std::numeric_limits<Real>::epsilon()) {
    return ipow(q, static_cast<std::int64_t>(x));
  }
  if (!is_positive_real(q)) {
    throw Error(ErrorKind::branch_ambiguity,
                "non-integer power needs a positive real base (q^x has no canonical branch otherwise)");
  }
  return Complex(std::pow(q.real(), x), 0);
}

Rational q_bracket(std::int64_t x, const Rational& q, QLimit limit) {
  if (q == Rational(1)) {
    if (limit == QLimit::allow) return Rational(x);
    throw Error(ErrorKind::division_by_zero, "[x]_q divides by 1 - q; q = 1 needs the limit branch");
  }
  if (x == 0) return Rational(0);
  return (Rational(1) - ipow(q, x)) / (Rational(1) - q);
}

Complex q_bracket(Real x, const Complex& q, QLimit limit) {
  if (q == Complex(1)) {
    if (limit == QLimit::allow) return Complex(x);
    throw Error(ErrorKind::division_by_zero, "[x]_q divides by 1 - q; q = 1 needs the limit branch");
  }
  if (x == 0) return Complex(0);
  const Complex value = (Complex(1) - real_power(q, x)) / (Complex(1) - q);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw Error(ErrorKind::argument, "[x]_q is not finite");
  }
  return value;
}

BigInt binom(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt neg_binom_coeff(unsigned long m, unsigned long r) {
  if (r == 0) return BigInt(m == 0 ? 1 : 0);
  return binom(m + r - 1, m);
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

long count_factor(BigInt value, const BigInt& p) {
  long count = 0;
  while (mpz_divisible_p(value.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
    ++count;
  }
  return count;
}

}  // namespace

Valuation padic_valuation(const Rational& x, long p) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw Error(ErrorKind::argument, "p must be an odd prime, got " + std::to_string(p));
  }
  if (x.is_zero()) return Valuation::infinity();
  const BigInt prime(p);
  return Valuation(count_factor(x.numerator(), prime) - count_factor(x.denominator(), prime));
}

}  // namespace qtwist
