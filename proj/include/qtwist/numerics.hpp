#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>

#include "qtwist/error.hpp"
#include "qtwist/rational.hpp"

namespace qtwist {

// Working precision of floating mode. long double is the 80-bit x87 format
// on x86-64 (18-19 significant digits); define QTWIST_REAL as double to fall
// back to the 15-16 digit floor.
#ifndef QTWIST_REAL
#define QTWIST_REAL long double
#endif
using Real = QTWIST_REAL;
using Complex = std::complex<Real>;

inline constexpr int kFloatingDigits = std::numeric_limits<Real>::digits10;
static_assert(kFloatingDigits >= 15, "floating mode needs at least 15 significant digits");

/// Whether q = 1 may be served by the limit value of the q-bracket.
enum class QLimit { forbid, allow };

enum class Mode { exact, floating };

/// The pair (q, w) and the order r. The scalar type fixes the evaluation
/// mode: Rational is exact, Complex is floating.
template <class Scalar>
struct QContext {
  Scalar q;
  Scalar w;
  int r = 1;

  static constexpr Mode mode = std::is_same_v<Scalar, Rational> ? Mode::exact : Mode::floating;
};

using ExactContext = QContext<Rational>;
using FloatContext = QContext<Complex>;

/// Argument type of polynomials: nonnegative integers in exact mode,
/// nonnegative reals in floating mode.
template <class Scalar>
struct PolyArgument;
template <>
struct PolyArgument<Rational> {
  using type = long;
};
template <>
struct PolyArgument<Complex> {
  using type = Real;
};
template <class Scalar>
using poly_argument_t = typename PolyArgument<Scalar>::type;

// Scalar helpers shared by the exact and floating code paths.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Complex& x) { return x == Complex(0); }
inline Complex to_complex(const Rational& x) { return Complex(x.to_long_double(), 0); }

/// x^n for integer n; 0^0 = 1.
Rational ipow(const Rational& base, std::int64_t exponent);
Complex ipow(const Complex& base, std::int64_t exponent);

/// q^x for real x. Integer x goes through ipow; otherwise q must be a
/// positive real and the principal real power is used.
Complex real_power(const Complex& q, Real x);

/// [x]_q = (1 - q^x)/(1 - q) for integer x; q = 1 returns x only with QLimit::allow.
Rational q_bracket(std::int64_t x, const Rational& q, QLimit limit = QLimit::forbid);
Complex q_bracket(Real x, const Complex& q, QLimit limit = QLimit::forbid);

/// [2]_q = 1 + q.
template <class Scalar>
Scalar two_bracket(const Scalar& q) {
  return Scalar(1) + q;
}

BigInt binom(unsigned long n, unsigned long k);

/// Coefficient of b^m in 1/(1-b)^r, i.e. binom(m + r - 1, m).
BigInt neg_binom_coeff(unsigned long m, unsigned long r);

BigInt factorial(unsigned long n);

bool is_prime(long n);

/// v_p(x), with an explicit infinity for x = 0. Orders with infinity on top.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long value) : value_(value) {}

  bool is_infinite() const { return !value_.has_value(); }
  /// Finite value; undefined for infinity.
  long value() const { return *value_; }
  std::string str() const { return value_ ? std::to_string(*value_) : std::string("inf"); }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.value() <=> b.value();
  }

 private:
  Valuation() = default;
  std::optional<long> value_;
};

/// v_p(numerator) - v_p(denominator). p must be an odd prime.
Valuation padic_valuation(const Rational& x, long p);

}  // namespace qtwist
