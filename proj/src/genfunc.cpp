#include "qtwist/genfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace qtwist {

FormalSeries::FormalSeries(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw Error(ErrorKind::argument, "a formal series needs at least one coefficient");
  }
}

FormalSeries FormalSeries::constant(const Rational& value, std::size_t order) {
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = value;
  return FormalSeries(std::move(c));
}

FormalSeries FormalSeries::exponential(const Rational& a, std::size_t order) {
  std::vector<Rational> c;
  c.reserve(order + 1);
  Rational power(1);
  for (std::size_t k = 0; k <= order; ++k) {
    c.push_back(power);
    power *= a;
  }
  return FormalSeries(std::move(c));
}

FormalSeries FormalSeries::truncated(std::size_t order) const {
  const std::size_t n = std::min(order, this->order()) + 1;
  return FormalSeries(std::vector<Rational>(coefficients_.begin(), coefficients_.begin() + static_cast<long>(n)));
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = a[k] + b[k];
  return FormalSeries(std::move(c));
}

FormalSeries operator*(const Rational& scalar, const FormalSeries& a) {
  std::vector<Rational> c = a.coefficients();
  for (auto& x : c) x *= scalar;
  return FormalSeries(std::move(c));
}

FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order + 1, Rational(0));
  for (std::size_t k = 0; k <= order; ++k) {
    Rational sum(0);
    for (std::size_t j = 0; j <= k; ++j) {
      if (a[j].is_zero() || b[k - j].is_zero()) continue;
      sum += Rational(binom(k, j)) * a[j] * b[k - j];
    }
    c[k] = std::move(sum);
  }
  return FormalSeries(std::move(c));
}

FormalSeries series_inverse(const FormalSeries& a) {
  if (a[0].is_zero()) {
    throw Error(ErrorKind::singular, "series has zero constant term and no inverse");
  }
  const Rational inv0 = a[0].inverse();
  std::vector<Rational> b(a.order() + 1, Rational(0));
  b[0] = inv0;
  // sum_j C(k, j) a_j b_{k-j} = 0 for k >= 1.
  for (std::size_t k = 1; k <= a.order(); ++k) {
    Rational sum(0);
    for (std::size_t j = 1; j <= k; ++j) {
      if (a[j].is_zero()) continue;
      sum += Rational(binom(k, j)) * a[j] * b[k - j];
    }
    b[k] = -inv0 * sum;
  }
  return FormalSeries(std::move(b));
}

FormalSeries series_pow(const FormalSeries& a, int exponent) {
  if (exponent < 0) return series_pow(series_inverse(a), -exponent);
  FormalSeries result = FormalSeries::constant(Rational(1), a.order());
  FormalSeries square = a;
  auto e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result = series_mul(result, square);
    e >>= 1U;
    if (e != 0) square = series_mul(square, square);
  }
  return result;
}

FormalSeries multiply_by_t_power(const FormalSeries& a, int r) {
  if (r < 0) throw Error(ErrorKind::argument, "t-power must be nonnegative");
  const auto shift = static_cast<std::size_t>(r);
  std::vector<Rational> c(a.order() + 1, Rational(0));
  for (std::size_t m = shift; m <= a.order(); ++m) {
    // t^r * a_j t^j / j! = a_j (j + r)! / j! * t^{j+r} / (j + r)!
    BigInt falling(1);
    for (std::size_t i = m - shift + 1; i <= m; ++i) falling *= static_cast<unsigned long>(i);
    c[m] = Rational(falling) * a[m - shift];
  }
  return FormalSeries(std::move(c));
}

namespace {

// 2 / (a e^t + 1)
FormalSeries two_over_shifted_exp(const Rational& a, std::size_t order, const std::string& what) {
  if (a == Rational(-1)) {
    throw Error(ErrorKind::singular, what + ": constant term of a e^t + 1 vanishes (a = -1)");
  }
  FormalSeries denom = a * FormalSeries::exponential(Rational(1), order) +
                       FormalSeries::constant(Rational(1), order);
  return Rational(2) * series_inverse(denom);
}

void check_order(int r) {
  if (r < 1) throw Error(ErrorKind::argument, "order r must be >= 1, got " + std::to_string(r));
}

}  // namespace

FormalSeries classical_euler_series(const Rational& w, int r, const Rational& x, std::size_t order) {
  check_order(r);
  if (w == Rational(-1)) {
    throw Error(ErrorKind::singular, "w = -1: constant term of w e^t + 1 vanishes");
  }
  const FormalSeries base = two_over_shifted_exp(w, order, "classical Euler series");
  return series_mul(series_pow(base, r), FormalSeries::exponential(x, order));
}

FormalSeries classical_genocchi_series(const Rational& w, int r, const Rational& x, std::size_t order) {
  return multiply_by_t_power(classical_euler_series(w, r, x, order), r);
}

FormalSeries cos_genocchi_series(long h, int r, const Rational& q, std::size_t order) {
  check_order(r);
  FormalSeries product = FormalSeries::constant(Rational(1), order);
  for (int v = 0; v < r; ++v) {
    const Rational factor = ipow(q, h - v);
    if (factor == Rational(-1)) {
      throw Error(ErrorKind::singular, "singular factor q^{h-v} e^t + 1 at v = " + std::to_string(v));
    }
    product = series_mul(product, two_over_shifted_exp(factor, order, "(h,r)-Genocchi series"));
  }
  return multiply_by_t_power(product, r);
}

TruncatedEgf q_euler_egf(const Rational& w, const Rational& q, int r, long x, long cutoff, std::size_t order) {
  check_order(r);
  if (w.abs() >= Rational(1)) {
    throw Error(ErrorKind::divergence, "the m-sum diverges for |w| >= 1");
  }
  if (q.abs() >= Rational(1)) {
    throw Error(ErrorKind::argument, "the tail bound needs |q| < 1");
  }
  if (x < 0) throw Error(ErrorKind::argument, "x must be a nonnegative integer");
  if (cutoff < 0) throw Error(ErrorKind::argument, "cutoff must be nonnegative");

  const Rational minus_w = -w;
  std::vector<Rational> coeffs(order + 1, Rational(0));
  Rational weight(1);  // C(m+r-1, m) (-w)^m
  for (long m = 0; m <= cutoff; ++m) {
    const Rational bracket = q_bracket(m + x, q, QLimit::allow);
    Rational power(1);
    for (std::size_t k = 0; k <= order; ++k) {
      coeffs[k] += weight * power;
      power *= bracket;
    }
    // C(m+r, m+1) = C(m+r-1, m) (m + r) / (m + 1)
    weight *= minus_w * Rational(m + r, m + 1);
  }
  const Rational scale = ipow(two_bracket(q), r);
  for (auto& c : coeffs) c *= scale;

  // sum_{m > M} C(m+r-1, m) |w|^m |[m+x]_q|^k
  //   <= (1-|q|)^{-k} (M+2)^{r-1} |w|^{M+1} / (1 - rho),  rho = ((M+3)/(M+2))^{r-1} |w|
  const Real abs_w = w.abs().to_long_double();
  const Real abs_q = q.abs().to_long_double();
  const Real base = static_cast<Real>(cutoff + 2);
  const Real rho = std::pow((base + 1) / base, static_cast<Real>(r - 1)) * abs_w;
  const Real scale_abs = scale.abs().to_long_double();
  std::vector<Real> bounds(order + 1, std::numeric_limits<Real>::infinity());
  if (rho < 1) {
    const Real mass = std::pow(base, static_cast<Real>(r - 1)) *
                      std::pow(abs_w, static_cast<Real>(cutoff + 1)) / (1 - rho);
    for (std::size_t k = 0; k <= order; ++k) {
      // 1 + 1e-12 absorbs rounding in the floating evaluation of the bound.
      bounds[k] = scale_abs * mass * std::pow(1 / (1 - abs_q), static_cast<Real>(k)) * (1 + Real(1e-12));
    }
  }
  return TruncatedEgf{FormalSeries(std::move(coeffs)), std::move(bounds), cutoff};
}

}  // namespace qtwist
