#include "qtwist/qeuler.hpp"

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_complex.hpp>

namespace qtwist {

namespace {

constexpr long kSeriesTermCap = 10'000'000;

using Wide = boost::multiprecision::cpp_complex_quad;

Complex narrow(const Wide& z) {
  return Complex(static_cast<Real>(z.real()), static_cast<Real>(z.imag()));
}

template <class Scalar>
Scalar from_integer(const BigInt& value) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return Rational(value);
  } else {
    return Complex(Rational(value).to_long_double(), 0);
  }
}

template <class Scalar>
void check_context(const QContext<Scalar>& ctx, int index) {
  if (ctx.r < 1) {
    throw Error(ErrorKind::argument, "order r must be >= 1, got " + std::to_string(ctx.r));
  }
  if (index < 0) {
    throw Error(ErrorKind::argument, "index must be >= 0, got " + std::to_string(index));
  }
  if (ctx.q == Scalar(1)) {
    throw Error(ErrorKind::precondition,
                "q = 1 is excluded: every closed form divides by (1-q)^n; "
                "use the classical generating-function oracle (table --classical)");
  }
}

template <class Scalar>
void check_finite(const Scalar& value) {
  if constexpr (std::is_same_v<Scalar, Complex>) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw Error(ErrorKind::argument, "floating evaluation overflowed");
    }
  }
}

// q^{l x} for the polynomial weight.
template <class Scalar>
Scalar shift_weight(const Scalar& q, long l, poly_argument_t<Scalar> x) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return ipow(q, l * x);
  } else {
    return real_power(q, static_cast<Real>(l) * x);
  }
}

template <class Scalar>
Scalar closed_sum(int n, const QContext<Scalar>& ctx, poly_argument_t<Scalar> x) {
  check_context(ctx, n);
  if constexpr (std::is_same_v<Scalar, Rational>) {
    if (x < 0) throw Error(ErrorKind::argument, "x must be a nonnegative integer in exact mode");
  } else {
    if (!(x >= 0) || !std::isfinite(x)) throw Error(ErrorKind::argument, "x must be a nonnegative real");
    if (x != std::trunc(x) && !(ctx.q.imag() == 0 && ctx.q.real() > 0)) {
      throw Error(ErrorKind::branch_ambiguity, "real x needs a positive real q for q^{l x}");
    }
  }

  const Scalar one(1);
  const Scalar two = two_bracket(ctx.q);
  Scalar sum(0);
  Scalar q_pow = one;  // q^l
  for (int l = 0; l <= n; ++l) {
    const Scalar denom = one + ctx.w * q_pow;
    if (is_zero(denom)) {
      throw PoleError(l, "pole: 1 + w q^l = 0 at l = " + std::to_string(l));
    }
    Scalar term = from_integer<Scalar>(binom(n, l)) * ipow(two / denom, ctx.r);
    if (x != 0) term *= shift_weight(ctx.q, l, x);
    if (l % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    q_pow *= ctx.q;
  }
  Scalar result = sum / ipow(one - ctx.q, n);
  check_finite(result);
  return result;
}

template <class Scalar>
Scalar genocchi_from_euler(int m, const QContext<Scalar>& ctx, poly_argument_t<Scalar> x) {
  if (ctx.r < 1) {
    throw Error(ErrorKind::argument, "order r must be >= 1, got " + std::to_string(ctx.r));
  }
  if (m < 0) throw Error(ErrorKind::argument, "index must be >= 0, got " + std::to_string(m));
  if (m < ctx.r) return Scalar(0);
  const BigInt scale = factorial(static_cast<unsigned long>(ctx.r)) *
                       binom(static_cast<unsigned long>(m), static_cast<unsigned long>(ctx.r));
  return from_integer<Scalar>(scale) * closed_sum(m - ctx.r, ctx, x);
}

SeriesValue negative_binomial_series(const EulerQuery<Complex>& query, Real tol, Real x) {
  const auto& ctx = query.ctx;
  check_context(ctx, query.n);
  if (!(tol > 0)) throw Error(ErrorKind::argument, "tolerance must be positive");
  const Real abs_w = std::abs(ctx.w);
  const Real abs_q = std::abs(ctx.q);
  if (abs_w >= 1) {
    throw Error(ErrorKind::divergence,
                "series diverges for |w| >= 1; use the finite closed form instead");
  }
  if (!(abs_q > 0 && abs_q < 1)) {
    throw Error(ErrorKind::argument, "series form needs 0 < |q| < 1");
  }
  if (!(x >= 0)) throw Error(ErrorKind::argument, "x must be a nonnegative real");

  const int r = ctx.r;
  const int n = query.n;
  const Complex two = two_bracket(ctx.q);
  const Real prefactor = std::pow(std::abs(two), static_cast<Real>(r)) *
                         std::pow(Real(1) / (Real(1) - abs_q), static_cast<Real>(n));

  // Terms reach |w|^m m^{r-1} (1-|q|)^{-n} before decaying; at r = 4, n = 12 their
  // absolute sum exceeds the result by ~1e6, so accumulate in 113-bit precision.
  const Wide wq(ctx.q.real(), ctx.q.imag());
  const Wide minus_w(-ctx.w.real(), -ctx.w.imag());
  const Wide one(1);
  Wide sum(0);
  Wide minus_w_pow(1);                                   // (-w)^m
  const Complex q_x = real_power(ctx.q, x);
  Wide q_pow(q_x.real(), q_x.imag());                    // q^{m+x}
  Wide coeff(1);            // C(m+r-1, m), updated by ratio (m+r)/(m+1)
  Real w_pow_abs = 1;       // |w|^m
  for (long m = 0; m < kSeriesTermCap; ++m) {
    const Wide bracket = (one - q_pow) / (one - wq);
    Wide power = one;
    for (int k = 0; k < n; ++k) power *= bracket;
    sum += coeff * minus_w_pow * power;

    minus_w_pow *= minus_w;
    q_pow *= wq;
    coeff = coeff * Wide(m + r) / Wide(m + 1);
    w_pow_abs *= abs_w;

    const long terms = m + 1;
    const Real base = static_cast<Real>(terms + 1);
    const Real rho = std::pow((base + 1) / base, static_cast<Real>(r - 1)) * abs_w;
    if (rho < 1) {
      const Real tail = prefactor * std::pow(base, static_cast<Real>(r - 1)) * w_pow_abs / (1 - rho);
      if (tail < tol) {
        return SeriesValue{ipow(two, r) * narrow(sum), terms, tail};
      }
    }
  }
  throw Error(ErrorKind::non_convergence, "series did not reach the tolerance within the term cap");
}

}  // namespace

template <class Scalar>
Scalar euler_number_closed(const EulerQuery<Scalar>& query) {
  if (query.x && *query.x != 0) {
    throw Error(ErrorKind::argument, "euler_number_closed takes no argument x; use euler_poly_closed");
  }
  return closed_sum(query.n, query.ctx, poly_argument_t<Scalar>(0));
}

template <class Scalar>
Scalar euler_poly_closed(const EulerQuery<Scalar>& query) {
  if (!query.x) throw Error(ErrorKind::argument, "euler_poly_closed needs an argument x");
  return closed_sum(query.n, query.ctx, *query.x);
}

template <class Scalar>
Scalar genocchi_number(const GenocchiQuery<Scalar>& query) {
  if (query.x && *query.x != 0) {
    throw Error(ErrorKind::argument, "genocchi_number takes no argument x; use genocchi_poly");
  }
  return genocchi_from_euler(query.m, query.ctx, poly_argument_t<Scalar>(0));
}

template <class Scalar>
Scalar genocchi_poly(const GenocchiQuery<Scalar>& query) {
  if (!query.x) throw Error(ErrorKind::argument, "genocchi_poly needs an argument x");
  return genocchi_from_euler(query.m, query.ctx, *query.x);
}

SeriesValue euler_number_series(const EulerQuery<Complex>& query, Real tol) {
  if (query.x && *query.x != 0) {
    throw Error(ErrorKind::argument, "euler_number_series takes no argument x; use euler_poly_series");
  }
  return negative_binomial_series(query, tol, 0);
}

SeriesValue euler_poly_series(const EulerQuery<Complex>& query, Real tol) {
  if (!query.x) throw Error(ErrorKind::argument, "euler_poly_series needs an argument x");
  return negative_binomial_series(query, tol, *query.x);
}

FloatContext to_floating(const ExactContext& ctx) {
  return FloatContext{to_complex(ctx.q), to_complex(ctx.w), ctx.r};
}

template Rational euler_number_closed(const EulerQuery<Rational>&);
template Complex euler_number_closed(const EulerQuery<Complex>&);
template Rational euler_poly_closed(const EulerQuery<Rational>&);
template Complex euler_poly_closed(const EulerQuery<Complex>&);
template Rational genocchi_number(const GenocchiQuery<Rational>&);
template Complex genocchi_number(const GenocchiQuery<Complex>&);
template Rational genocchi_poly(const GenocchiQuery<Rational>&);
template Complex genocchi_poly(const GenocchiQuery<Complex>&);

}  // namespace qtwist
