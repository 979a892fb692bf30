#include "qtwist/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qtwist/qeuler.hpp"

namespace qtwist {

std::string_view to_string(ZetaMethod method) noexcept {
  return method == ZetaMethod::direct ? "direct" : "accelerated";
}

namespace {

constexpr Real kEps = std::numeric_limits<Real>::epsilon();

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool is_excluded_shift(const Complex& x) {
  return x.imag() == 0 && x.real() <= 0 && std::trunc(x.real()) == x.real();
}

/// z^{-s} on the principal branch; integer s uses repeated multiplication.
Complex inverse_power(const Complex& z, const Complex& s) {
  if (s.imag() == 0 && std::trunc(s.real()) == s.real() && std::fabs(s.real()) <= 1e6L) {
    return ipow(z, -static_cast<std::int64_t>(s.real()));
  }
  return std::exp(-s * std::log(z));
}

void validate(const Complex& s, Real q, const Complex& w, int r) {
  if (!finite(s)) throw Error(ErrorKind::argument, "s must be finite");
  if (!(q > 0 && q < 1)) throw Error(ErrorKind::argument, "q must be a real number in (0, 1)");
  if (r < 1) throw Error(ErrorKind::argument, "order r must be >= 1");
  if (!finite(w)) throw Error(ErrorKind::argument, "w must be finite");
  if (w == Complex(-1)) {
    throw Error(ErrorKind::divergence, "w = -1: the series has a pole of order r there");
  }
  if (std::abs(w) > 1 + 64 * kEps) throw Error(ErrorKind::argument, "need |w| <= 1");
}

struct Terms {
  Real q;
  Complex s;
  Complex w;
  int r;
  Complex q_to_x;  // q^x on the principal branch of x log q
  Complex one_minus_q;

  /// C(m+r-1, m) [m+x]_q^{-s}, without the (-w)^m factor.
  Complex coefficient(long m, Real binomial) const {
    const Complex z = (Complex(1) - std::pow(q, static_cast<Real>(m)) * q_to_x) / one_minus_q;
    if (z == Complex(0)) {
      throw PoleError(m, "[m + x]_q vanishes at m = " + std::to_string(m));
    }
    return binomial * inverse_power(z, s);
  }
};

// sup_{m >= M} |[m+x]_q^{-s}| when rho = q^M |q^x| < 1.
Real power_bound(const Terms& t, long m) {
  const Real rho = std::pow(t.q, static_cast<Real>(m)) * std::abs(t.q_to_x);
  if (!(rho < 0.5)) return std::numeric_limits<Real>::infinity();
  const Real log_scale = -std::log1p(-t.q);
  const Real lo = std::log1p(-rho) + log_scale;
  const Real hi = std::log1p(rho) + log_scale;
  const Real sigma = t.s.real();
  return std::exp(std::max(-sigma * lo, -sigma * hi) + std::fabs(t.s.imag()) * std::asin(rho));
}

ZetaValue sum_direct(const Terms& t, long first, const Complex& prefactor, const ZetaOptions& options) {
  const Real abs_w = std::abs(t.w);
  const Real abs_prefactor = std::abs(prefactor);
  Complex sum(0);
  Real magnitude = 0;  // sum of |terms|, for the rounding estimate
  Real binomial = 1;   // C(m+r-1, m)
  Complex w_pow(1);    // (-w)^m
  Real w_pow_abs = 1;
  for (long m = 0; m < first; ++m) {
    binomial = binomial * static_cast<Real>(m + t.r) / static_cast<Real>(m + 1);
    w_pow *= -t.w;
    w_pow_abs *= abs_w;
  }

  for (long m = first, count = 1; count <= options.direct_cap; ++m, ++count) {
    const Complex term = w_pow * t.coefficient(m, binomial);
    sum += term;
    magnitude += std::abs(term);

    binomial = binomial * static_cast<Real>(m + t.r) / static_cast<Real>(m + 1);
    w_pow *= -t.w;
    w_pow_abs *= abs_w;

    // Tail from M = m + 1: C(M+r-1, M) |w|^M sup|[.]^{-s}| / (1 - lambda),
    // lambda = |w| (M+r)/(M+1) bounds the ratio of consecutive coefficients.
    const long next = m + 1;
    const Real lambda = abs_w * static_cast<Real>(next + t.r) / static_cast<Real>(next + 1);
    if (lambda < 1) {
      const Real tail = abs_prefactor * binomial * w_pow_abs * power_bound(t, next) / (1 - lambda);
      const Complex value = prefactor * sum;
      if (tail <= options.tolerance * std::max<Real>(1, std::abs(value))) {
        // Recursive summation: at most count * eps * sum|terms| of rounding.
        const Real rounding = abs_prefactor * static_cast<Real>(count) * kEps * magnitude;
        return ZetaValue{value, ZetaMethod::direct, tail + rounding, count, true};
      }
    }
  }
  const Complex value = prefactor * sum;
  throw ZetaNonConvergence("direct summation hit the term cap; try the accelerated method",
                           ZetaValue{value, ZetaMethod::direct, std::numeric_limits<Real>::infinity(),
                                     options.direct_cap, false});
}

// Euler transform in z = -w:
//   sum_j b_j z^j = sum_k (Delta^k b)_0 z^k / (1 - z)^{k+1}.
ZetaValue sum_accelerated(const Terms& t, long first, const Complex& prefactor, const ZetaOptions& options) {
  const Complex z = -t.w;
  const Complex y = z / (Complex(1) - z);
  const Real abs_y = std::abs(y);
  if (!(abs_y < 1)) {
    throw Error(ErrorKind::method,
                "Euler transform diverges here (|w/(1+w)| >= 1, w too close to -1)");
  }
  const Complex outer = prefactor * ipow(z, first) / (Complex(1) - z);

  Real binomial = 1;
  for (long m = 0; m < first; ++m) binomial = binomial * static_cast<Real>(m + t.r) / static_cast<Real>(m + 1);

  std::vector<Complex> diagonal;  // diagonal[i] = Delta^i b_{k-i}
  diagonal.reserve(static_cast<std::size_t>(options.accelerated_cap) + 1);
  Complex sum(0);
  Complex y_pow(1);
  Real max_b = 0;
  Real noise = 0;
  Real previous = std::numeric_limits<Real>::infinity();
  Real best_error = std::numeric_limits<Real>::infinity();
  Complex best_sum(0);
  long best_k = 0;

  for (long k = 0; k <= options.accelerated_cap; ++k) {
    const long m = first + k;
    Complex carry = t.coefficient(m, binomial);
    binomial = binomial * static_cast<Real>(m + t.r) / static_cast<Real>(m + 1);
    max_b = std::max(max_b, std::abs(carry));
    for (auto& d : diagonal) {
      const Complex next = carry - d;
      d = carry;
      carry = next;
    }
    diagonal.push_back(carry);

    const Complex term = carry * y_pow;
    sum += term;
    y_pow *= y;

    // Rounding in Delta^k b_0 is at most eps 2^k max|b|, then scaled by |y|^k.
    noise += kEps * std::pow(2 * abs_y, static_cast<Real>(k)) * max_b;
    const Real current = std::abs(term);
    const Real error = (current + previous + noise) * std::abs(outer);
    if (error < best_error) {
      best_error = error;
      best_sum = sum;
      best_k = k + 1;
    }
    const Real target = options.tolerance * std::max<Real>(1, std::abs(outer * sum));
    if (std::isfinite(previous) && current * std::abs(outer) <= target && previous * std::abs(outer) <= target) {
      return ZetaValue{outer * best_sum, ZetaMethod::accelerated, best_error, best_k, false};
    }
    // Stagnation: rounding noise now dominates the terms.
    if (k > 8 && noise > current && noise > previous && error > 4 * best_error) {
      return ZetaValue{outer * best_sum, ZetaMethod::accelerated, best_error, best_k, false};
    }
    previous = current;
  }
  throw ZetaNonConvergence("Euler transform hit the stage cap",
                           ZetaValue{outer * best_sum, ZetaMethod::accelerated, best_error, best_k, false});
}

}  // namespace

ZetaValue shifted_lerch_sum(const Complex& s, Real q, const Complex& w, int r, const Complex& x, long first,
                            ZetaMethod method, const ZetaOptions& options) {
  validate(s, q, w, r);
  if (first < 0) throw Error(ErrorKind::argument, "first index must be >= 0");
  if (!finite(x)) throw Error(ErrorKind::argument, "x must be finite");
  const Terms terms{q, s, w, r, std::exp(x * std::log(Complex(q))), Complex(1 - q)};
  const Complex prefactor = ipow(Complex(1 + q), r);

  if (method == ZetaMethod::direct) {
    if (std::abs(w) > 1 - options.delta) {
      throw Error(ErrorKind::method, "direct summation needs |w| <= 1 - delta; use the accelerated method");
    }
    return sum_direct(terms, first, prefactor, options);
  }
  return sum_accelerated(terms, first, prefactor, options);
}

ZetaValue lerch_zeta(const ZetaQuery& query, const ZetaOptions& options) {
  return shifted_lerch_sum(query.s, query.q, query.w, query.r, Complex(0), 1, query.method, options);
}

ZetaValue hurwitz_zeta(const ZetaQuery& query, const ZetaOptions& options) {
  if (!query.x) throw Error(ErrorKind::argument, "hurwitz_zeta needs x");
  if (is_excluded_shift(*query.x)) {
    throw Error(ErrorKind::argument, "x must not be 0, -1, -2, ...");
  }
  return shifted_lerch_sum(query.s, query.q, query.w, query.r, *query.x, 0, query.method, options);
}

std::vector<InterpolationCell> interpolation_report(int k_max, std::span<const InterpolationPoint> grid,
                                                    const ZetaOptions& options) {
  std::vector<InterpolationCell> cells;
  for (const auto& point : grid) {
    const FloatContext ctx{Complex(point.q), point.w, point.r};
    for (int k = 1; k <= k_max; ++k) {
      InterpolationCell cell;
      cell.point = point;
      cell.k = k;
      try {
        ZetaQuery query{Complex(-k), point.q, point.w, point.r, std::nullopt, ZetaMethod::direct};
        if (point.x) {
          query.x = Complex(*point.x);
          cell.zeta = hurwitz_zeta(query, options).value;
          cell.euler = euler_poly_closed(EulerQuery<Complex>{k, ctx, point.x});
        } else {
          cell.zeta = lerch_zeta(query, options).value;
          cell.euler = euler_number_closed(EulerQuery<Complex>{k, ctx, std::nullopt});
        }
        cell.abs_diff = std::abs(*cell.zeta - *cell.euler);
      } catch (const Error& e) {
        cell.error = e.what();
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace qtwist
