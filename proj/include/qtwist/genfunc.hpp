#pragma once

#include <cstddef>
#include <vector>

#include "qtwist/numerics.hpp"

namespace qtwist {

inline constexpr std::size_t kDefaultTruncation = 16;

/// Truncated exponential generating function sum_{k<=T} a_k t^k / k!.
/// Index k holds a_k (the "divided" coefficient), so products are binomial
/// convolutions and multiplication by t^r is an index shift with a falling
/// factorial.
class FormalSeries {
 public:
  /// Needs at least one coefficient; the order is size() - 1.
  explicit FormalSeries(std::vector<Rational> coefficients);

  static FormalSeries constant(const Rational& value, std::size_t order);
  /// e^{a t}: coefficients a^k.
  static FormalSeries exponential(const Rational& a, std::size_t order);

  std::size_t order() const { return coefficients_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coefficients_.at(k); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  FormalSeries truncated(std::size_t order) const;

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
FormalSeries operator*(const Rational& scalar, const FormalSeries& a);

/// Coefficient k of the product is sum_j C(k, j) a_j b_{k-j}, at order min(T_a, T_b).
FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b);

/// Multiplicative inverse; throws a singular error when a_0 = 0.
FormalSeries series_inverse(const FormalSeries& a);

FormalSeries series_pow(const FormalSeries& a, int exponent);

/// t^r a(t) at the same order: coefficient m becomes m!/(m-r)! a_{m-r}.
FormalSeries multiply_by_t_power(const FormalSeries& a, int r);

/// (2 / (w e^t + 1))^r e^{x t}; coefficient n is E_{n,w}^{(r)}(x).
FormalSeries classical_euler_series(const Rational& w, int r, const Rational& x,
                                    std::size_t order = kDefaultTruncation);

/// t^r (2 / (w e^t + 1))^r e^{x t}; coefficient m is G_{m,w}^{(r)}(x).
FormalSeries classical_genocchi_series(const Rational& w, int r, const Rational& x,
                                       std::size_t order = kDefaultTruncation);

/// 2^r t^r / prod_{v=0}^{r-1} (q^{h-v} e^t + 1), the (h, r)-Genocchi numbers
/// G_{n,q}^{(h,r)} built from the r shifted factors.
FormalSeries cos_genocchi_series(long h, int r, const Rational& q, std::size_t order = kDefaultTruncation);

struct TruncatedEgf {
  FormalSeries series;
  /// tail_bounds[k] bounds |E_k - series[k]| (the neglected m > cutoff mass);
  /// +infinity when the bound is not yet in its geometric regime.
  std::vector<Real> tail_bounds;
  long cutoff = 0;
};

/// Partial sum over m <= cutoff of
///   [2]_q^r C(m+r-1, m) (-w)^m e^{[m+x]_q t},
/// whose coefficient k approximates E_{k,w,q}^{(r)}(x). Needs |w| < 1 and |q| < 1.
TruncatedEgf q_euler_egf(const Rational& w, const Rational& q, int r, long x, long cutoff,
                         std::size_t order = kDefaultTruncation);

}  // namespace qtwist
