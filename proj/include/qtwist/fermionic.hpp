#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtwist/numerics.hpp"

namespace qtwist {

/// Odd prime p and level N; Riemann sums run over 0 <= x < p^N.
class PadicLevel {
 public:
  PadicLevel(long p, int level);

  long p() const { return p_; }
  int level() const { return level_; }
  /// p^N as a machine integer; levels are small by construction.
  long points() const { return points_; }

 private:
  long p_;
  int level_;
  long points_;
};

/// (q, w) subject to v_p(q - 1) >= 1 and v_p(w - 1) >= 1, i.e. |1-q|_p < 1
/// and |1-w|_p < 1. q = 1 selects the plain fermionic measure mu_{-1}.
class PadicParams {
 public:
  PadicParams(Rational q, Rational w, long p);

  const Rational& q() const { return q_; }
  const Rational& w() const { return w_; }
  long p() const { return p_; }

 private:
  Rational q_;
  Rational w_;
  long p_;
};

struct Integrand {
  std::function<Rational(long)> eval;
  std::string label;

  Rational operator()(long x) const { return eval(x); }
};

Integrand constant_integrand(const Rational& value);
/// f(x) = [x]_q (with the q -> 1 limit x when q = 1).
Integrand q_bracket_integrand(const Rational& q);
/// f(x) = w^x.
Integrand power_integrand(const Rational& w);
/// f_n(x) = f(x + n).
Integrand shifted(const Integrand& f, long n);

/// c_N = (1 + q) / (1 + q^{p^N}); throws a pole error if the denominator vanishes.
Rational level_normalizer(const Rational& q, const PadicLevel& level);

/// S_N(f) = c_N sum_{x=0}^{p^N - 1} f(x) (-q)^x.
Rational riemann_sum(const Integrand& f, const Rational& q, const PadicLevel& level);

struct ShiftLevel {
  int level = 0;
  /// q S_N(f_1) + S_N(f) - c_N f(0); equals c_N q^{p^N} f(p^N) identically.
  Rational finite_residual;
  /// c_N q^{p^N} f(p^N), evaluated independently of the sums.
  Rational predicted_residual;
  /// q S_N(f_1) + S_N(f) - (1 + q) f(0), the defect against the limit identity.
  Rational limit_residual;
  Valuation valuation = Valuation::infinity();  // v_p(limit_residual)
};

/// Finite-level check of q I(f_1) + I(f) = (1 + q) f(0) for N = 1..level.
std::vector<ShiftLevel> check_shift_identity(const Integrand& f, const Rational& q, const PadicLevel& level);

struct MultiShiftLevel {
  int level = 0;
  /// q^n S_N(f_n) - (-1)^n S_N(f) - [2]_q sum_{l<n} (-1)^{n-1-l} q^l f(l).
  Rational residual;
  Valuation valuation = Valuation::infinity();
};

/// Finite-level check of
///   q^n I(f_n) = (-1)^n I(f) + [2]_q sum_{l=0}^{n-1} (-1)^{n-1-l} q^l f(l)
/// for N = 1..level.
std::vector<MultiShiftLevel> check_multi_shift(const Integrand& f, long n, const Rational& q,
                                               const PadicLevel& level);

/// K_r(s) = #{x in [0, p^N)^r : x_1 + ... + x_r = s} for s = 0..r(p^N - 1),
/// by inclusion-exclusion over coordinates that overflow.
std::vector<BigInt> composition_counts(int r, long points);

/// r-fold finite-level approximant of
///   int w^{x_1+..+x_r} [x_1+..+x_r]_q^n q^{-(x_1+..+x_r)} dmu_{-q}(x_1)..dmu_{-q}(x_r).
/// Each coordinate's weight (-q)^x w^x q^{-x} collapses to (-w)^x and the
/// integrand only sees s = sum x_i, so the sum runs over s with multiplicity
/// K_r(s): O(r p^N) terms instead of p^{N r}.
Rational multi_riemann_sum(int n, const PadicParams& params, int r, const PadicLevel& level);

struct WittLevel {
  int level = 0;
  Rational approximant;  // multi_riemann_sum at this level
  Rational residual;     // approximant - target
  Valuation valuation = Valuation::infinity();
};

struct WittReport {
  Rational target;  // E_{n,w,q}^{(r)}, or the classical E_{n,w}^{(r)} when q = 1
  std::vector<WittLevel> levels;

  std::vector<Valuation> valuations() const;
};

/// Residual valuations of the r-fold Riemann sums against the closed value,
/// N = 1..level_max.
WittReport witt_verify(int n, const PadicParams& params, int r, int level_max);

/// True when each valuation exceeds the previous one. An exactly vanishing
/// residual (infinite valuation) may only be followed by another vanishing
/// residual: exact agreement is kept, never lost.
bool strictly_increasing(const std::vector<Valuation>& valuations);
bool nondecreasing(const std::vector<Valuation>& valuations);

}  // namespace qtwist
