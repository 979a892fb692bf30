#pragma once

#include <optional>

#include "qtwist/numerics.hpp"

namespace qtwist {

/// Index n, context (q, w, r) and optional argument x of E_{n,w,q}^{(r)}(x).
/// An absent x means the number, i.e. x = 0.
template <class Scalar>
struct EulerQuery {
  int n = 0;
  QContext<Scalar> ctx;
  std::optional<poly_argument_t<Scalar>> x;
};

/// Index m of G_{m,w,q}^{(r)}(x); same conventions as EulerQuery.
template <class Scalar>
struct GenocchiQuery {
  int m = 0;
  QContext<Scalar> ctx;
  std::optional<poly_argument_t<Scalar>> x;
};

/// Finite l-sum
///   E_{n,w,q}^{(r)} = (1-q)^{-n} sum_{l=0}^{n} C(n,l) (-1)^l ([2]_q / (1 + w q^l))^r.
/// This is the canonical definition for every w, including |w| >= 1.
/// Throws PoleError naming l when 1 + w q^l = 0, and a precondition error
/// for q = 1 (the classical values live in genfunc).
template <class Scalar>
Scalar euler_number_closed(const EulerQuery<Scalar>& query);

/// E_{n,w,q}^{(r)}(x): the l-sum above with the extra weight q^{l x}.
/// Requires query.x.
template <class Scalar>
Scalar euler_poly_closed(const EulerQuery<Scalar>& query);

/// G_{m,w,q}^{(r)}: zero for m < r, otherwise r! C(m, r) E_{m-r,w,q}^{(r)}.
template <class Scalar>
Scalar genocchi_number(const GenocchiQuery<Scalar>& query);

/// G_{m,w,q}^{(r)}(x): zero for m < r, otherwise r! C(m, r) E_{m-r,w,q}^{(r)}(x).
template <class Scalar>
Scalar genocchi_poly(const GenocchiQuery<Scalar>& query);

struct SeriesValue {
  Complex value;
  long terms = 0;       // number of m-terms summed
  Real tail_bound = 0;  // rigorous bound on the neglected tail
};

/// Truncated negative-binomial series
///   [2]_q^r sum_m C(m+r-1, m) (-w)^m [m + x]_q^n,
/// stopped once the tail bound drops below tol. Needs |w| < 1 and 0 < |q| < 1.
///
/// Tail bound after M terms, using |[m+x]_q| <= 1/(1-|q|) and
/// C(m+r-1, m) <= (m+1)^{r-1}:
///   |[2]_q|^r (1-|q|)^{-n} (M+1)^{r-1} |w|^M / (1 - rho),
///   rho = ((M+2)/(M+1))^{r-1} |w|,
/// valid once rho < 1.
SeriesValue euler_number_series(const EulerQuery<Complex>& query, Real tol);

/// Same series as euler_number_series, with [m + x]_q in place of [m]_q.
SeriesValue euler_poly_series(const EulerQuery<Complex>& query, Real tol);

FloatContext to_floating(const ExactContext& ctx);

extern template Rational euler_number_closed(const EulerQuery<Rational>&);
extern template Complex euler_number_closed(const EulerQuery<Complex>&);
extern template Rational euler_poly_closed(const EulerQuery<Rational>&);
extern template Complex euler_poly_closed(const EulerQuery<Complex>&);
extern template Rational genocchi_number(const GenocchiQuery<Rational>&);
extern template Complex genocchi_number(const GenocchiQuery<Complex>&);
extern template Rational genocchi_poly(const GenocchiQuery<Rational>&);
extern template Complex genocchi_poly(const GenocchiQuery<Complex>&);

}  // namespace qtwist
