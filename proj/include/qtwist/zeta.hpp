#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtwist/numerics.hpp"

namespace qtwist {

enum class ZetaMethod { direct, accelerated };

std::string_view to_string(ZetaMethod method) noexcept;

struct ZetaOptions {
  /// The direct method needs |w| <= 1 - delta.
  Real delta = 0.05;
  /// Stop once the error estimate is below tolerance * max(1, |partial sum|).
  Real tolerance = 1e-17;
  long direct_cap = 100'000;
  long accelerated_cap = 2'000;
};

/// s, real q in (0, 1), w with |w| <= 1 and w != -1, order r, and the
/// optional Hurwitz shift x (x not in {0, -1, -2, ...}).
struct ZetaQuery {
  Complex s;
  Real q = 0.5;
  Complex w;
  int r = 1;
  std::optional<Complex> x;
  ZetaMethod method = ZetaMethod::direct;
};

struct ZetaValue {
  Complex value;
  ZetaMethod method = ZetaMethod::direct;
  /// Direct: rigorous tail bound plus a rounding estimate. Accelerated:
  /// empirical, from the size of the last transform terms.
  Real error_estimate = 0;
  long terms = 0;
  bool rigorous = false;
};

/// Thrown when the iteration cap is hit; keeps the partial value.
class ZetaNonConvergence : public Error {
 public:
  ZetaNonConvergence(const std::string& message, ZetaValue partial)
      : Error(ErrorKind::non_convergence, message), partial_(partial) {}

  const ZetaValue& partial() const noexcept { return partial_; }

 private:
  ZetaValue partial_;
};

/// zeta_{q,w}^{(r)}(s) = [2]_q^r sum_{m>=1} C(m+r-1, m) (-1)^m w^m / [m]_q^s.
ZetaValue lerch_zeta(const ZetaQuery& query, const ZetaOptions& options = {});

/// zeta_{q,w}^{(r)}(s, x) = [2]_q^r sum_{m>=0} C(m+r-1, m) (-1)^m w^m / [m+x]_q^s.
ZetaValue hurwitz_zeta(const ZetaQuery& query, const ZetaOptions& options = {});

/// The common kernel: [2]_q^r sum_{m>=first} C(m+r-1, m) (-w)^m [m+x]_q^{-s}.
/// Unlike hurwitz_zeta it accepts x = 0 as long as first >= 1.
ZetaValue shifted_lerch_sum(const Complex& s, Real q, const Complex& w, int r, const Complex& x, long first,
                            ZetaMethod method, const ZetaOptions& options = {});

struct InterpolationPoint {
  Real q = 0.5;
  Complex w;
  int r = 1;
  std::optional<Real> x;  // absent: Lerch form vs numbers; present: Hurwitz form vs polynomials
};

struct InterpolationCell {
  InterpolationPoint point;
  int k = 0;
  std::optional<Complex> zeta;
  std::optional<Complex> euler;
  std::optional<Real> abs_diff;
  std::string error;  // empty when both paths succeeded
};

/// zeta(-k) against E_k (or zeta(-k, x) against E_k(x)) for every grid point
/// and k = 1..k_max, in grid order. Cell failures are recorded, not thrown.
std::vector<InterpolationCell> interpolation_report(int k_max, std::span<const InterpolationPoint> grid,
                                                    const ZetaOptions& options = {});

}  // namespace qtwist
