#include "qtwist/fermionic.hpp"

#include <utility>

#include "qtwist/genfunc.hpp"
#include "qtwist/qeuler.hpp"

namespace qtwist {

namespace {

constexpr long kMaxPoints = 1L << 24;

void require_odd_prime(long p) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw Error(ErrorKind::argument, "p must be an odd prime, got " + std::to_string(p));
  }
}

}  // namespace

PadicLevel::PadicLevel(long p, int level) : p_(p), level_(level), points_(1) {
  require_odd_prime(p);
  if (level < 1) {
    throw Error(ErrorKind::argument, "level N must be >= 1, got " + std::to_string(level));
  }
  for (int i = 0; i < level; ++i) {
    if (points_ > kMaxPoints / p) {
      throw Error(ErrorKind::argument, "p^N is too large for a finite Riemann sum");
    }
    points_ *= p;
  }
}

PadicParams::PadicParams(Rational q, Rational w, long p) : q_(std::move(q)), w_(std::move(w)), p_(p) {
  require_odd_prime(p);
  const Valuation one(1);
  if (padic_valuation(q_ - Rational(1), p) < one) {
    throw Error(ErrorKind::precondition,
                "congruence precondition failed: need v_p(q - 1) >= 1, got v_" + std::to_string(p) + "(" +
                    q_.str() + " - 1) = " + padic_valuation(q_ - Rational(1), p).str());
  }
  if (padic_valuation(w_ - Rational(1), p) < one) {
    throw Error(ErrorKind::precondition,
                "congruence precondition failed: need v_p(w - 1) >= 1, got v_" + std::to_string(p) + "(" +
                    w_.str() + " - 1) = " + padic_valuation(w_ - Rational(1), p).str());
  }
}

Integrand constant_integrand(const Rational& value) {
  return Integrand{[value](long) { return value; }, "const " + value.str()};
}

Integrand q_bracket_integrand(const Rational& q) {
  return Integrand{[q](long x) { return q_bracket(x, q, QLimit::allow); }, "[x]_q"};
}

Integrand power_integrand(const Rational& w) {
  return Integrand{[w](long x) { return ipow(w, x); }, "w^x, w = " + w.str()};
}

Integrand shifted(const Integrand& f, long n) {
  return Integrand{[f, n](long x) { return f(x + n); }, f.label + " shifted by " + std::to_string(n)};
}

Rational level_normalizer(const Rational& q, const PadicLevel& level) {
  const Rational denom = Rational(1) + ipow(q, level.points());
  if (denom.is_zero()) {
    throw PoleError(level.points(), "1 + q^{p^N} = 0");
  }
  return (Rational(1) + q) / denom;
}

Rational riemann_sum(const Integrand& f, const Rational& q, const PadicLevel& level) {
  const Rational c = level_normalizer(q, level);
  const Rational minus_q = -q;
  Rational sum(0);
  Rational weight(1);  // (-q)^x
  for (long x = 0; x < level.points(); ++x) {
    sum += f(x) * weight;
    weight *= minus_q;
  }
  return c * sum;
}

std::vector<ShiftLevel> check_shift_identity(const Integrand& f, const Rational& q, const PadicLevel& level) {
  const Integrand f1 = shifted(f, 1);
  const Rational f0 = f(0);
  std::vector<ShiftLevel> out;
  for (int n_level = 1; n_level <= level.level(); ++n_level) {
    const PadicLevel at(level.p(), n_level);
    const Rational c = level_normalizer(q, at);
    const Rational lhs = q * riemann_sum(f1, q, at) + riemann_sum(f, q, at);

    ShiftLevel row;
    row.level = n_level;
    row.finite_residual = lhs - c * f0;
    row.predicted_residual = c * ipow(q, at.points()) * f(at.points());
    row.limit_residual = lhs - (Rational(1) + q) * f0;
    row.valuation = padic_valuation(row.limit_residual, level.p());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<MultiShiftLevel> check_multi_shift(const Integrand& f, long n, const Rational& q,
                                               const PadicLevel& level) {
  if (n < 1) throw Error(ErrorKind::argument, "shift n must be >= 1");
  const Integrand fn = shifted(f, n);
  const Rational two = two_bracket(q);
  const Rational sign_n = n % 2 == 0 ? Rational(1) : Rational(-1);

  Rational boundary(0);  // sum_{l<n} (-1)^{n-1-l} q^l f(l)
  for (long l = 0; l < n; ++l) {
    const Rational term = ipow(q, l) * f(l);
    if ((n - 1 - l) % 2 == 0) {
      boundary += term;
    } else {
      boundary -= term;
    }
  }

  std::vector<MultiShiftLevel> out;
  for (int n_level = 1; n_level <= level.level(); ++n_level) {
    const PadicLevel at(level.p(), n_level);
    MultiShiftLevel row;
    row.level = n_level;
    row.residual = ipow(q, n) * riemann_sum(fn, q, at) - sign_n * riemann_sum(f, q, at) - two * boundary;
    row.valuation = padic_valuation(row.residual, level.p());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<BigInt> composition_counts(int r, long points) {
  if (r < 1) throw Error(ErrorKind::argument, "r must be >= 1");
  if (points < 1) throw Error(ErrorKind::argument, "need at least one point");
  const long top = static_cast<long>(r) * (points - 1);
  std::vector<BigInt> counts(static_cast<std::size_t>(top + 1));
  const auto ur = static_cast<unsigned long>(r);
  for (long s = 0; s <= top; ++s) {
    BigInt total(0);
    for (int j = 0; j <= r; ++j) {
      const long rest = s - j * points;
      if (rest < 0) break;
      const BigInt term = binom(ur, static_cast<unsigned long>(j)) *
                          binom(static_cast<unsigned long>(rest) + ur - 1, ur - 1);
      if (j % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    counts[static_cast<std::size_t>(s)] = total;
  }
  return counts;
}

Rational multi_riemann_sum(int n, const PadicParams& params, int r, const PadicLevel& level) {
  if (n < 0) throw Error(ErrorKind::argument, "n must be >= 0");
  if (r < 1) throw Error(ErrorKind::argument, "r must be >= 1");
  if (params.p() != level.p()) {
    throw Error(ErrorKind::argument, "parameters and level refer to different primes");
  }
  const Rational& q = params.q();
  const Rational c = level_normalizer(q, level);
  const std::vector<BigInt> counts = composition_counts(r, level.points());

  const Rational minus_w = -params.w();
  Rational sum(0);
  Rational weight(1);  // (-w)^s
  for (std::size_t s = 0; s < counts.size(); ++s) {
    const auto si = static_cast<std::int64_t>(s);
    sum += Rational(counts[s]) * weight * ipow(q_bracket(si, q, QLimit::allow), n);
    weight *= minus_w;
  }
  return ipow(c, r) * sum;
}

std::vector<Valuation> WittReport::valuations() const {
  std::vector<Valuation> out;
  out.reserve(levels.size());
  for (const auto& l : levels) out.push_back(l.valuation);
  return out;
}

WittReport witt_verify(int n, const PadicParams& params, int r, int level_max) {
  if (level_max < 1) throw Error(ErrorKind::argument, "level_max must be >= 1");
  WittReport report;
  if (params.q() == Rational(1)) {
    const FormalSeries classical =
        classical_euler_series(params.w(), r, Rational(0), static_cast<std::size_t>(n));
    report.target = classical[static_cast<std::size_t>(n)];
  } else {
    report.target = euler_number_closed(EulerQuery<Rational>{n, ExactContext{params.q(), params.w(), r}, {}});
  }
  for (int level = 1; level <= level_max; ++level) {
    WittLevel row;
    row.level = level;
    row.approximant = multi_riemann_sum(n, params, r, PadicLevel(params.p(), level));
    row.residual = row.approximant - report.target;
    row.valuation = padic_valuation(row.residual, params.p());
    report.levels.push_back(std::move(row));
  }
  return report;
}

bool strictly_increasing(const std::vector<Valuation>& valuations) {
  for (std::size_t i = 1; i < valuations.size(); ++i) {
    const Valuation& prev = valuations[i - 1];
    const Valuation& next = valuations[i];
    if (prev.is_infinite()) {
      if (!next.is_infinite()) return false;
    } else if (!(prev < next)) {
      return false;
    }
  }
  return true;
}

bool nondecreasing(const std::vector<Valuation>& valuations) {
  for (std::size_t i = 1; i < valuations.size(); ++i) {
    if (valuations[i] < valuations[i - 1]) return false;
  }
  return true;
}

}  // namespace qtwist
