#include "suites.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "qtwist/fermionic.hpp"
#include "qtwist/genfunc.hpp"
#include "qtwist/qeuler.hpp"
#include "qtwist/zeta.hpp"
#include "values.hpp"

namespace qtwist::cli {

namespace {

const std::array kBridgeQ{Rational(1, 3), Rational(1, 2), Rational(3, 5)};
const std::array kBridgeW{Rational(1, 4), Rational(1, 2), Rational(1)};

struct Tally {
  SuiteResult result;
  std::string first_failure;

  explicit Tally(std::string name) { result.identity = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result.cases;
    if (ok) return;
    if (result.failures++ == 0) first_failure = describe();
  }

  void deviation(Real d) { result.max_deviation = std::max(result.max_deviation.value_or(0), d); }

  SuiteResult finish(std::string detail = {}) {
    result.detail = result.failures ? "first failure: " + first_failure : std::move(detail);
    return result;
  }
};

std::string where(int n, int r, const Rational& q, const Rational& w) {
  return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " q=" + q.str() + " w=" + w.str();
}

Real gap(const Rational& a, const Rational& b) { return (a - b).abs().to_long_double(); }

// t^r applied to the EGF whose coefficients are E_0..E_order.
SuiteResult bridge() {
  Tally tally("bridge");
  constexpr int kMaxN = 12;
  for (const auto& q : kBridgeQ) {
    for (const auto& w : kBridgeW) {
      for (int r = 1; r <= 4; ++r) {
        const ExactContext ctx{q, w, r};
        std::vector<Rational> e;
        for (int n = 0; n <= kMaxN + r; ++n) e.push_back(euler_number_closed(EulerQuery<Rational>{n, ctx, {}}));
        const FormalSeries shifted = multiply_by_t_power(FormalSeries(e), r);
        for (int n = 0; n <= kMaxN; ++n) {
          const Rational g = genocchi_number(GenocchiQuery<Rational>{n + r, ctx, {}});
          const Rational scale(BigInt(factorial(static_cast<unsigned long>(r)) *
                                      binom(static_cast<unsigned long>(n + r), static_cast<unsigned long>(r))));
          const auto m = static_cast<std::size_t>(n + r);
          tally.deviation(gap(g, shifted[m]));
          tally.check(g == scale * e[static_cast<std::size_t>(n)] && g == shifted[m], [&] { return where(n, r, q, w); });
        }
      }
    }
  }
  return tally.finish("exact equality on n <= 12, r <= 4");
}

SuiteResult vanishing() {
  Tally tally("vanishing");
  for (const auto& q : kBridgeQ) {
    for (const auto& w : kBridgeW) {
      for (int r = 1; r <= 4; ++r) {
        const ExactContext ctx{q, w, r};
        for (int m = 0; m < r; ++m) {
          tally.check(genocchi_number(GenocchiQuery<Rational>{m, ctx, {}}).is_zero(), [&] { return where(m, r, q, w); });
          for (long x : {0L, 1L, 3L}) {
            tally.check(genocchi_poly(GenocchiQuery<Rational>{m, ctx, x}).is_zero(),
                        [&] { return where(m, r, q, w) + " x=" + std::to_string(x); });
          }
        }
      }
    }
  }
  return tally.finish("G_m = 0 for every m < r");
}

SuiteResult dual_path() {
  Tally tally("dual-path");
  for (const Rational& q : {Rational(1, 3), Rational(1, 2)}) {
    for (const Rational& w : {Rational(1, 4), Rational(1, 2), Rational(9, 10)}) {
      for (int r = 1; r <= 4; ++r) {
        const ExactContext ctx{q, w, r};
        for (int n = 0; n <= 12; ++n) {
          const Rational closed = euler_number_closed(EulerQuery<Rational>{n, ctx, {}});
          const auto series = euler_number_series(EulerQuery<Complex>{n, to_floating(ctx), {}}, 1e-12);
          const Real d = std::abs(series.value - to_complex(closed));
          tally.deviation(d);
          tally.check(d <= 1e-10, [&] { return where(n, r, q, w); });
        }
      }
    }
  }
  return tally.finish("closed l-sum vs negative-binomial series, tolerance 1e-10");
}

SuiteResult interpolation() {
  Tally tally("interpolation");
  std::vector<InterpolationPoint> grid;
  for (Real q : {1.0L / 3, 0.5L}) {
    for (Real modulus : {0.25L, 0.5L, 0.9L}) {
      for (Real angle : {0.0L, 1.0L, 2.5L}) {
        for (int r = 1; r <= 2; ++r) {
          const Complex w = std::polar(modulus, angle);
          grid.push_back(InterpolationPoint{q, w, r, std::nullopt});
          for (Real x : {1.0L, 2.0L, 2.5L}) grid.push_back(InterpolationPoint{q, w, r, x});
        }
      }
      grid.push_back(InterpolationPoint{q, Complex(-modulus), 1, std::nullopt});
      grid.push_back(InterpolationPoint{q, Complex(-modulus), 2, 2.5L});
    }
  }
  for (const auto& cell : interpolation_report(8, grid)) {
    auto describe = [&] {
      std::string s = "k=" + std::to_string(cell.k) + " r=" + std::to_string(cell.point.r);
      if (cell.point.x) s += " x=" + std::to_string(static_cast<double>(*cell.point.x));
      return cell.error.empty() ? s : s + ": " + cell.error;
    };
    if (!cell.error.empty()) {
      tally.check(false, describe);
      continue;
    }
    tally.deviation(*cell.abs_diff);
    tally.check(*cell.abs_diff <= 1e-9, describe);
  }
  return tally.finish("zeta(-k) vs E_k and zeta(-k, x) vs E_k(x), k = 1..8, tolerance 1e-9");
}

// p^{N r} nested sum with no collapse.
Rational nested_sum(int n, const Rational& q, const Rational& w, int r, long points) {
  const Rational c = (Rational(1) + q) / (Rational(1) + ipow(q, points));
  Rational total(0);
  std::vector<long> x(static_cast<std::size_t>(r), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t depth) {
    if (depth == x.size()) {
      long s = 0;
      Rational measure(1);
      for (long xi : x) {
        s += xi;
        measure *= ipow(-q, xi);
      }
      total += ipow(w, s) * ipow(q_bracket(s, q, QLimit::allow), n) * ipow(q, -s) * measure;
      return;
    }
    for (long v = 0; v < points; ++v) {
      x[depth] = v;
      walk(depth + 1);
    }
  };
  walk(0);
  return ipow(c, r) * total;
}

SuiteResult witt() {
  Tally tally("witt");
  const Rational q(4);
  std::string sample;
  for (const Rational& w : {Rational(1), Rational(4)}) {
    const PadicParams params(q, w, 3);
    for (int r = 1; r <= 2; ++r) {
      for (int n = 0; n <= 2; ++n) {
        const auto report = witt_verify(n, params, r, r == 1 ? 4 : 3);
        std::string valuations;
        for (const auto& v : report.valuations()) valuations += (valuations.empty() ? "" : ",") + v.str();
        if (n == 1 && r == 1 && w == Rational(1)) sample = valuations;
        tally.check(strictly_increasing(report.valuations()),
                    [&] { return where(n, r, q, w) + " valuations " + valuations; });
      }
      for (int n = 0; n <= 3; ++n) {
        for (int rr = 1; rr <= 3; ++rr) {
          const Rational collapsed = multi_riemann_sum(n, params, rr, PadicLevel(3, 1));
          tally.check(collapsed == nested_sum(n, q, w, rr, 3),
                      [&] { return "collapse mismatch " + where(n, rr, q, w); });
        }
      }
    }
  }
  return tally.finish("p=3 q=4: residual valuations strictly increase (n=1 r=1 w=1: " + sample +
                      "); collapse equals nested sum at N=1");
}

SuiteResult shift() {
  Tally tally("shift");
  const Rational q(4);
  const PadicLevel level(3, 3);
  const std::array integrands{constant_integrand(Rational(1)), q_bracket_integrand(q), power_integrand(Rational(4))};
  for (const auto& f : integrands) {
    for (const auto& row : check_shift_identity(f, q, level)) {
      tally.check(row.finite_residual == row.predicted_residual,
                  [&] { return f.label + " N=" + std::to_string(row.level); });
    }
    for (long n = 1; n <= 3; ++n) {
      std::vector<Valuation> v;
      for (const auto& row : check_multi_shift(f, n, q, level)) v.push_back(row.valuation);
      tally.check(nondecreasing(v), [&] { return f.label + " n=" + std::to_string(n) + " multi-shift"; });
    }
  }
  return tally.finish("finite residual = c_N q^{p^N} f(p^N); multi-shift valuations nondecreasing");
}

SuiteResult classical_limit() {
  Tally tally("classical-limit");
  const Rational step(1, 100'000'000);
  const Rational q = Rational(1) - step;
  Rational worst_slope(0);
  Real worst_relative = 0;
  for (int r = 1; r <= 3; ++r) {
    const auto classical = classical_euler_series(Rational(1), r, Rational(0), 8);
    for (int n = 0; n <= 8; ++n) {
      const Rational& limit = classical[static_cast<std::size_t>(n)];
      const Rational near = euler_number_closed(EulerQuery<Rational>{n, ExactContext{q, Rational(1), r}, {}});
      const Real d = gap(near, limit);
      tally.deviation(d);
      worst_relative = std::max(worst_relative, d / std::max<Real>(1, limit.abs().to_long_double()));
      if ((near - limit).abs() / step > worst_slope.abs()) worst_slope = (near - limit) / step;
      tally.check(d <= 1e-5, [&] { return where(n, r, q, Rational(1)); });
    }
  }
  const auto genocchi = classical_genocchi_series(Rational(1), 1, Rational(0), 6);
  const std::vector<Rational> expected{Rational(0), Rational(1), Rational(-1), Rational(0),
                                       Rational(1), Rational(0), Rational(-3)};
  tally.check(genocchi.coefficients() == expected, [] { return std::string("classical Genocchi sequence"); });
  SuiteResult result = tally.finish("q = 1 - 1e-8 vs classical coefficients, tolerance 1e-5; G = (0, 1, -1, 0, 1, 0, -3)");
  // The gap is the exact first-order term in 1 - q, not rounding.
  result.detail += "; largest gap/(1-q) = " + format_real(worst_slope.to_long_double()) +
                   ", largest gap/max(1,|E|) = " + format_real(worst_relative);
  return result;
}

SuiteResult comparator() {
  Tally tally("comparator");
  const Rational half(1, 2);
  const auto other = cos_genocchi_series(1, 1, half, 6);
  std::optional<int> witness;
  for (int n = 0; n <= 6 && !witness; ++n) {
    const Rational ours = genocchi_number(GenocchiQuery<Rational>{n, ExactContext{half, half, 1}, {}});
    if (ours != other[static_cast<std::size_t>(n)]) witness = n;
  }
  tally.check(witness.has_value(), [] { return std::string("no differing index n <= 6"); });
  if (!witness) return tally.finish();
  const auto n = static_cast<std::size_t>(*witness);
  const Rational ours = genocchi_number(GenocchiQuery<Rational>{*witness, ExactContext{half, half, 1}, {}});
  return tally.finish("witness n=" + std::to_string(*witness) + ": G_(h=1,r=1),q=1/2 = " + other[n].str() +
                      ", G_w=1/2,q=1/2 = " + ours.str());
}

SuiteResult egf_shift() {
  Tally tally("egf-shift");
  constexpr int kMaxN = 8;
  constexpr long kCutoff = 80;
  for (const Rational& q : {Rational(1, 3), Rational(1, 2)}) {
    for (const Rational& w : {Rational(1, 4), Rational(1, 2), Rational(-1, 4), Rational(-1, 2)}) {
      for (int r = 1; r <= 3; ++r) {
        const auto egf = q_euler_egf(w, q, r, 0, kCutoff, static_cast<std::size_t>(kMaxN + r));
        const FormalSeries shifted = multiply_by_t_power(egf.series, r);
        for (int n = 0; n <= kMaxN; ++n) {
          const auto m = static_cast<std::size_t>(n + r);
          const Rational g = genocchi_number(GenocchiQuery<Rational>{n + r, ExactContext{q, w, r}, {}});
          const Real scale = Rational(factorial(m), factorial(static_cast<unsigned long>(n))).to_long_double();
          const Real bound = egf.tail_bounds[static_cast<std::size_t>(n)] * scale;
          const Real d = gap(shifted[m], g);
          tally.deviation(d);
          tally.check(d <= bound && bound < 1e-6, [&] { return where(n, r, q, w); });
        }
      }
    }
  }
  return tally.finish("coefficient n+r of t^r F(t) vs G_{n+r}, within the scaled tail bound");
}

constexpr std::array kSuites{
    Suite{"bridge", "G_{n+r} = r! C(n+r, r) E_n, exact", bridge},
    Suite{"vanishing", "G_m = 0 and G_m(x) = 0 below the order", vanishing},
    Suite{"dual-path", "closed form vs series form of E_n", dual_path},
    Suite{"interpolation", "zeta at negative integers vs E_k", interpolation},
    Suite{"witt", "r-fold Riemann sums converge 3-adically to E_n", witt},
    Suite{"shift", "exact residuals of the shift identities", shift},
    Suite{"classical-limit", "q -> 1 recovers the classical numbers", classical_limit},
    Suite{"comparator", "the (h, r)-Genocchi numbers differ", comparator},
    Suite{"egf-shift", "t^r times the generating function gives G", egf_shift},
};

}  // namespace

std::span<const Suite> suites() { return kSuites; }

const Suite* find_suite(std::string_view name) {
  if (name == "theorem4") name = "bridge";
  for (const auto& suite : kSuites) {
    if (suite.name == name) return &suite;
  }
  return nullptr;
}

}  // namespace qtwist::cli
