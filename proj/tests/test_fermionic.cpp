#include <functional>

#include "doctest.h"
#include "qtwist/fermionic.hpp"
#include "qtwist/qeuler.hpp"

using namespace qtwist;

namespace {

// Naive p^{N r}-term nested sum of
//   c_N^r sum w^{sum x} [sum x]_q^n q^{-sum x} prod (-q)^{x_i},
// with no use of the collapse.
Rational nested_sum(int n, const Rational& q, const Rational& w, int r, long points) {
  const Rational c = (Rational(1) + q) / (Rational(1) + ipow(q, points));
  Rational total(0);
  std::vector<long> x(static_cast<std::size_t>(r), 0);
  std::function<void(int)> walk = [&](int depth) {
    if (depth == r) {
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
      x[static_cast<std::size_t>(depth)] = v;
      walk(depth + 1);
    }
  };
  walk(0);
  return ipow(c, r) * total;
}

}  // namespace

TEST_CASE("level and parameter validation") {
  CHECK(PadicLevel(3, 4).points() == 81);
  CHECK_THROWS_AS(PadicLevel(4, 1), Error);
  CHECK_THROWS_AS(PadicLevel(2, 1), Error);
  CHECK_THROWS_AS(PadicLevel(3, 0), Error);
  CHECK_NOTHROW(PadicParams(Rational(4), Rational(1), 3));
  CHECK_NOTHROW(PadicParams(Rational(1), Rational(10), 3));
  try {
    PadicParams(Rational(2), Rational(1), 3);
    FAIL("expected congruence failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
  CHECK_THROWS_AS(PadicParams(Rational(4), Rational(2), 3), Error);
}

TEST_CASE("riemann_sum") {
  SUBCASE("normalization") {
    for (const Rational& q : {Rational(4), Rational(1), Rational(1, 2), Rational(-7, 3), Rational(10)}) {
      for (int level = 1; level <= 3; ++level) {
        CHECK(riemann_sum(constant_integrand(Rational(1)), q, PadicLevel(3, level)) == Rational(1));
      }
    }
    CHECK(riemann_sum(constant_integrand(Rational(1)), Rational(6), PadicLevel(5, 2)) == Rational(1));
  }
  SUBCASE("f(x) = x at q = 1") {
    const Integrand identity{[](long x) { return Rational(x); }, "x"};
    CHECK(riemann_sum(identity, Rational(1), PadicLevel(3, 2)) == Rational(4));
  }
  SUBCASE("pole") {
    // 1 + q^3 = 0 at q = -1
    CHECK_THROWS_AS(riemann_sum(constant_integrand(Rational(1)), Rational(-1), PadicLevel(3, 1)), PoleError);
  }
}

TEST_CASE("shift identity") {
  const Rational q(4);
  const PadicLevel level(3, 4);

  SUBCASE("finite residual is c_N q^{p^N} f(p^N)") {
    for (const Integrand& f : {constant_integrand(Rational(1)), q_bracket_integrand(q), power_integrand(Rational(4))}) {
      for (const auto& row : check_shift_identity(f, q, level)) {
        CHECK(row.finite_residual == row.predicted_residual);
      }
    }
  }

  SUBCASE("f = 1 at q = 1 balances exactly") {
    for (const auto& row : check_shift_identity(constant_integrand(Rational(1)), Rational(1), PadicLevel(3, 3))) {
      CHECK(row.finite_residual == Rational(1));
      CHECK(row.limit_residual.is_zero());
    }
  }

  SUBCASE("[x]_q residual valuations strictly increase") {
    std::vector<Valuation> v;
    for (const auto& row : check_shift_identity(q_bracket_integrand(q), q, level)) v.push_back(row.valuation);
    CHECK(v == std::vector<Valuation>{Valuation(1), Valuation(2), Valuation(3), Valuation(4)});
    CHECK(strictly_increasing(v));
  }

  SUBCASE("w^x residual valuations grow like N") {
    const auto rows = check_shift_identity(power_integrand(Rational(4)), q, level);
    for (const auto& row : rows) {
      REQUIRE_FALSE(row.valuation.is_infinite());
      CHECK(row.valuation.value() >= row.level - 1);
    }
  }
}

TEST_CASE("multi shift") {
  const Rational q(4);
  const PadicLevel level(3, 3);

  SUBCASE("n = 1 agrees with the single shift") {
    for (const Integrand& f : {q_bracket_integrand(q), power_integrand(Rational(7))}) {
      const auto single = check_shift_identity(f, q, level);
      const auto multi = check_multi_shift(f, 1, q, level);
      REQUIRE(single.size() == multi.size());
      for (std::size_t i = 0; i < single.size(); ++i) {
        CHECK(multi[i].residual == single[i].limit_residual);
        CHECK(multi[i].valuation == single[i].valuation);
      }
    }
  }

  SUBCASE("n = 2, f = 1 balances exactly") {
    for (const auto& row : check_multi_shift(constant_integrand(Rational(1)), 2, q, level)) {
      CHECK(row.residual.is_zero());
    }
  }

  SUBCASE("valuations are nondecreasing") {
    for (long n = 1; n <= 3; ++n) {
      for (const Integrand& f : {q_bracket_integrand(q), power_integrand(Rational(4)), constant_integrand(Rational(1))}) {
        std::vector<Valuation> v;
        for (const auto& row : check_multi_shift(f, n, q, level)) v.push_back(row.valuation);
        CHECK(nondecreasing(v));
      }
    }
  }
}

TEST_CASE("composition counts") {
  CHECK(composition_counts(2, 3) == std::vector<BigInt>{1, 2, 3, 2, 1});
  for (int r = 1; r <= 4; ++r) {
    for (long points : {3L, 5L, 9L}) {
      const auto k = composition_counts(r, points);
      BigInt total(0);
      for (const auto& c : k) total += c;
      CHECK(total == pow(BigInt(points), static_cast<unsigned long>(r)));
      for (std::size_t s = 0; s < k.size(); ++s) CHECK(k[s] == k[k.size() - 1 - s]);
    }
  }
}

TEST_CASE("collapsed multi sum equals the nested sum") {
  CHECK(multi_riemann_sum(1, PadicParams(Rational(4), Rational(1), 3), 2, PadicLevel(3, 1)) == Rational(56, 169));
  for (const Rational& w : {Rational(1), Rational(4), Rational(-2)}) {
    const PadicParams params(Rational(4), w, 3);
    for (int r = 1; r <= 3; ++r) {
      for (int n = 0; n <= 3; ++n) {
        CHECK(multi_riemann_sum(n, params, r, PadicLevel(3, 1)) == nested_sum(n, Rational(4), w, r, 3));
      }
    }
  }
  // mu_{-1} (q = 1)
  const PadicParams classical(Rational(1), Rational(1), 3);
  for (int r = 1; r <= 3; ++r) {
    CHECK(multi_riemann_sum(2, classical, r, PadicLevel(3, 1)) == nested_sum(2, Rational(1), Rational(1), r, 3));
  }
}

TEST_CASE("Witt-type convergence") {
  SUBCASE("n = 1, r = 1, w = 1 approaches -1/2") {
    const auto report = witt_verify(1, PadicParams(Rational(4), Rational(1), 3), 1, 4);
    CHECK(report.target == Rational(-1, 2));
    CHECK(strictly_increasing(report.valuations()));
  }
  SUBCASE("n = 2, r = 2, w = 4") {
    const auto report = witt_verify(2, PadicParams(Rational(4), Rational(4), 3), 2, 3);
    CHECK(report.target == euler_number_closed(EulerQuery<Rational>{2, ExactContext{Rational(4), Rational(4), 2}, {}}));
    CHECK(strictly_increasing(report.valuations()));
  }
  SUBCASE("p = 5, q = 6, n = 0") {
    const auto report = witt_verify(0, PadicParams(Rational(6), Rational(1), 5), 1, 3);
    CHECK(report.target == Rational(7, 2));
    CHECK(strictly_increasing(report.valuations()));
  }
  SUBCASE("classical case q = 1 targets the generating-function value") {
    const auto report = witt_verify(3, PadicParams(Rational(1), Rational(1), 3), 1, 4);
    CHECK(report.target == Rational(1, 4));
    CHECK(strictly_increasing(report.valuations()));
  }
}

TEST_CASE("monotonicity helpers") {
  const auto inf = Valuation::infinity();
  CHECK(strictly_increasing({Valuation(1), Valuation(2), inf, inf}));
  CHECK_FALSE(strictly_increasing({Valuation(1), Valuation(1)}));
  CHECK_FALSE(strictly_increasing({inf, Valuation(3)}));
  CHECK(nondecreasing({Valuation(1), Valuation(1), inf}));
  CHECK_FALSE(nondecreasing({Valuation(2), Valuation(1)}));
}
