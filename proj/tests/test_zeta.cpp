#include <cmath>
#include <vector>

#include "doctest.h"
#include "qtwist/qeuler.hpp"
#include "qtwist/zeta.hpp"

using namespace qtwist;

namespace {

// Independent route: expand [m+x]_q^{-s} = (1-q)^s sum_j (s)_j/j! q^{(m+x) j}
// and sum the m-series in closed form,
//   sum_{m>=first} C(m+r-1,m) (-w)^m q^{m j} = (1 + w q^j)^{-r} - [first = 1].
// Needs |q^x| < 1 (Re x > 0) when first = 0.
Complex binomial_expansion(const Complex& s, Real q, const Complex& w, int r, const Complex& x, long first) {
  const Complex q_to_x = std::exp(x * std::log(Complex(q)));
  Complex coeff(1);  // (s)_j / j!
  Complex qx_pow(1);
  Complex sum(0);
  for (int j = 0; j < 4000; ++j) {
    const Complex inner = std::pow(Complex(1) + w * std::pow(q, static_cast<Real>(j)), -r) - Complex(first == 1 ? 1 : 0);
    const Complex term = coeff * qx_pow * inner;
    sum += term;
    if (j > 20 && std::abs(term) < 1e-22L * std::max<Real>(1, std::abs(sum))) break;
    coeff *= (s + Complex(j)) / Complex(j + 1);
    qx_pow *= q_to_x;
  }
  return std::pow(Complex(1 + q), r) * std::exp(s * std::log(Complex(1 - q))) * sum;
}

Complex euler_closed(int k, Real q, const Complex& w, int r) {
  return euler_number_closed(EulerQuery<Complex>{k, FloatContext{Complex(q), w, r}, std::nullopt});
}

ZetaQuery query(Complex s, Real q, Complex w, int r, ZetaMethod method = ZetaMethod::direct) {
  return ZetaQuery{s, q, w, r, std::nullopt, method};
}

}  // namespace

TEST_CASE("Lerch zeta at negative integers") {
  for (int r = 1; r <= 2; ++r) {
    for (int k = 1; k <= 8; ++k) {
      const auto z = lerch_zeta(query(Complex(-k), 0.5L, Complex(0.5L), r));
      CHECK(std::abs(z.value - euler_closed(k, 0.5L, Complex(0.5L), r)) <= 1e-10);
      CHECK(z.rigorous);
    }
  }
}

TEST_CASE("Lerch zeta at s = 0 is a geometric series") {
  for (const Complex& w : {Complex(0.25L), Complex(-0.6L), Complex(0.3L, 0.4L)}) {
    const auto z = lerch_zeta(query(Complex(0), 0.5L, w, 1));
    CHECK(std::abs(z.value - (-Complex(1.5L) * w / (Complex(1) + w))) <= 1e-15);
  }
}

TEST_CASE("direct and accelerated methods agree") {
  const auto direct = lerch_zeta(query(Complex(2, 3), 0.5L, Complex(0.9L), 2));
  const auto accel = lerch_zeta(query(Complex(2, 3), 0.5L, Complex(0.9L), 2, ZetaMethod::accelerated));
  CHECK(std::abs(direct.value - accel.value) <= 1e-8);
  CHECK(accel.method == ZetaMethod::accelerated);
  CHECK_FALSE(accel.rigorous);

  const std::vector<Complex> ws{Complex(0.5L), Complex(0.75L), Complex(0.94L), Complex(-0.3L), Complex(-0.45L),
                                std::polar(Real(0.8), Real(0.7)), std::polar(Real(0.94), Real(-1.2)),
                                std::polar(Real(0.6), Real(2.0))};
  const std::vector<Complex> ss{Complex(2, 3), Complex(-3), Complex(0.5L, -1), Complex(4)};
  for (const auto& w : ws) {
    for (const auto& s : ss) {
      for (int r = 1; r <= 3; ++r) {
        const auto d = lerch_zeta(query(s, 1.0L / 3, w, r));
        const auto a = lerch_zeta(query(s, 1.0L / 3, w, r, ZetaMethod::accelerated));
        // near the edge of |w/(1+w)| < 1 the transform stalls; its estimate must cover the gap
        CHECK(std::abs(d.value - a.value) <= std::max<Real>(1e-8, a.error_estimate));
      }
    }
  }
  // the Euler transform needs |w/(1+w)| < 1
  CHECK_THROWS_AS(lerch_zeta(query(Complex(2), 0.5L, Complex(-0.9L), 1, ZetaMethod::accelerated)), Error);
}

TEST_CASE("independent binomial expansion oracle") {
  SUBCASE("inside the disc") {
    for (const Complex& s : {Complex(2, 3), Complex(0.5L, 0), Complex(-2.5L, 1)}) {
      const Complex w(0.3L, -0.6L);
      const auto z = lerch_zeta(query(s, 0.5L, w, 2));
      CHECK(std::abs(z.value - binomial_expansion(s, 0.5L, w, 2, Complex(0), 1)) <= 1e-13);
    }
  }
  SUBCASE("on the unit circle, accelerated only") {
    for (const Real xi : {0.0L, 0.05L, 0.125L, -0.2L}) {
      const Complex w = std::polar(Real(1), 2 * Real(M_PI) * xi);
      const auto z = lerch_zeta(query(Complex(2, 1), 0.5L, w, 1, ZetaMethod::accelerated));
      const Complex expected = binomial_expansion(Complex(2, 1), 0.5L, w, 1, Complex(0), 1);
      CHECK(std::abs(z.value - expected) <= std::max<Real>(1e-9, 10 * z.error_estimate));
    }
    try {
      lerch_zeta(query(Complex(2, 1), 0.5L, Complex(0, 1), 1, ZetaMethod::direct));
      FAIL("expected a method error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::method);
    }
  }
}

TEST_CASE("conjugate symmetry for real q and w") {
  for (const Complex& s : {Complex(2, 3), Complex(-1.5L, 0.25L), Complex(0.1L, -4)}) {
    for (const Real w : {0.5L, -0.3L, 0.9L}) {
      const auto a = lerch_zeta(query(s, 0.4L, Complex(w), 2));
      const auto b = lerch_zeta(query(std::conj(s), 0.4L, Complex(w), 2));
      CHECK(std::abs(std::conj(a.value) - b.value) <= 1e-12);
    }
  }
}

TEST_CASE("Hurwitz zeta") {
  auto hurwitz = [](Complex s, Real q, Complex w, int r, Complex x, ZetaMethod method = ZetaMethod::direct) {
    return hurwitz_zeta(ZetaQuery{s, q, w, r, x, method});
  };

  SUBCASE("negative integers give the polynomials") {
    for (int k = 1; k <= 6; ++k) {
      const auto z = hurwitz(Complex(-k), 0.5L, Complex(0.5L), 1, Complex(2));
      const Complex e = euler_poly_closed(EulerQuery<Complex>{k, FloatContext{Complex(0.5L), Complex(0.5L), 1}, Real(2)});
      CHECK(std::abs(z.value - e) <= 1e-10);
    }
  }

  SUBCASE("s = 0") {
    for (const Complex& x : {Complex(1), Complex(2.5L), Complex(0.3L, 2)}) {
      const auto z = hurwitz(Complex(0), 0.5L, Complex(0.25L), 1, x);
      CHECK(std::abs(z.value - Complex(1.5L / 1.25L)) <= 1e-15);
    }
  }

  SUBCASE("x = 1 is the Lerch series reindexed") {
    // sum_{m>=0} (-w)^m [m+1]^{-s} = -(1/w) sum_{m>=1} (-w)^m [m]^{-s}
    for (const Complex& w : {Complex(0.5L), Complex(-0.7L, 0.2L)}) {
      const Complex s(1.5L, -2);
      const auto h = hurwitz(s, 0.5L, w, 1, Complex(1));
      const auto l = lerch_zeta(query(s, 0.5L, w, 1));
      CHECK(std::abs(h.value + l.value / w) <= 1e-14);
    }
  }

  SUBCASE("dropping m = 0 at x = 0 gives the Lerch form") {
    for (int r = 1; r <= 3; ++r) {
      const Complex s(2, 3);
      const Complex w(0.6L, 0.1L);
      const auto h = shifted_lerch_sum(s, 0.5L, w, r, Complex(0), 1, ZetaMethod::direct);
      CHECK(std::abs(h.value - lerch_zeta(query(s, 0.5L, w, r)).value) <= 1e-12);
    }
  }

  SUBCASE("complex x against the binomial expansion") {
    const Complex x(1.5L, 0.75L);
    const Complex s(2, -1);
    const Complex w(0.4L, 0.4L);
    for (ZetaMethod method : {ZetaMethod::direct, ZetaMethod::accelerated}) {
      const auto z = hurwitz(s, 0.5L, w, 2, x, method);
      CHECK(std::abs(z.value - binomial_expansion(s, 0.5L, w, 2, x, 0)) <= 1e-10);
    }
  }

  SUBCASE("excluded shifts") {
    for (const Complex& x : {Complex(0), Complex(-1), Complex(-4)}) {
      CHECK_THROWS_AS(hurwitz(Complex(2), 0.5L, Complex(0.5L), 1, x), Error);
    }
    CHECK_NOTHROW(hurwitz(Complex(2), 0.5L, Complex(0.5L), 1, Complex(-1.5L)));
  }
}

TEST_CASE("zeta errors") {
  try {
    lerch_zeta(query(Complex(2), 0.5L, Complex(-1), 1, ZetaMethod::accelerated));
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::divergence);
  }
  try {
    lerch_zeta(query(Complex(2, 1), 0.5L, Complex(0.99L), 1));
    FAIL("expected a method error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::method);
    CHECK(std::string(e.what()).find("accelerated") != std::string::npos);
  }
  CHECK_THROWS_AS(lerch_zeta(query(Complex(2), 1.0L, Complex(0.5L), 1)), Error);
  CHECK_THROWS_AS(lerch_zeta(query(Complex(2), -0.5L, Complex(0.5L), 1)), Error);
  CHECK_THROWS_AS(lerch_zeta(query(Complex(2), 0.5L, Complex(1.5L), 1, ZetaMethod::accelerated)), Error);

  ZetaOptions tight;
  tight.direct_cap = 5;
  try {
    lerch_zeta(query(Complex(2), 0.5L, Complex(0.9L), 2), tight);
    FAIL("expected non-convergence");
  } catch (const ZetaNonConvergence& e) {
    CHECK(e.kind() == ErrorKind::non_convergence);
    CHECK(e.partial().terms == 5);
    CHECK(std::isfinite(e.partial().value.real()));
  }
}

TEST_CASE("interpolation report") {
  CHECK(interpolation_report(8, {}).empty());

  std::vector<InterpolationPoint> grid;
  for (Real q : {1.0L / 3, 0.5L}) {
    for (Real w : {0.25L, 0.5L, 0.9L, -0.9L}) {
      for (int r = 1; r <= 2; ++r) grid.push_back(InterpolationPoint{q, Complex(w), r, std::nullopt});
    }
  }
  const auto cells = interpolation_report(8, grid);
  CHECK(cells.size() == grid.size() * 8);
  Real worst = 0;
  for (const auto& cell : cells) {
    REQUIRE(cell.error.empty());
    worst = std::max(worst, *cell.abs_diff);
  }
  CHECK(worst <= 1e-9);

  const InterpolationPoint one{0.5L, Complex(0.5L), 1, std::nullopt};
  const auto single = interpolation_report(1, std::span(&one, 1));
  REQUIRE(single.size() == 1);
  CHECK(std::abs(*single[0].zeta - euler_closed(1, 0.5L, Complex(0.5L), 1)) <= 1e-12);

  // per-cell failure does not abort the report
  const InterpolationPoint bad{0.5L, Complex(0.99L), 1, std::nullopt};
  const auto failed = interpolation_report(2, std::span(&bad, 1));
  REQUIRE(failed.size() == 2);
  CHECK_FALSE(failed[0].error.empty());
}
