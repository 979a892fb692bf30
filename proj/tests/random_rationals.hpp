#pragma once

#include <random>

#include "qtwist/rational.hpp"

namespace qtwist::testing {

// Small random rationals for property checks; fixed seed keeps runs reproducible.
class RationalGenerator {
 public:
  explicit RationalGenerator(unsigned seed = 20261019) : engine_(seed) {}

  Rational operator()(long max_abs = 50, long max_den = 30) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(engine_), den(engine_));
  }

  Rational nonzero(long max_abs = 50, long max_den = 30) {
    for (;;) {
      Rational x = (*this)(max_abs, max_den);
      if (!x.is_zero()) return x;
    }
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qtwist::testing
