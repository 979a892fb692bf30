#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtwist/numerics.hpp"

namespace qtwist::cli {

/// A numeric flag value. `exact` is set when the literal has no imaginary part.
struct Number {
  std::optional<Rational> exact;
  Complex value;

  bool is_real() const { return value.imag() == 0; }
  std::string str() const;
};

/// "a", "a/b", "0.25", "a+bi", "a-bi", "bi"; each part may itself be a/b or decimal.
Number parse_number(std::string_view text);

/// "3", "0..4" or "1,3,5".
std::vector<int> parse_range(std::string_view text);

std::string format_real(Real x);
std::string format_complex(const Complex& z);

}  // namespace qtwist::cli
