#include "values.hpp"

#include <charconv>
#include <cstdio>
#include <limits>

namespace qtwist::cli {

namespace {

Error bad_number(std::string_view text) {
  return Error(ErrorKind::argument, "not a number: '" + std::string(text) + "' (expected a, a/b, 0.25 or a+bi)");
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorKind::argument, "not an index range: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::string Number::str() const {
  if (exact) return exact->str();
  return format_complex(value);
}

Number parse_number(std::string_view text) {
  if (text.empty()) throw bad_number(text);
  if (text.back() != 'i') {
    try {
      Rational r = Rational::parse(text);
      return Number{r, to_complex(r)};
    } catch (const Error&) {
      throw bad_number(text);
    }
  }

  // Split "re+imi" at the last sign that is not the leading one.
  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  auto part = [&](std::string_view p) -> Rational {
    if (p.empty() || p == "+") return Rational(1);
    if (p == "-") return Rational(-1);
    if (p.front() == '+') p.remove_prefix(1);
    try {
      return Rational::parse(p);
    } catch (const Error&) {
      throw bad_number(text);
    }
  };
  const Rational im = part(im_text);
  const Rational re = re_text.empty() ? Rational(0) : part(re_text);
  if (im.is_zero()) return Number{re, to_complex(re)};
  return Number{std::nullopt, Complex(re.to_long_double(), im.to_long_double())};
}

std::vector<int> parse_range(std::string_view text) {
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    const int lo = parse_int(text.substr(0, dots), text);
    const int hi = parse_int(text.substr(dots + 2), text);
    if (hi < lo) throw Error(ErrorKind::argument, "empty index range: '" + std::string(text) + "'");
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(parse_int(text.substr(start, comma - start), text));
    start = comma + 1;
  }
  return out;
}

std::string format_real(Real x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*Lg", std::numeric_limits<Real>::digits10, static_cast<long double>(x));
  return buffer;
}

std::string format_complex(const Complex& z) {
  const std::string im = format_real(z.imag());
  return format_real(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

}  // namespace qtwist::cli
