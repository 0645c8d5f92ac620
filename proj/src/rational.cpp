#include "abel/rational.hpp"

#include <charconv>
#include <numeric>

#include "abel/errors.hpp"

namespace abel {

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorKind::BadRational, "'" + std::string(whole) + "'");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::BadRational, "'" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  // from_chars accepts a leading '-', which we already consumed
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    throw Error(ErrorKind::BadRational, "'" + std::string(text) + "'");
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto slash = rest.find('/'); slash == std::string_view::npos) {
    num = parse_digits(rest, text);
  } else {
    num = parse_digits(rest.substr(0, slash), text);
    auto den_text = rest.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      throw Error(ErrorKind::BadRational, "'" + std::string(text) + "'");
    }
    den = parse_digits(den_text, text);
    if (den == 0) throw Error(ErrorKind::BadRational, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(negative ? -num : num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
  auto n = r.numerator();
  auto d = r.denominator();  // always positive after normalization
  auto q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Rational sum(const std::vector<Rational>& values) {
  return std::accumulate(values.begin(), values.end(), Rational(0));
}

std::int64_t common_denominator(const std::vector<Rational>& values) {
  std::int64_t l = 1;
  for (const auto& r : values) l = std::lcm(l, r.denominator());
  return l;
}

}  // namespace abel
