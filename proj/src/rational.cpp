#include "lrpoly/rational.hpp"

#include <stdexcept>

namespace lrpoly {

Rational make_rational(long num, long den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) {
    throw std::domain_error("expected an integer, got " + to_string(q));
  }
  const Integer& n = q.get_num();
  if (!n.fits_slong_p()) {
    throw std::domain_error("integer out of 64-bit range: " + to_string(q));
  }
  return n.get_si();
}

std::vector<Rational> to_rationals(std::span<const long> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace lrpoly
