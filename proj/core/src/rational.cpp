#include "rquant/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rquant {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw std::invalid_argument("Rational: malformed number '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(num_text)));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
    throw std::invalid_argument("Rational: malformed denominator in '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(num_text), den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational inverse(const Rational& r) { return Rational(1) / r; }

}  // namespace rquant
