#include "gha/rational.hpp"

#include <stdexcept>

namespace gha {

namespace {

mpz_class from_int64(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through strings
  // only when long is narrower than 64 bits.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return mpz_class(static_cast<long>(v));
  } else {
    return mpz_class(std::to_string(v));
  }
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(from_int64(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(from_int64(num), from_int64(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= other.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::size_t Rational::hash() const {
  const std::size_t h1 = mpz_get_ui(value_.get_num_mpz_t()) ^ (static_cast<std::size_t>(sign()) << 1);
  const std::size_t h2 = mpz_get_ui(value_.get_den_mpz_t());
  return h1 * 1000003u ^ h2;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gha
