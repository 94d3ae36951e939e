#include "treebalance/rational.hpp"

#include <ostream>
#include <utility>

#include "treebalance/errors.hpp"

namespace treebalance {

namespace {

mpz_class pow10(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

// Integer nearest to num/den (den > 0, num >= 0), ties to even.
mpz_class round_half_even(const mpz_class& num, const mpz_class& den) {
  mpz_class quotient;
  mpz_class remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  const int half = cmp(mpz_class(2 * remainder), den);
  if (half > 0 || (half == 0 && mpz_odd_p(quotient.get_mpz_t()) != 0)) {
    ++quotient;
  }
  return quotient;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(mpz_class(static_cast<long>(numerator)),
               mpz_class(static_cast<long>(denominator))) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw InvalidInput("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
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
  if (other.is_zero()) {
    throw InvalidInput("Rational: division by zero");
  }
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::to_string() const {
  if (is_integer()) {
    return numerator().get_str();
  }
  return numerator().get_str() + "/" + denominator().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
  if (significant_digits < 1) {
    throw InvalidInput("to_decimal: need at least one significant digit");
  }
  const auto digits = static_cast<unsigned long>(significant_digits);
  if (is_zero()) {
    return digits == 1 ? "0" : "0." + std::string(digits - 1, '0');
  }

  const bool negative = sgn(value_) < 0;
  const mpz_class num = abs(numerator());
  const mpz_class& den = denominator();

  // Decimal exponent e with 10^e <= |value| < 10^(e+1).
  long exponent = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
                  static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto at_least = [&](long e) {
    // |value| >= 10^e
    return e >= 0 ? cmp(num, mpz_class(den * pow10(static_cast<unsigned long>(e)))) >= 0
                  : cmp(mpz_class(num * pow10(static_cast<unsigned long>(-e))), den) >= 0;
  };
  while (!at_least(exponent)) {
    --exponent;
  }
  while (at_least(exponent + 1)) {
    ++exponent;
  }

  // mantissa = round(|value| * 10^(digits - 1 - exponent)), digits long.
  const long shift = static_cast<long>(digits) - 1 - exponent;
  mpz_class scaled_num = num;
  mpz_class scaled_den = den;
  if (shift >= 0) {
    scaled_num *= pow10(static_cast<unsigned long>(shift));
  } else {
    scaled_den *= pow10(static_cast<unsigned long>(-shift));
  }
  mpz_class mantissa = round_half_even(scaled_num, scaled_den);
  if (mantissa == pow10(digits)) {
    mantissa /= 10;
    ++exponent;
  }

  const std::string body = mantissa.get_str();
  std::string out = negative ? "-" : "";
  if (exponent < 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-exponent - 1), '0');
    out += body;
  } else {
    const auto int_digits = static_cast<std::size_t>(exponent) + 1;
    if (int_digits >= body.size()) {
      out += body;
      out.append(int_digits - body.size(), '0');
    } else {
      out += body.substr(0, int_digits);
      out += '.';
      out += body.substr(int_digits);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace treebalance
