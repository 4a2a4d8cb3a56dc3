#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace idg {

using BigRational = boost::multiprecision::mpq_rational;

// Exact rational number. Values whose reduced numerator and denominator fit
// in int64 are stored inline; anything larger spills to a GMP rational. The
// inline path covers every tableau entry met in the census LPs, so the
// simplex hot loop never allocates.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const BigRational& big);

  static Rational parse(const std::string& text);

  bool is_zero() const { return !big_ && num_ == 0; }
  int sign() const;
  bool is_small() const { return !big_; }

  // Numerator/denominator as decimal strings (always available).
  std::string numerator_string() const;
  std::string denominator_string() const;
  std::string to_string() const;
  // Fixed-point rendering with the given number of fractional digits,
  // trailing zeros trimmed ("0.291667", "0.5").
  std::string to_decimal(int digits = 6) const;
  double to_double() const;
  BigRational to_big() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // this -= a * b, the simplex row update.
  void sub_mul(const Rational& a, const Rational& b);

private:
  void assign_big(BigRational v);
  void set_from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace idg
