#include "idgames/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace idg {
namespace {

using BigInt = boost::multiprecision::mpz_int;
using u128 = unsigned __int128;

constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 abs128(__int128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt to_big_int(__int128 v) {
  const bool neg = v < 0;
  const u128 mag = abs128(v);
  BigInt r = static_cast<std::uint64_t>(mag >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(mag);
  return neg ? BigInt(-r) : r;
}

bool fits(__int128 v) { return v <= kMax64 && v >= -kMax64; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  set_from_wide(num, den);
}

Rational::Rational(const BigRational& big) { assign_big(big); }

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigRational(BigInt(text)));
    }
    BigInt n(text.substr(0, slash));
    BigInt d(text.substr(slash + 1));
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rational(BigRational(n, d));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

void Rational::assign_big(BigRational v) {
  const BigInt n = numerator(v);
  const BigInt d = denominator(v);
  if (boost::multiprecision::abs(n) <= BigInt(std::numeric_limits<std::int64_t>::max()) && d <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    num_ = n.convert_to<std::int64_t>();
    den_ = d.convert_to<std::int64_t>();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const BigRational>(std::move(v));
}

void Rational::set_from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 g = gcd128(abs128(num), u128(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits(num) && den <= kMax64) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  assign_big(BigRational(to_big_int(num), to_big_int(den)));
}

BigRational Rational::to_big() const {
  if (big_) return *big_;
  return BigRational(BigInt(num_), BigInt(den_));
}

int Rational::sign() const {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::numerator_string() const {
  return big_ ? numerator(*big_).str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return big_ ? denominator(*big_).str() : std::to_string(den_);
}

std::string Rational::to_string() const {
  const std::string d = denominator_string();
  if (d == "1") return numerator_string();
  return numerator_string() + "/" + d;
}

std::string Rational::to_decimal(int digits) const {
  const BigRational v = to_big();
  const bool neg = v < 0;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt n = boost::multiprecision::abs(numerator(v)) * scale;
  const BigInt d = denominator(v);
  BigInt q = n / d;
  if ((n % d) * 2 >= d) q += 1;
  std::string s = q.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (neg && s != "0") s.insert(0, "-");
  return s;
}

double Rational::to_double() const {
  if (big_) return big_->convert_to<double>();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(BigRational(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == o.den_) {
      set_from_wide(__int128(num_) + o.num_, den_);
    } else {
      set_from_wide(__int128(num_) * o.den_ + __int128(o.num_) * den_, __int128(den_) * o.den_);
    }
    return *this;
  }
  assign_big(to_big() + o.to_big());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    set_from_wide(__int128(num_) * o.num_, __int128(den_) * o.den_);
    return *this;
  }
  assign_big(to_big() * o.to_big());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  if (!big_ && !o.big_) {
    set_from_wide(__int128(num_) * o.den_, __int128(den_) * o.num_);
    return *this;
  }
  assign_big(to_big() / o.to_big());
  return *this;
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
  if (!big_ && !a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return;
    // Products of two inline values fit in 128 bits.
    const __int128 pn = __int128(a.num_) * b.num_;
    const __int128 pd = __int128(a.den_) * b.den_;
    const u128 g = gcd128(abs128(pn), u128(pd));
    const __int128 rn = pn / static_cast<__int128>(g);
    const __int128 rd = pd / static_cast<__int128>(g);
    if (fits(rn) && rd <= kMax64) {
      if (rd == den_) {
        set_from_wide(__int128(num_) - rn, den_);
      } else {
        set_from_wide(__int128(num_) * rd - rn * den_, rd * den_);
      }
      return;
    }
  }
  assign_big(to_big() - a.to_big() * b.to_big());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_big() == b.to_big();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return __int128(a.num_) * b.den_ <=> __int128(b.num_) * a.den_;
  }
  const BigRational x = a.to_big();
  const BigRational y = b.to_big();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace idg
