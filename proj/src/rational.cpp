#include "fischer/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace fischer {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

int ctz128(u128 x) {
  const auto lo = static_cast<std::uint64_t>(x);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = ctz128(a | b);
  a >>= ctz128(a);
  do {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

BigInt big_from_wide(i128 value) {
  const bool negative = value < 0;
  u128 mag = negative ? static_cast<u128>(-(value + 1)) + 1 : static_cast<u128>(value);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

bool fits(const BigInt& v) { return v >= -BigInt(kMax) && v <= BigInt(kMax); }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(den < 0 ? -static_cast<i128>(num) : static_cast<i128>(num),
                    den < 0 ? -static_cast<i128>(den) : static_cast<i128>(den));
}

Rational::Rational(const BigInt& value) { *this = normalized(BigRational(value)); }

Rational::Rational(const BigRational& value) { *this = normalized(value); }

Rational Rational::from_wide(i128 num, i128 den) {
  const u128 mag = num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num);
  const u128 g = gcd128(mag, static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (num >= -kMax && num <= kMax && den <= kMax) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  r.big_ = std::make_shared<const BigRational>(big_from_wide(num), big_from_wide(den));
  return r;
}

Rational Rational::normalized(BigRational value) {
  Rational r;
  const BigInt& n = boost::multiprecision::numerator(value);
  const BigInt& d = boost::multiprecision::denominator(value);
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  r.big_ = std::make_shared<const BigRational>(std::move(value));
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    bool negative = false;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) {
      negative = part[0] == '-';
      i = 1;
    }
    if (i == part.size()) throw bad();
    for (std::size_t j = i; j < part.size(); ++j) {
      if (part[j] < '0' || part[j] > '9') throw bad();
    }
    BigInt v(std::string(part.substr(i)));
    return negative ? BigInt(-v) : v;
  };
  BigInt num = parse_int(text.substr(0, slash), true);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
  }
  return Rational(BigRational(num, den));
}

int Rational::sign() const noexcept {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const noexcept {
  if (big_) return boost::multiprecision::denominator(*big_) == 1;
  return den_ == 1;
}

BigInt Rational::numerator() const {
  return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
}

BigInt Rational::denominator() const {
  return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
}

BigRational Rational::to_big() const {
  return big_ ? *big_ : BigRational(BigInt(num_), BigInt(den_));
}

std::string Rational::str() const {
  if (big_) {
    const auto d = boost::multiprecision::denominator(*big_);
    std::string out = boost::multiprecision::numerator(*big_).str();
    if (d != 1) out += "/" + d.str();
    return out;
  }
  std::string out = std::to_string(num_);
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (b.num_ == 0) return a;
    if (a.num_ == 0) return b;
    if (a.den_ == b.den_) {
      return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
    }
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::normalized(a.to_big() + b.to_big());
}

Rational operator-(const Rational& a) {
  if (!a.big_) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  return Rational::normalized(-a.to_big());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (b.num_ == 0) return a;
    if (a.den_ == b.den_) {
      return Rational::from_wide(static_cast<i128>(a.num_) - b.num_, a.den_);
    }
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::normalized(a.to_big() - b.to_big());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    const auto g1 = static_cast<std::int64_t>(gcd64(static_cast<std::uint64_t>(a.num_ < 0 ? -a.num_ : a.num_),
                                                    static_cast<std::uint64_t>(b.den_)));
    const auto g2 = static_cast<std::int64_t>(gcd64(static_cast<std::uint64_t>(b.num_ < 0 ? -b.num_ : b.num_),
                                                    static_cast<std::uint64_t>(a.den_)));
    const i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    const i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (num >= -kMax && num <= kMax && den <= kMax) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
      return r;
    }
    return Rational::from_wide(num, den);
  }
  return Rational::normalized(a.to_big() * b.to_big());
}

Rational inverse(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("division by zero rational");
  if (r.is_small()) {
    const auto n = r.small_numerator();
    const auto d = r.small_denominator();
    return n < 0 ? Rational(-d, -n) : Rational(d, n);
  }
  // boost::rational<cpp_int> rejects negative denominators outright.
  const BigInt n = r.numerator();
  return n < 0 ? Rational(BigRational(BigInt(-r.denominator()), BigInt(-n))) : Rational(BigRational(r.denominator(), n));
}

Rational operator/(const Rational& a, const Rational& b) { return a * inverse(b); }

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const auto lhs = a.to_big();
  const auto rhs = b.to_big();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fischer
