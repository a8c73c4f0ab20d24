#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace fischer {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are stored
/// inline and combined with 128-bit intermediates; anything larger is promoted
/// to an arbitrary-precision representation and demoted again as soon as it
/// fits. The representation is always reduced with a positive denominator, so
/// equality is structural.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value) {  // NOLINT
    if (value == std::numeric_limits<std::int64_t>::min()) {
      *this = Rational(BigInt(value));
    } else {
      num_ = value;
    }
  }
  Rational(int value) noexcept : num_(value) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const BigInt& value);
  explicit Rational(const BigRational& value);

  /// Parses "p", "-p" or "p/q". Decimal notation is rejected.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] bool is_integer() const noexcept;
  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] std::int64_t small_numerator() const noexcept { return num_; }
  [[nodiscard]] std::int64_t small_denominator() const noexcept { return den_; }

  [[nodiscard]] BigInt numerator() const;
  [[nodiscard]] BigInt denominator() const;
  [[nodiscard]] BigRational to_big() const;
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
  Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational normalized(BigRational value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Reciprocal; throws std::domain_error on zero.
Rational inverse(const Rational& r);

}  // namespace fischer

namespace Eigen {

template <>
struct NumTraits<fischer::Rational> : GenericNumTraits<fischer::Rational> {
  using Real = fischer::Rational;
  using NonInteger = fischer::Rational;
  using Nested = fischer::Rational;
  using Literal = fischer::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
