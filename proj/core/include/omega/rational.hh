#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace omega
{
  /// Exact arbitrary-precision rational, always in lowest terms with a
  /// positive denominator. Thin value type over GMP's mpq_class.
  class rational
  {
  public:
    rational() = default;
    rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    rational(std::int64_t num, std::int64_t den);
    explicit rational(mpq_class value);

    /// Parses "num/den" or "num" (optional leading '-'); throws input_error.
    static rational parse(std::string_view text);
    /// 2^-k.
    static rational inverse_power_of_two(unsigned k);

    /// "num/den", always with a denominator ("1/1", "0/1").
    std::string str() const;

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    std::string numerator() const { return value_.get_num().get_str(); }
    std::string denominator() const { return value_.get_den().get_str(); }
    const mpq_class& raw() const noexcept { return value_; }

    rational& operator+=(const rational& o);
    rational& operator-=(const rational& o);
    rational& operator*=(const rational& o);
    /// Throws std::domain_error on division by zero.
    rational& operator/=(const rational& o);

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }
    friend rational operator-(const rational& a);

    friend bool operator==(const rational& a, const rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b)
    {
      int c = cmp(a.value_, b.value_);
      return c < 0 ? std::strong_ordering::less
                   : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

  private:
    mpq_class value_{0};
  };

  std::ostream& operator<<(std::ostream& out, const rational& r);
}
