#include <omega/rational.hh>

#include <cctype>
#include <ostream>
#include <stdexcept>

#include <omega/errors.hh>

namespace omega
{
  rational::rational(std::int64_t value)
  {
    value_ = static_cast<long>(value);
  }

  rational::rational(std::int64_t num, std::int64_t den)
  {
    if (den == 0)
      throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    value_.canonicalize();
  }

  rational::rational(mpq_class value) : value_(std::move(value))
  {
    value_.canonicalize();
  }

  rational rational::parse(std::string_view text)
  {
    auto valid_int = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && s.front() == '-')
        s.remove_prefix(1);
      if (s.empty())
        return false;
      for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          return false;
      return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
      throw input_error("malformed rational '" + std::string(text) + "'");
    mpz_class d{std::string(den)};
    if (d == 0)
      throw input_error("rational '" + std::string(text) + "' has zero denominator");
    mpq_class q{mpz_class{std::string(num)}, d};
    q.canonicalize();
    return rational(q);
  }

  rational rational::inverse_power_of_two(unsigned k)
  {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
    return rational(mpq_class(mpz_class(1), den));
  }

  std::string rational::str() const
  {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  rational& rational::operator+=(const rational& o)
  {
    value_ += o.value_;
    return *this;
  }

  rational& rational::operator-=(const rational& o)
  {
    value_ -= o.value_;
    return *this;
  }

  rational& rational::operator*=(const rational& o)
  {
    value_ *= o.value_;
    return *this;
  }

  rational& rational::operator/=(const rational& o)
  {
    if (o.is_zero())
      throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  rational operator-(const rational& a)
  {
    return rational(mpq_class(-a.value_));
  }

  std::ostream& operator<<(std::ostream& out, const rational& r)
  {
    return out << r.str();
  }
}
