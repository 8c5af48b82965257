#ifndef ZGEN_RATIONAL_HPP_
#define ZGEN_RATIONAL_HPP_

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zgen {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational; always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "p/q", "-p/q" and mixed numbers "a b/c".
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt num() const;
  [[nodiscard]] BigInt den() const;
  [[nodiscard]] bool is_integer() const { return den() == 1; }
  [[nodiscard]] double to_double() const;
  // "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;
  // "a b/c" when |value| > 1 and not an integer.
  [[nodiscard]] std::string mixed_str() const;
  // Largest integer not above the value.
  [[nodiscard]] BigInt floor() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  boost::multiprecision::cpp_rational v_;
};

std::string to_string(const Rational& r);

}  // namespace zgen

#endif  // ZGEN_RATIONAL_HPP_
