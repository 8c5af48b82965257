#include "zgen/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace zgen {

namespace {

BigInt parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer in rational literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("bad integer in rational literal: " + std::string(s));
    }
  }
  BigInt v(std::string(s.substr(start)));
  return s[0] == '-' ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long long value) : v_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto space = s.find(' ');
  if (space != std::string_view::npos) {
    Rational whole(parse_int(trim(s.substr(0, space))), 1);
    Rational frac = parse(trim(s.substr(space + 1)));
    if (frac < Rational(0) || whole.num() < 0) {
      throw std::invalid_argument("mixed numbers must be non-negative: " + std::string(s));
    }
    return whole + frac;
  }
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s), 1);
  return Rational(parse_int(trim(s.substr(0, slash))), parse_int(trim(s.substr(slash + 1))));
}

BigInt Rational::num() const { return boost::multiprecision::numerator(v_); }
BigInt Rational::den() const { return boost::multiprecision::denominator(v_); }

double Rational::to_double() const { return v_.convert_to<double>(); }

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

std::string Rational::mixed_str() const {
  if (is_integer() || *this < Rational(1)) return str();
  BigInt whole = num() / den();
  BigInt rest = num() - whole * den();
  return whole.str() + " " + rest.str() + "/" + den().str();
}

BigInt Rational::floor() const {
  BigInt q = num() / den();
  if (num() < 0 && q * den() != num()) q -= 1;
  return q;
}

Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }
Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.v_ = -a.v_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.v_ < b.v_) return std::strong_ordering::less;
  if (a.v_ > b.v_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace zgen
