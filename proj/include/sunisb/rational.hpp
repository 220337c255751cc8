#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "sunisb/error.hpp"

namespace sunisb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(i).
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(int r) : re(r) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) {
    const Rational den = o.re * o.re + o.im * o.im;
    if (den.is_zero()) throw Error(ErrorCode::SingularCoefficient, "division by zero");
    Rational r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }
inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }

inline bool is_zero(const ComplexRational& z) { return z.is_zero(); }
inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>{}; }

inline std::complex<double> to_complex(const ComplexRational& z) {
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}
inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }

/// Converts an exact rational into the scalar type of a state vector.
template <class Scalar>
Scalar scalar_from_rational(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, ComplexRational>) {
    return ComplexRational(r);
  } else {
    return Scalar(static_cast<double>(r));
  }
}

/// "p/q", or "p" for integers. No decimal point ever appears.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Integer parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorCode::Parse, "empty integer in rational '" + std::string(s) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(ErrorCode::Parse, "bad digit in rational '" + std::string(s) + "'");
  }
  const Integer value{std::string(digits)};
  return (!s.empty() && s.front() == '-') ? Integer(-value) : value;
}

inline Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  const Integer num = parse_integer(s.substr(0, slash));
  const Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

}  // namespace sunisb
