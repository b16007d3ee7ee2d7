#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace cohiggs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Gaussian rational re + im*i. Components are arbitrary-precision
// rationals kept canonical (reduced, positive denominator) by cpp_rational
// itself, so value equality is component equality.
struct GaussQ {
  Rational re;
  Rational im;

  GaussQ() = default;
  GaussQ(int v) : re(v) {}                      // NOLINT: implicit by design
  GaussQ(long long v) : re(v) {}                // NOLINT
  GaussQ(Rational r) : re(std::move(r)) {}      // NOLINT
  GaussQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussQ i() { return GaussQ(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussQ conj() const { return GaussQ(re, -im); }

  // Squared modulus re^2 + im^2, a nonnegative rational.
  Rational norm() const { return re * re + im * im; }

  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) {
    return GaussQ(a.re + b.re, a.im + b.im);
  }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) {
    return GaussQ(a.re - b.re, a.im - b.im);
  }
  friend GaussQ operator-(const GaussQ& a) { return GaussQ(-a.re, -a.im); }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return GaussQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GaussQ operator/(const GaussQ& a, const GaussQ& b) {
    Rational n = b.norm();
    if (n == 0) throw std::domain_error("division by zero GaussQ");
    GaussQ num = a * b.conj();
    return GaussQ(num.re / n, num.im / n);
  }

  GaussQ& operator+=(const GaussQ& o) { return *this = *this + o; }
  GaussQ& operator-=(const GaussQ& o) { return *this = *this - o; }
  GaussQ& operator*=(const GaussQ& o) { return *this = *this * o; }
  GaussQ& operator/=(const GaussQ& o) { return *this = *this / o; }

  friend bool operator==(const GaussQ& a, const GaussQ& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }
};

// Canonical text form: "0"; pure real "a" or "a/b"; pure imaginary
// "[-]c[/d]i"; mixed "re+imi" / "re-imi". No spaces, unit denominators
// omitted. parse_gaussq accepts the same grammar plus optional whitespace
// and throws ParseError with the byte position on bad input.
std::string to_string(const GaussQ& q);
GaussQ parse_gaussq(std::string_view text);
std::string to_string(const Rational& r);

// Exact square root in the rationals / Gaussian rationals; nullopt when the
// argument is not a perfect square in the respective field. For rationals
// the principal (nonnegative) root is returned; for Gaussian rationals the
// root with re > 0, or re == 0 and im >= 0.
std::optional<Rational> sqrt_exact(const Rational& r);
std::optional<GaussQ> sqrt_exact(const GaussQ& q);

double to_double(const Rational& r);

std::ostream& operator<<(std::ostream& os, const GaussQ& q);

}  // namespace cohiggs
