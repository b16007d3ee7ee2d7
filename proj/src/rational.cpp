#include "cohiggs/rational.hpp"

#include "cohiggs/errors.hpp"

#include <cctype>
#include <ostream>

namespace cohiggs {

std::string to_string(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  std::string s = n.str();
  if (d != 1) s += "/" + d.str();
  return s;
}

std::string to_string(const GaussQ& q) {
  if (q.is_zero()) return "0";
  std::string out;
  if (q.re != 0) out += to_string(q.re);
  if (q.im != 0) {
    if (q.re != 0 && q.im > 0) out += "+";
    out += to_string(q.im) + "i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussQ& q) { return os << to_string(q); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
};

BigInt parse_digits(Cursor& c) {
  if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError("expected digit", c.pos);
  std::size_t start = c.pos;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  return BigInt(std::string(c.s.substr(start, c.pos - start)));
}

struct Term {
  Rational value;
  bool imaginary = false;
};

// term := 'i' | digits ['/' digits] ['i']    (sign handled by the caller)
Term parse_term(Cursor& c) {
  Term t;
  if (!c.eof() && c.peek() == 'i') {
    ++c.pos;
    t.value = 1;
    t.imaginary = true;
    return t;
  }
  BigInt num = parse_digits(c);
  BigInt den = 1;
  if (!c.eof() && c.peek() == '/') {
    std::size_t slash = c.pos;
    ++c.pos;
    den = parse_digits(c);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
  }
  t.value = Rational(num, den);
  if (!c.eof() && c.peek() == 'i') {
    ++c.pos;
    t.imaginary = true;
  }
  return t;
}

}  // namespace

GaussQ parse_gaussq(std::string_view text) {
  Cursor c{text};
  GaussQ result;
  bool seen_real = false, seen_imag = false;
  int terms = 0;

  c.skip_ws();
  if (c.eof()) throw ParseError("empty value", c.pos);
  while (!c.eof()) {
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.pos;
      c.skip_ws();
    } else if (terms > 0) {
      throw ParseError("expected '+' or '-' between terms", c.pos);
    }
    std::size_t term_start = c.pos;
    Term t = parse_term(c);
    if (t.imaginary) {
      if (seen_imag) throw ParseError("duplicate imaginary part", term_start);
      seen_imag = true;
      result.im = sign * t.value;
    } else {
      if (seen_real) throw ParseError("duplicate real part", term_start);
      seen_real = true;
      result.re = sign * t.value;
    }
    ++terms;
    c.skip_ws();
    if (terms == 2) break;
  }
  if (!c.eof()) throw ParseError("trailing characters", c.pos);
  return result;
}

std::optional<Rational> sqrt_exact(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rational(0);
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  BigInt sn = boost::multiprecision::sqrt(n);
  BigInt sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

std::optional<GaussQ> sqrt_exact(const GaussQ& q) {
  if (q.im == 0) {
    if (q.re >= 0) {
      auto s = sqrt_exact(q.re);
      if (!s) return std::nullopt;
      return GaussQ(*s);
    }
    auto s = sqrt_exact(-q.re);
    if (!s) return std::nullopt;
    return GaussQ(Rational(0), *s);
  }
  // (x+yi)^2 = a+bi needs x^2 = (a+s)/2 with s = sqrt(a^2+b^2), y = b/(2x).
  auto s = sqrt_exact(q.norm());
  if (!s) return std::nullopt;
  auto x = sqrt_exact((q.re + *s) / 2);
  if (!x || *x == 0) return std::nullopt;
  Rational y = q.im / (2 * *x);
  return GaussQ(*x, y);
}

}  // namespace cohiggs
