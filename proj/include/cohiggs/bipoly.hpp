#pragma once

#include "cohiggs/polynomial.hpp"

#include <string>
#include <vector>

namespace cohiggs {

// Bivariate polynomial viewed as a polynomial in y whose coefficients are
// UniPoly in z (or in w for the chart at infinity). ycoeffs()[j] multiplies
// y^j; no trailing zero coefficient.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(int c) : BiPoly(UniPoly(c)) {}  // NOLINT: implicit by design
  BiPoly(UniPoly c) {                    // NOLINT
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit BiPoly(std::vector<UniPoly> ycoeffs) : c_(std::move(ycoeffs)) { trim(); }

  static BiPoly from_y_power(int j, UniPoly c);

  int degree_y() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<UniPoly>& ycoeffs() const { return c_; }
  UniPoly ycoeff(int j) const {
    return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[j] : UniPoly();
  }
  const UniPoly& lead_y() const { return c_.back(); }  // requires nonzero

  GaussQ operator()(const GaussQ& z0, const GaussQ& y0) const;
  // F(z0, y) as a univariate polynomial in y.
  UniPoly specialize_z(const GaussQ& z0) const;
  // F(z, y0) as a univariate polynomial in z.
  UniPoly at_y(const GaussQ& y0) const;
  // F(z, lambda(z)).
  UniPoly substitute_y(const UniPoly& lambda) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator*(const UniPoly& s, const BiPoly& p);

  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

 private:
  std::vector<UniPoly> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

BiPoly derivative_y(const BiPoly& f);
BiPoly derivative_z(const BiPoly& f);

// Monic gcd of the z-coefficients.
UniPoly content_z(const BiPoly& f);
BiPoly primitive_part_z(const BiPoly& f);

// Sylvester resultant with respect to y, an exact polynomial in z. Vanishes
// at z0 iff F(z0,.) and G(z0,.) share a root or both leading coefficients
// vanish there. Convention fixed by the Sylvester determinant, e.g.
// resultant_y(y - p, y - q) = p - q.
UniPoly resultant_y(const BiPoly& f, const BiPoly& g);

// Gcd as polynomials in y, computed by the primitive polynomial remainder
// sequence over the ring GaussQ[z]; result normalized primitive with monic
// leading y-coefficient. gcd_y(0, 0) == 0.
BiPoly gcd_y(const BiPoly& f, const BiPoly& g);

std::string to_string(const BiPoly& f, const std::string& zvar = "z",
                      const std::string& yvar = "y");

}  // namespace cohiggs
