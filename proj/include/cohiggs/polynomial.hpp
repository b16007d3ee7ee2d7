#pragma once

#include "cohiggs/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cohiggs {

// Dense univariate polynomial over the Gaussian rationals. coeffs()[k]
// multiplies x^k; the list never ends in a zero, so the zero polynomial has
// an empty list and degree() == -1 (the "-infinity" sentinel).
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(GaussQ(c)) {}  // NOLINT: implicit by design
  UniPoly(GaussQ c) {                     // NOLINT
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit UniPoly(std::vector<GaussQ> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly variable() { return monomial(1, GaussQ(1)); }
  static UniPoly monomial(int deg, GaussQ c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<GaussQ>& coeffs() const { return c_; }
  GaussQ coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : GaussQ(0);
  }
  const GaussQ& lead() const { return c_.back(); }  // requires nonzero

  GaussQ operator()(const GaussQ& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const GaussQ& s, const UniPoly& p);
  friend UniPoly operator*(const UniPoly& p, const GaussQ& s) { return s * p; }

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  std::vector<GaussQ> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

UniPoly derivative(const UniPoly& p);

// Euclidean division over the field: a = q*b + r with deg r < deg b.
// Throws ZeroPolynomial when b is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Division known to be exact; throws std::logic_error on nonzero remainder.
UniPoly div_exact(const UniPoly& a, const UniPoly& b);

UniPoly monic(const UniPoly& p);

// Monic gcd; poly_gcd(0, 0) == 0.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

bool is_squarefree(const UniPoly& p);

// p / gcd(p, p'), monic. Throws ZeroPolynomial on zero input.
UniPoly squarefree_part(const UniPoly& p);

// Yun decomposition: pairs (factor, multiplicity) with the factors monic,
// squarefree, pairwise coprime and p = lead * prod factor^multiplicity.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// Exact square root over the Gaussian rationals, if one exists. The sign is
// normalized so the leading coefficient has re > 0, or re == 0 and im >= 0.
std::optional<UniPoly> poly_sqrt(const UniPoly& p);

// x^d * p(1/x). Requires d >= deg p (else the result would have a pole);
// throws NotHolomorphicAtInfinity otherwise. Zero maps to zero.
UniPoly reverse_to_degree(const UniPoly& p, int d);

// Roots of p lying in the Gaussian rationals. Complete for deg p <= 2 (via
// exact square roots); for higher degree only roots from a small fixed
// candidate probe set are found. Never reports a non-root.
std::vector<GaussQ> gaussian_roots(const UniPoly& p);

UniPoly pow_poly(const UniPoly& p, int e);

std::string to_string(const UniPoly& p, const std::string& var = "z");

}  // namespace cohiggs
