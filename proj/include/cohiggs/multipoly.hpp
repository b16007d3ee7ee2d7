#pragma once

#include "cohiggs/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace cohiggs {

// Sparse polynomial in the four formal variables z1, z2, zb1, zb2, where
// zb1, zb2 are the conjugate coordinates treated as independent symbols
// (Wirtinger calculus is formal differentiation in them). Exponents are
// non-negative; zero-coefficient terms are never stored.
class MultiPoly {
 public:
  static constexpr int kVars = 4;
  using Expo = std::array<int, kVars>;
  enum Var { Z1 = 0, Z2 = 1, Zb1 = 2, Zb2 = 3 };

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(GaussQ(c)) {}  // NOLINT: implicit by design
  MultiPoly(GaussQ c) {                       // NOLINT
    if (!c.is_zero()) terms_.emplace(Expo{0, 0, 0, 0}, std::move(c));
  }

  static MultiPoly variable(Var v) { return monomial_in(v, 1, GaussQ(1)); }
  static MultiPoly monomial(const Expo& e, GaussQ c);
  static MultiPoly monomial_in(Var v, int power, GaussQ c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{0, 0, 0, 0});
  }
  const std::map<Expo, GaussQ>& terms() const { return terms_; }
  GaussQ coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussQ(0) : it->second;
  }
  bool depends_on(Var v) const {
    for (const auto& [e, c] : terms_)
      if (e[v] != 0) return true;
    return false;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const GaussQ& s, const MultiPoly& p);

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  std::map<Expo, GaussQ> terms_;
  void add_term(const Expo& e, const GaussQ& c);
};

// Formal partial derivative in the named variable.
MultiPoly partial(const MultiPoly& f, MultiPoly::Var v);

std::string to_string(const MultiPoly& f);

}  // namespace cohiggs
