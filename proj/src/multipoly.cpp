#include "cohiggs/multipoly.hpp"

#include <sstream>

namespace cohiggs {

MultiPoly MultiPoly::monomial(const Expo& e, GaussQ c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
  return p;
}

MultiPoly MultiPoly::monomial_in(Var v, int power, GaussQ c) {
  Expo e{0, 0, 0, 0};
  e[v] = power;
  return monomial(e, std::move(c));
}

void MultiPoly::add_term(const Expo& e, const GaussQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Expo e;
      for (int v = 0; v < MultiPoly::kVars; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly operator*(const GaussQ& s, const MultiPoly& p) {
  MultiPoly out;
  if (s.is_zero()) return out;
  for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
  return out;
}

MultiPoly partial(const MultiPoly& f, MultiPoly::Var v) {
  MultiPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e[v] == 0) continue;
    MultiPoly::Expo d = e;
    d[v] -= 1;
    out += MultiPoly::monomial(d, GaussQ(e[v]) * c);
  }
  return out;
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  static const char* names[] = {"z1", "z2", "zb1", "zb2"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (int v = 0; v < MultiPoly::kVars; ++v) {
      if (e[v] == 0) continue;
      os << "*" << names[v];
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

}  // namespace cohiggs
