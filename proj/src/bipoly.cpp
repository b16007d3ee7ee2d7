#include "cohiggs/bipoly.hpp"

#include "cohiggs/matrices.hpp"

#include <sstream>
#include <stdexcept>

namespace cohiggs {

BiPoly BiPoly::from_y_power(int j, UniPoly c) {
  if (c.is_zero()) return BiPoly();
  std::vector<UniPoly> v(j + 1);
  v[j] = std::move(c);
  return BiPoly(std::move(v));
}

GaussQ BiPoly::operator()(const GaussQ& z0, const GaussQ& y0) const {
  GaussQ acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y0 + (*it)(z0);
  return acc;
}

UniPoly BiPoly::specialize_z(const GaussQ& z0) const {
  std::vector<GaussQ> v(c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) v[j] = c_[j](z0);
  return UniPoly(std::move(v));
}

UniPoly BiPoly::at_y(const GaussQ& y0) const {
  UniPoly acc;
  GaussQ p(1);
  for (const auto& cj : c_) {
    acc += p * cj;
    p *= y0;
  }
  return acc;
}

UniPoly BiPoly::substitute_y(const UniPoly& lambda) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<UniPoly> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j < a.c_.size()) v[j] += a.c_[j];
    if (j < b.c_.size()) v[j] += b.c_[j];
  }
  return BiPoly(std::move(v));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator-(const BiPoly& a) {
  std::vector<UniPoly> v = a.c_;
  for (auto& c : v) c = -c;
  return BiPoly(std::move(v));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<UniPoly> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return BiPoly(std::move(v));
}

BiPoly operator*(const UniPoly& s, const BiPoly& p) {
  if (s.is_zero()) return BiPoly();
  std::vector<UniPoly> v = p.c_;
  for (auto& c : v) c = s * c;
  return BiPoly(std::move(v));
}

BiPoly derivative_y(const BiPoly& f) {
  if (f.degree_y() < 1) return BiPoly();
  std::vector<UniPoly> v(f.degree_y());
  for (int j = 1; j <= f.degree_y(); ++j) v[j - 1] = GaussQ(j) * f.ycoeff(j);
  return BiPoly(std::move(v));
}

BiPoly derivative_z(const BiPoly& f) {
  std::vector<UniPoly> v(f.ycoeffs().size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = derivative(f.ycoeffs()[j]);
  return BiPoly(std::move(v));
}

UniPoly content_z(const BiPoly& f) {
  UniPoly g;
  for (const auto& c : f.ycoeffs()) g = poly_gcd(g, c);
  return g;
}

BiPoly primitive_part_z(const BiPoly& f) {
  if (f.is_zero()) return f;
  UniPoly c = content_z(f);
  std::vector<UniPoly> v(f.ycoeffs().size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = div_exact(f.ycoeffs()[j], c);
  return BiPoly(std::move(v));
}

UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return UniPoly();
  int m = f.degree_y(), n = g.degree_y();
  if (m == 0 && n == 0) return UniPoly(1);
  if (m == 0) return pow_poly(f.ycoeff(0), n);
  if (n == 0) return pow_poly(g.ycoeff(0), m);

  PolyMatrix syl = PolyMatrix::Constant(m + n, m + n, UniPoly());
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) syl(r, r + j) = f.ycoeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) syl(n + r, r + j) = g.ycoeff(n - j);
  return ring_det(syl);
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, the pseudo-remainder over GaussQ[z].
BiPoly pseudo_rem(BiPoly a, const BiPoly& b) {
  int db = b.degree_y();
  const UniPoly& lb = b.lead_y();
  while (!a.is_zero() && a.degree_y() >= db) {
    int shift = a.degree_y() - db;
    BiPoly scaled = lb * a;
    scaled -= BiPoly::from_y_power(shift, a.lead_y()) * b;
    a = std::move(scaled);
  }
  return a;
}

}  // namespace

BiPoly gcd_y(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() && g.is_zero()) return BiPoly();
  if (f.is_zero()) return primitive_part_z(g);
  if (g.is_zero()) return primitive_part_z(f);

  UniPoly cont = poly_gcd(content_z(f), content_z(g));
  BiPoly a = primitive_part_z(f);
  BiPoly b = primitive_part_z(g);
  if (a.degree_y() < b.degree_y()) std::swap(a, b);
  while (!b.is_zero() && b.degree_y() > 0) {
    BiPoly r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.is_zero())
      b = BiPoly();
    else
      b = primitive_part_z(r);
  }
  if (!b.is_zero()) return BiPoly(cont);  // y-degree 0 remainder: coprime in y
  BiPoly result = cont * a;
  // Normalize so the leading y-coefficient is monic.
  UniPoly lead = result.lead_y();
  return UniPoly(GaussQ(1) / lead.lead()) * result;
}

std::string to_string(const BiPoly& f, const std::string& zvar, const std::string& yvar) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = f.degree_y(); j >= 0; --j) {
    UniPoly c = f.ycoeff(j);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << "(" << to_string(c, zvar) << ")";
    } else {
      if (c != UniPoly(1)) os << "(" << to_string(c, zvar) << ")*";
      os << yvar;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace cohiggs
