#include "cohiggs/polynomial.hpp"

#include "cohiggs/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace cohiggs {

UniPoly UniPoly::monomial(int deg, GaussQ c) {
  if (c.is_zero()) return UniPoly();
  std::vector<GaussQ> v(deg + 1);
  v[deg] = std::move(c);
  return UniPoly(std::move(v));
}

GaussQ UniPoly::operator()(const GaussQ& x) const {
  GaussQ acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<GaussQ> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k < a.c_.size()) v[k] += a.c_[k];
    if (k < b.c_.size()) v[k] += b.c_[k];
  }
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator-(const UniPoly& a) {
  std::vector<GaussQ> v = a.c_;
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<GaussQ> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(v));
}

UniPoly operator*(const GaussQ& s, const UniPoly& p) {
  if (s.is_zero()) return UniPoly();
  std::vector<GaussQ> v = p.c_;
  for (auto& c : v) c = s * c;
  return UniPoly(std::move(v));
}

UniPoly derivative(const UniPoly& p) {
  if (p.degree() < 1) return UniPoly();
  std::vector<GaussQ> v(p.degree());
  for (int k = 1; k <= p.degree(); ++k) v[k - 1] = GaussQ(k) * p.coeff(k);
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  UniPoly r = a;
  std::vector<GaussQ> q(std::max(a.degree() - b.degree() + 1, 0));
  GaussQ inv_lead = GaussQ(1) / b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    GaussQ f = r.lead() * inv_lead;
    q[shift] = f;
    r -= UniPoly::monomial(shift, f) * b;
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly div_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("polynomial division expected to be exact");
  return q;
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return (GaussQ(1) / p.lead()) * p;
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  return poly_gcd(p, derivative(p)).is_constant();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.is_constant()) return UniPoly(1);
  return monic(div_exact(p, poly_gcd(p, derivative(p))));
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = monic(p);
  if (f.is_constant()) return out;
  UniPoly fp = derivative(f);
  UniPoly a0 = poly_gcd(f, fp);
  UniPoly b = div_exact(f, a0);
  UniPoly c = div_exact(fp, a0);
  UniPoly d = c - derivative(b);
  int i = 1;
  while (!b.is_constant()) {
    UniPoly a = poly_gcd(b, d);
    if (!a.is_constant()) out.emplace_back(a, i);
    b = div_exact(b, a);
    c = div_exact(d, a);
    d = c - derivative(b);
    ++i;
  }
  return out;
}

std::optional<UniPoly> poly_sqrt(const UniPoly& p) {
  if (p.is_zero()) return UniPoly();
  int n = p.degree();
  if (n % 2 != 0) return std::nullopt;
  int m = n / 2;
  auto lead_root = sqrt_exact(p.lead());
  if (!lead_root) return std::nullopt;

  std::vector<GaussQ> q(m + 1);
  q[m] = *lead_root;
  GaussQ half_inv = GaussQ(1) / (GaussQ(2) * q[m]);
  for (int k = m - 1; k >= 0; --k) {
    GaussQ acc = p.coeff(m + k);
    for (int i = k + 1; i <= m - 1; ++i) {
      int j = m + k - i;
      if (j > i) continue;  // count each unordered pair once
      GaussQ term = q[i] * q[j];
      acc -= (i == j) ? term : GaussQ(2) * term;
    }
    q[k] = acc * half_inv;
  }
  UniPoly root{std::vector<GaussQ>(q)};
  if (root * root != p) return std::nullopt;
  const GaussQ& l = root.lead();
  if (l.re < 0 || (l.re == 0 && l.im < 0)) root = -root;
  return root;
}

UniPoly reverse_to_degree(const UniPoly& p, int d) {
  if (p.is_zero()) return p;
  if (d < p.degree())
    throw NotHolomorphicAtInfinity("degree " + std::to_string(p.degree()) +
                                   " exceeds twist exponent " + std::to_string(d));
  std::vector<GaussQ> v(d + 1);
  for (int k = 0; k <= p.degree(); ++k) v[d - k] = p.coeff(k);
  return UniPoly(std::move(v));
}

std::vector<GaussQ> gaussian_roots(const UniPoly& p) {
  std::vector<GaussQ> out;
  auto push_unique = [&out](const GaussQ& r) {
    for (const auto& x : out)
      if (x == r) return;
    out.push_back(r);
  };
  if (p.degree() == 1) {
    push_unique(-p.coeff(0) / p.coeff(1));
  } else if (p.degree() == 2) {
    GaussQ a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    auto s = sqrt_exact(b * b - GaussQ(4) * a * c);
    if (s) {
      GaussQ inv = GaussQ(1) / (GaussQ(2) * a);
      push_unique((-b + *s) * inv);
      push_unique((-b - *s) * inv);
    }
  } else if (p.degree() >= 3) {
    static const int probes[][2] = {{0, 0},  {1, 0},  {-1, 0}, {2, 0},  {-2, 0},
                                    {0, 1},  {0, -1}, {0, 2},  {0, -2}, {1, 1},
                                    {1, -1}, {-1, 1}, {-1, -1}};
    for (const auto& pr : probes) {
      GaussQ cand{Rational(pr[0]), Rational(pr[1])};
      if (p(cand).is_zero()) push_unique(cand);
    }
  }
  return out;
}

UniPoly pow_poly(const UniPoly& p, int e) {
  UniPoly acc(1);
  for (int i = 0; i < e; ++i) acc *= p;
  return acc;
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    GaussQ c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = to_string(c);
    bool needs_parens = cs.find('+') != std::string::npos ||
                        cs.find('-', 1) != std::string::npos || cs.front() == '-';
    if (k == 0) {
      os << cs;
    } else {
      if (cs != "1") os << (needs_parens ? "(" + cs + ")" : cs) << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace cohiggs
