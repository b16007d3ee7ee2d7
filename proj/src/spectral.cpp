#include "cohiggs/spectral.hpp"

#include "cohiggs/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cohiggs {

BiPoly SpectralCurve::to_bipoly() const {
  BiPoly f = BiPoly::from_y_power(k, UniPoly{GaussQ(1)});
  for (int j = 1; j <= k; ++j) {
    f += BiPoly::from_y_power(k - j, a[static_cast<std::size_t>(j - 1)]);
  }
  return f;
}

UniPoly SpectralCurve::zero_section_restriction() const {
  if (k < 1) throw ShapeMismatch("curve has no rank");
  return a[static_cast<std::size_t>(k - 1)];
}

SpectralCurve char_poly(const CoHiggsBundleP1& b) {
  if (!validate(b).ok()) {
    throw std::invalid_argument("char_poly needs a bundle that passes validate");
  }
  const int k = b.rank();
  SpectralCurve s;
  s.k = k;
  s.a.resize(static_cast<std::size_t>(k));

  // Trace recursion: M_1 = phi, c_m = -tr(M_m)/m, M_{m+1} = phi (M_m + c_m I).
  PolyMatrix m = b.phi;
  for (int step = 1; step <= k; ++step) {
    UniPoly tr;
    for (Eigen::Index i = 0; i < k; ++i) tr += m(i, i);
    const UniPoly c = tr * GaussQ(Rational(-1, step));
    s.a[static_cast<std::size_t>(step - 1)] = c;
    if (c.degree() > 2 * step) {
      throw std::logic_error("characteristic coefficient exceeds its twist bound");
    }
    if (step < k) {
      PolyMatrix shifted = m;
      for (Eigen::Index i = 0; i < k; ++i) shifted(i, i) += c;
      m = (b.phi * shifted).eval();
    }
  }
  return s;
}

BiPoly infinity_chart_curve(const SpectralCurve& s) {
  BiPoly f = BiPoly::from_y_power(s.k, UniPoly{GaussQ(1)});
  for (int j = 1; j <= s.k; ++j) {
    const UniPoly& aj = s.a[static_cast<std::size_t>(j - 1)];
    if (aj.is_zero()) continue;
    if (aj.degree() > 2 * j) throw ShapeMismatch("coefficient exceeds its twist bound");
    f += BiPoly::from_y_power(s.k - j, reverse_to_degree(aj, 2 * j));
  }
  return f;
}

bool is_reduced(const SpectralCurve& s) {
  if (s.k < 1) throw ShapeMismatch("curve has no rank");
  const BiPoly f = s.to_bipoly();
  return !resultant_y(f, derivative_y(f)).is_zero();
}

namespace {

// Finds an exactly certified singular point of a monic-in-y curve by looking
// below repeated discriminant roots. Returns true and fills the witness when
// one is found.
bool find_singular_witness(const BiPoly& f, const UniPoly& disc, char chart,
                           SingularWitness& out) {
  const BiPoly fy = derivative_y(f);
  const BiPoly fz = derivative_z(f);
  for (const auto& [factor, mult] : squarefree_decomposition(disc)) {
    if (mult < 2) continue;
    for (const GaussQ& z0 : gaussian_roots(factor)) {
      const UniPoly fibre = f.specialize_z(z0);
      const UniPoly fibre_dy = fy.specialize_z(z0);
      const UniPoly common = poly_gcd(fibre, fibre_dy);
      for (const GaussQ& y0 : gaussian_roots(common)) {
        if (!f(z0, y0).is_zero()) continue;
        if (!fy(z0, y0).is_zero()) continue;
        if (!fz(z0, y0).is_zero()) continue;
        out = SingularWitness{chart, z0, y0};
        return true;
      }
    }
  }
  return false;
}

}  // namespace

SmoothnessReport smoothness_report(const SpectralCurve& s) {
  if (!is_reduced(s)) throw NotReduced("curve has a repeated component");
  SmoothnessReport report;
  if (s.k == 1) {
    // Graph of a polynomial section; always smooth.
    report.status = Smoothness::Smooth;
    return report;
  }
  const BiPoly f = s.to_bipoly();
  const BiPoly g = infinity_chart_curve(s);
  const UniPoly disc_finite = resultant_y(f, derivative_y(f));
  const UniPoly disc_infinity = resultant_y(g, derivative_y(g));
  if (is_squarefree(disc_finite) && is_squarefree(disc_infinity)) {
    report.status = Smoothness::Smooth;
    return report;
  }
  SingularWitness witness;
  if (find_singular_witness(f, disc_finite, 'z', witness) ||
      find_singular_witness(g, disc_infinity, 'w', witness)) {
    report.status = Smoothness::Singular;
    report.witness = witness;
    return report;
  }
  report.status = Smoothness::Undetermined;
  return report;
}

TriBool is_irreducible(const SpectralCurve& s) {
  if (!is_reduced(s)) throw NotReduced("curve has a repeated component");
  if (s.k == 1) return TriBool::True;
  if (smoothness_report(s).status == Smoothness::Smooth) {
    // A smooth curve here is connected: components would be effective divisor
    // classes with positive intersection number on the compactified surface.
    return TriBool::True;
  }
  if (s.k == 2) {
    // The curve splits into two sections exactly when the discriminant is a
    // perfect square; the square root, if any, has rational coefficients.
    const UniPoly disc = s.a[0] * s.a[0] - GaussQ(4) * s.a[1];
    if (disc.is_zero()) throw NotReduced("curve has a repeated component");
    return poly_sqrt(monic(disc)).has_value() ? TriBool::False : TriBool::True;
  }
  return TriBool::Unknown;
}

namespace {

struct LatticePoint {
  long long x = 0, y = 0;
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone-chain convex hull; returns vertices in counterclockwise order.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<LatticePoint> hull(2 * n);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  const std::size_t lower = h + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (h >= lower && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);
  return hull;
}

}  // namespace

std::optional<int> newton_polygon_interior(const BiPoly& f) {
  std::vector<LatticePoint> support;
  for (int j = 0; j <= f.degree_y(); ++j) {
    const UniPoly c = f.ycoeff(j);
    for (int e = 0; e <= c.degree(); ++e) {
      if (!c.coeff(e).is_zero()) support.push_back({e, j});
    }
  }
  const std::vector<LatticePoint> hull = convex_hull(std::move(support));
  if (hull.size() < 3) return std::nullopt;

  // Pick's theorem: interior = area - boundary/2 + 1.
  long long twice_area = 0;
  long long boundary = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const LatticePoint& p = hull[i];
    const LatticePoint& q = hull[(i + 1) % hull.size()];
    twice_area += p.x * q.y - q.x * p.y;
    boundary += std::gcd(std::llabs(q.x - p.x), std::llabs(q.y - p.y));
  }
  if (twice_area <= 0) return std::nullopt;
  return static_cast<int>((twice_area - boundary + 2) / 2);
}

std::optional<int> genus(const SpectralCurve& s) {
  const SmoothnessReport report = smoothness_report(s);
  if (s.k == 1) return 0;
  if (report.status != Smoothness::Smooth) {
    throw NotSmooth("genus needs a curve certified smooth");
  }
  return newton_polygon_interior(s.to_bipoly());
}

ZeroSectionReport zero_section_intersection(const SpectralCurve& s) {
  if (s.k < 1) throw ShapeMismatch("curve has no rank");
  ZeroSectionReport report;
  const UniPoly r = s.zero_section_restriction();
  if (r.is_zero()) {
    report.degenerate = true;
    return report;
  }
  report.total_multiplicity = 2 * s.k;
  report.finite_multiplicity = r.degree();
  report.infinity_multiplicity = 2 * s.k - r.degree();
  report.finite_squarefree = is_squarefree(r);
  report.transversal = report.finite_squarefree && report.infinity_multiplicity <= 1;
  return report;
}

}  // namespace cohiggs
