#pragma once

#include "cohiggs/bipoly.hpp"
#include "cohiggs/bundle.hpp"

#include <optional>
#include <vector>

namespace cohiggs {

// Characteristic curve F(z, y) = y^k + sum_j a_j(z) y^(k-j) inside the total
// space of O(2); the coefficient a_j has z-degree at most 2j.
struct SpectralCurve {
  int k = 0;
  std::vector<UniPoly> a;  // a[j-1] stores a_j

  BiPoly to_bipoly() const;
  // F(z, 0) = a_k, the divisor cut out on the zero section.
  UniPoly zero_section_restriction() const;
};

// det(y*I - phi) computed by the trace recursion, which never divides by a
// polynomial, only by integers. Requires a bundle that passes validate.
SpectralCurve char_poly(const CoHiggsBundleP1& b);

// The same curve over the chart at infinity, in coordinates (w, eta) with
// w = 1/z and eta = y * w^2: returns eta^k + sum_j rev(a_j) eta^(k-j) where
// rev reverses a_j against its degree bound 2j.
BiPoly infinity_chart_curve(const SpectralCurve& s);

// True when F is squarefree as a polynomial in y over the rational function
// field, detected by a nonzero y-resultant of F and dF/dy.
bool is_reduced(const SpectralCurve& s);

enum class Smoothness { Smooth, Singular, Undetermined };

struct SingularWitness {
  char chart = 'z';  // 'z' for the finite chart, 'w' for the one at infinity
  GaussQ base;       // coordinate on the line
  GaussQ fibre;      // coordinate along the fibre of O(2)
};

struct SmoothnessReport {
  Smoothness status = Smoothness::Undetermined;
  std::optional<SingularWitness> witness;
};

// Smooth when the y-discriminant is squarefree over both charts (a singular
// point forces a repeated discriminant root); Singular only with an exactly
// verified witness point; Undetermined otherwise. Throws NotReduced.
SmoothnessReport smoothness_report(const SpectralCurve& s);

enum class TriBool { True, False, Unknown };

// Geometric irreducibility over the complex numbers. Exact for k = 1, for
// smooth curves, and for k = 2 (the discriminant is a square if and only if
// the curve splits into two sections). Unknown only for singular curves of
// rank three or more. Throws NotReduced.
TriBool is_irreducible(const SpectralCurve& s);

// Genus of the smooth compact curve: interior lattice points of the Newton
// polygon, (k-1)^2 when every coefficient degree bound is attained; k = 1
// sections are rational. nullopt when the polygon is degenerate. Throws
// NotSmooth unless smoothness_report certifies Smooth.
std::optional<int> genus(const SpectralCurve& s);

struct ZeroSectionReport {
  bool degenerate = false;        // a_k == 0: the curve contains the zero section
  int total_multiplicity = 0;     // always 2k when not degenerate
  int finite_multiplicity = 0;    // deg a_k
  int infinity_multiplicity = 0;  // 2k - deg a_k
  bool finite_squarefree = false;
  bool transversal = false;       // all 2k intersection points simple
};

ZeroSectionReport zero_section_intersection(const SpectralCurve& s);

// Interior lattice-point count of the convex hull of the support of f in the
// (z-exponent, y-exponent) plane; nullopt when the hull has no area.
std::optional<int> newton_polygon_interior(const BiPoly& f);

}  // namespace cohiggs
