#include "cohiggs/stability.hpp"

#include "cohiggs/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohiggs {

Rational slope(const CoHiggsBundleP1& b) {
  if (b.rank() < 1) throw ShapeMismatch("bundle needs at least one summand");
  return Rational(b.degree(), b.rank());
}

std::vector<UniPoly> eigen_sections_rank2(const SpectralCurve& s) {
  if (s.k != 2) throw RankNotTwo("eigen-sections are computed for rank two");
  const UniPoly& a1 = s.a[0];
  const UniPoly& a2 = s.a[1];
  const UniPoly disc = a1 * a1 - GaussQ(4) * a2;
  const GaussQ half(Rational(1, 2));
  if (disc.is_zero()) {
    return {(-a1) * half};
  }
  const auto root = poly_sqrt(disc);
  if (!root) return {};
  return {(*root - a1) * half, (-*root - a1) * half};
}

int invariant_subbundle_degree(const CoHiggsBundleP1& b, const UniPoly& lambda) {
  if (b.rank() != 2) throw RankNotTwo("invariant lines are computed for rank two");
  if (!validate(b).ok()) {
    throw std::invalid_argument("invariant_subbundle_degree needs a valid bundle");
  }
  // lambda must satisfy the characteristic equation.
  const SpectralCurve s = char_poly(b);
  if (!(lambda * lambda + s.a[0] * lambda + s.a[1]).is_zero()) {
    throw NotEigenSection("lambda is not a polynomial eigenvalue");
  }
  const UniPoly& p11 = b.phi(0, 0);
  const UniPoly& p12 = b.phi(0, 1);
  const UniPoly& p21 = b.phi(1, 0);
  const UniPoly& p22 = b.phi(1, 1);

  // Eigenvector (phi_12, lambda - phi_11), or its mirror from the second row
  // when that one vanishes identically.
  UniPoly v1 = p12;
  UniPoly v2 = lambda - p11;
  if (v1.is_zero() && v2.is_zero()) {
    v1 = lambda - p22;
    v2 = p21;
  }
  if (v1.is_zero() && v2.is_zero()) {
    // phi is lambda * I: every line is invariant, the best one is a summand
    // of the larger degree.
    return std::max(b.degrees[0], b.degrees[1]);
  }
  // Saturate: divide out the common divisor so the section vanishes nowhere
  // in the finite chart; the degree bookkeeping below handles infinity.
  const UniPoly g = poly_gcd(v1, v2);
  if (!v1.is_zero()) v1 = div_exact(v1, g);
  if (!v2.is_zero()) v2 = div_exact(v2, g);

  int best = 0;
  bool seen = false;
  if (!v1.is_zero()) {
    best = b.degrees[0] - v1.degree();
    seen = true;
  }
  if (!v2.is_zero()) {
    const int c = b.degrees[1] - v2.degree();
    best = seen ? std::min(best, c) : c;
  }
  return best;
}

StabilityVerdict decide_rank2(const CoHiggsBundleP1& b) {
  if (b.rank() != 2) throw RankNotTwo("exact decision is rank two only");
  if (!validate(b).ok()) {
    throw std::invalid_argument("decide_rank2 needs a valid bundle");
  }
  const SpectralCurve s = char_poly(b);
  StabilityVerdict verdict;
  const std::vector<UniPoly> lambdas = eigen_sections_rank2(s);
  if (lambdas.empty()) {
    verdict.status = StabilityStatus::Stable;
    return verdict;
  }
  // Compare 2c against d_1 + d_2 to stay in integers.
  const int twice_slope = b.degree();
  int twice_best = 0;
  bool seen = false;
  for (const UniPoly& lambda : lambdas) {
    const int c = invariant_subbundle_degree(b, lambda);
    verdict.witnesses.push_back({lambda, c});
    if (!seen || 2 * c > twice_best) {
      twice_best = 2 * c;
      seen = true;
    }
  }
  if (twice_best > twice_slope) {
    verdict.status = StabilityStatus::Unstable;
  } else if (twice_best == twice_slope) {
    verdict.status = StabilityStatus::Semistable;
  } else {
    verdict.status = StabilityStatus::Stable;
  }
  return verdict;
}

bool stable_by_spectral(const CoHiggsBundleP1& b) {
  const SpectralCurve s = char_poly(b);
  if (!is_reduced(s)) return false;
  return is_irreducible(s) == TriBool::True;
}

StabilityVerdict stability_verdict(const CoHiggsBundleP1& b) {
  if (b.rank() == 2) return decide_rank2(b);
  StabilityVerdict verdict;
  verdict.status =
      stable_by_spectral(b) ? StabilityStatus::StableBySpectral : StabilityStatus::Unknown;
  return verdict;
}

const char* to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Stable: return "stable";
    case StabilityStatus::Semistable: return "semistable";
    case StabilityStatus::Unstable: return "unstable";
    case StabilityStatus::StableBySpectral: return "stable_by_spectral";
    case StabilityStatus::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace cohiggs
