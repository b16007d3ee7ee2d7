#pragma once

#include "cohiggs/bundle.hpp"
#include "cohiggs/spectral.hpp"

#include <vector>

namespace cohiggs {

// Average splitting degree, the benchmark every invariant line must beat.
Rational slope(const CoHiggsBundleP1& b);

// Polynomial sections y = lambda(z) of a rank-two spectral curve, i.e. the
// polynomial eigenvalues of phi over the Gaussian rationals. Empty when the
// discriminant is not a perfect square. At most two, the root with the
// normalized square root added listed first. Throws RankNotTwo.
std::vector<UniPoly> eigen_sections_rank2(const SpectralCurve& s);

// Degree of the saturated invariant line ker(phi - lambda) inside V. When
// phi = lambda * I every line is invariant and the largest splitting degree
// is returned. Throws RankNotTwo / NotEigenSection.
int invariant_subbundle_degree(const CoHiggsBundleP1& b, const UniPoly& lambda);

enum class StabilityStatus { Stable, Semistable, Unstable, StableBySpectral, Unknown };

struct StabilityWitness {
  UniPoly lambda;  // polynomial eigenvalue
  int degree = 0;  // degree of its invariant line
};

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::Unknown;
  std::vector<StabilityWitness> witnesses;
};

// Exact rank-two decision: phi-invariant lines are spanned by polynomial
// eigenvalues, so the verdict compares each invariant degree against the
// slope. No eigen-sections means stable. Throws RankNotTwo.
StabilityVerdict decide_rank2(const CoHiggsBundleP1& b);

// Sufficient criterion in any rank: a reduced irreducible spectral curve
// leaves no room for an invariant proper subbundle.
bool stable_by_spectral(const CoHiggsBundleP1& b);

// Dispatcher: the exact decision in rank two, the spectral criterion
// (StableBySpectral or Unknown) otherwise.
StabilityVerdict stability_verdict(const CoHiggsBundleP1& b);

const char* to_string(StabilityStatus s);

}  // namespace cohiggs
