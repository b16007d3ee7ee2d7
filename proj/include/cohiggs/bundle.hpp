#pragma once

#include "cohiggs/matrices.hpp"

#include <cstdint>
#include <vector>

namespace cohiggs {

// V = O(d_1) + ... + O(d_k) on the projective line together with the Higgs
// field phi: V -> V(2). Entry (i,j) is a section of O(d_i - d_j + 2),
// presented as a polynomial in the affine coordinate z.
struct CoHiggsBundleP1 {
  std::vector<int> degrees;
  PolyMatrix phi;

  int rank() const { return static_cast<int>(degrees.size()); }
  int degree() const {
    int sum = 0;
    for (int d : degrees) sum += d;
    return sum;
  }
};

// Largest allowed z-degree of phi(i,j); negative means the entry must be
// identically zero.
inline int entry_degree_bound(const CoHiggsBundleP1& b, Eigen::Index i, Eigen::Index j) {
  return b.degrees[i] - b.degrees[j] + 2;
}

struct DegreeViolation {
  Eigen::Index row = 0, col = 0;
  int degree = 0;  // observed entry degree
  int bound = 0;   // allowed maximum
};

struct ValidationReport {
  bool shape_ok = true;  // phi is rank x rank with rank >= 1
  std::vector<DegreeViolation> violations;
  bool ok() const { return shape_ok && violations.empty(); }
};

// Checks each entry against its twist-degree bound, which is exactly the
// condition that phi stays polynomial in the chart at infinity.
ValidationReport validate(const CoHiggsBundleP1& b);

// Chart transition w = 1/z: entry (i,j) becomes w^(d_i-d_j+2) * phi_ij(1/w).
// Applying it twice with the same exponents is the identity. Throws
// NotHolomorphicAtInfinity if an entry exceeds its bound.
PolyMatrix to_infinity_chart(const CoHiggsBundleP1& b);

// O + T with phi(lambda, X) = (X, 0): degrees [0,2], phi_12 = 1, rest zero.
CoHiggsBundleP1 canonical_o_plus_t();

// Trivial splitting (all degrees zero); every entry a quadratic with integer
// coefficients in [-height, height]. Draws: entries row-major, coefficients
// ascending in power, one generator draw per coefficient.
CoHiggsBundleP1 random_trivial_bundle(int k, std::uint64_t seed, int height);

// Same drawing scheme for an arbitrary splitting type; entries whose degree
// bound is negative stay zero and consume no draws.
CoHiggsBundleP1 random_bundle(std::vector<int> degrees, std::uint64_t seed, int height);

}  // namespace cohiggs
