#pragma once

#include "cohiggs/bundle.hpp"

#include <optional>
#include <string>

namespace cohiggs {

// Cohomology of O(d) on the projective line in the monomial basis.
inline int h0_dim(int d) { return d >= 0 ? d + 1 : 0; }
inline int h1_dim(int d) { return d <= -2 ? -d - 1 : 0; }

// Bookkeeping for one summand O(d): H0 is spanned by z^0..z^d, H1 by the
// negative-exponent window z^(d+1)..z^(-1) on the chart overlap.
struct CechSpace {
  enum Kind { H0, H1 };
  int degree = 0;
  Kind kind = H0;

  int dim() const { return kind == H0 ? h0_dim(degree) : h1_dim(degree); }
  int min_exponent() const { return kind == H0 ? 0 : degree + 1; }
  int max_exponent() const { return kind == H0 ? degree : -1; }
};

// Multiplication by phi from (+)H0(O(d_j)) to (+)H0(O(d_i + 2)), blocks in
// summand order, columns and rows ordered by ascending exponent.
GqMatrix section_map_h0(const CoHiggsBundleP1& b);

// Multiplication by phi from (+)H1(O(d_j)) to (+)H1(O(d_i + 2)); products are
// truncated to the target window z^(d_i + 3)..z^(-1), which is the quotient
// by coboundaries.
GqMatrix section_map_h1(const CoHiggsBundleP1& b);

struct HypercohomologyReport {
  int h0 = 0, h1 = 0, h2 = 0;
  int index = 0;                      // h0 - h1 + h2, always -2k here
  std::optional<int> zero_locus_dim;  // functions on S meet Z when transversal
};

// Hypercohomology of the two-term complex V -> V(2) given by phi:
// h0 = ker on sections, h2 = coker on H1, h1 = coker on sections + ker on H1.
HypercohomologyReport hypercohomology(const CoHiggsBundleP1& b);

// Dimension of functions on the length-2k scheme where the spectral curve
// meets the zero section: 2k when the intersection is transversal, nullopt
// when it is degenerate or non-reduced.
std::optional<int> zero_locus_section_dim(const CoHiggsBundleP1& b);

enum class TheoremStatus { Pass, Fail, Skipped };

struct TheoremCheck {
  TheoremStatus status = TheoremStatus::Skipped;
  std::string reason;  // populated when skipped or failed
};

// Vanishing statement: when the spectral curve meets the zero section
// transversally, h0 = h2 = 0 and h1 equals the zero-locus section count.
TheoremCheck theorem_check(const CoHiggsBundleP1& b);

const char* to_string(TheoremStatus s);

}  // namespace cohiggs
