#include "cohiggs/cohomology.hpp"

#include "cohiggs/errors.hpp"
#include "cohiggs/spectral.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cohiggs {

namespace {

struct BlockLayout {
  std::vector<CechSpace> spaces;
  std::vector<int> offsets;  // prefix sums, offsets.back() = total dimension
};

BlockLayout layout(const std::vector<int>& degrees, int twist, CechSpace::Kind kind) {
  BlockLayout out;
  out.offsets.push_back(0);
  for (int d : degrees) {
    out.spaces.push_back(CechSpace{d + twist, kind});
    out.offsets.push_back(out.offsets.back() + out.spaces.back().dim());
  }
  return out;
}

GqMatrix multiplication_matrix(const CoHiggsBundleP1& b, CechSpace::Kind kind) {
  const BlockLayout source = layout(b.degrees, 0, kind);
  const BlockLayout target = layout(b.degrees, 2, kind);
  GqMatrix m(target.offsets.back(), source.offsets.back());
  m.setZero();
  const int k = b.rank();
  for (int i = 0; i < k; ++i) {
    const CechSpace& ti = target.spaces[static_cast<std::size_t>(i)];
    for (int j = 0; j < k; ++j) {
      const CechSpace& sj = source.spaces[static_cast<std::size_t>(j)];
      const UniPoly& entry = b.phi(i, j);
      for (int s = sj.min_exponent(); s <= sj.max_exponent(); ++s) {
        for (int t = ti.min_exponent(); t <= ti.max_exponent(); ++t) {
          // Coefficient of z^t in entry * z^s; exponents below the target
          // window are coboundaries and simply dropped.
          const int power = t - s;
          if (power < 0) continue;
          m(target.offsets[static_cast<std::size_t>(i)] + (t - ti.min_exponent()),
            source.offsets[static_cast<std::size_t>(j)] + (s - sj.min_exponent())) =
              entry.coeff(power);
        }
      }
    }
  }
  return m;
}

}  // namespace

GqMatrix section_map_h0(const CoHiggsBundleP1& b) {
  return multiplication_matrix(b, CechSpace::H0);
}

GqMatrix section_map_h1(const CoHiggsBundleP1& b) {
  return multiplication_matrix(b, CechSpace::H1);
}

HypercohomologyReport hypercohomology(const CoHiggsBundleP1& b) {
  if (!validate(b).ok()) {
    throw std::invalid_argument("hypercohomology needs a bundle that passes validate");
  }
  const GqMatrix m0 = section_map_h0(b);
  const GqMatrix m1 = section_map_h1(b);
  const int rank0 = rank_exact(m0);
  const int rank1 = rank_exact(m1);

  HypercohomologyReport report;
  report.h0 = static_cast<int>(m0.cols()) - rank0;
  report.h1 = (static_cast<int>(m0.rows()) - rank0) + (static_cast<int>(m1.cols()) - rank1);
  report.h2 = static_cast<int>(m1.rows()) - rank1;
  report.index = report.h0 - report.h1 + report.h2;
  report.zero_locus_dim = zero_locus_section_dim(b);
  return report;
}

std::optional<int> zero_locus_section_dim(const CoHiggsBundleP1& b) {
  const ZeroSectionReport z = zero_section_intersection(char_poly(b));
  if (z.degenerate || !z.transversal) return std::nullopt;
  return 2 * b.rank();
}

TheoremCheck theorem_check(const CoHiggsBundleP1& b) {
  TheoremCheck check;
  if (!validate(b).ok()) {
    check.status = TheoremStatus::Skipped;
    check.reason = "bundle_invalid";
    return check;
  }
  const ZeroSectionReport z = zero_section_intersection(char_poly(b));
  if (z.degenerate) {
    check.status = TheoremStatus::Skipped;
    check.reason = "zero_section_degenerate";
    return check;
  }
  if (!z.transversal) {
    check.status = TheoremStatus::Skipped;
    check.reason = "intersection_not_transversal";
    return check;
  }
  const HypercohomologyReport report = hypercohomology(b);
  const int expected = 2 * b.rank();
  if (report.h0 == 0 && report.h2 == 0 && report.h1 == expected) {
    check.status = TheoremStatus::Pass;
    return check;
  }
  check.status = TheoremStatus::Fail;
  check.reason = "dims (" + std::to_string(report.h0) + "," + std::to_string(report.h1) +
                 "," + std::to_string(report.h2) + ") differ from (0," +
                 std::to_string(expected) + ",0)";
  return check;
}

const char* to_string(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::Pass: return "pass";
    case TheoremStatus::Fail: return "fail";
    case TheoremStatus::Skipped: return "skipped";
  }
  return "skipped";
}

}  // namespace cohiggs
