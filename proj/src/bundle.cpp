#include "cohiggs/bundle.hpp"

#include "cohiggs/errors.hpp"
#include "cohiggs/lcg.hpp"

#include <utility>

namespace cohiggs {

ValidationReport validate(const CoHiggsBundleP1& b) {
  ValidationReport report;
  const int k = b.rank();
  if (k < 1 || b.phi.rows() != k || b.phi.cols() != k) {
    report.shape_ok = false;
    return report;
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      if (b.phi(i, j).is_zero()) continue;  // zero is a section of anything
      const int bound = entry_degree_bound(b, i, j);
      const int deg = b.phi(i, j).degree();
      if (deg > bound) {
        report.violations.push_back({i, j, deg, bound});
      }
    }
  }
  return report;
}

PolyMatrix to_infinity_chart(const CoHiggsBundleP1& b) {
  const ValidationReport report = validate(b);
  if (!report.ok()) {
    throw NotHolomorphicAtInfinity("higgs field entry exceeds its twist degree bound");
  }
  const int k = b.rank();
  PolyMatrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const UniPoly& entry = b.phi(i, j);
      if (entry.is_zero()) {
        out(i, j) = UniPoly{};
      } else {
        out(i, j) = reverse_to_degree(entry, entry_degree_bound(b, i, j));
      }
    }
  }
  return out;
}

CoHiggsBundleP1 canonical_o_plus_t() {
  CoHiggsBundleP1 b;
  b.degrees = {0, 2};
  b.phi = PolyMatrix(2, 2);
  b.phi.setZero();
  b.phi(0, 1) = UniPoly{GaussQ(1)};
  return b;
}

CoHiggsBundleP1 random_bundle(std::vector<int> degrees, std::uint64_t seed, int height) {
  CoHiggsBundleP1 b;
  b.degrees = std::move(degrees);
  const int k = b.rank();
  if (k < 1) throw ShapeMismatch("bundle needs at least one summand");
  b.phi = PolyMatrix(k, k);
  b.phi.setZero();
  Lcg rng(seed);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const int bound = entry_degree_bound(b, i, j);
      if (bound < 0) continue;
      std::vector<GaussQ> coeffs(static_cast<std::size_t>(bound) + 1);
      for (int c = 0; c <= bound; ++c) {
        coeffs[static_cast<std::size_t>(c)] = GaussQ(rng.next_int(-height, height));
      }
      b.phi(i, j) = UniPoly(std::move(coeffs));
    }
  }
  return b;
}

CoHiggsBundleP1 random_trivial_bundle(int k, std::uint64_t seed, int height) {
  return random_bundle(std::vector<int>(static_cast<std::size_t>(k), 0), seed, height);
}

}  // namespace cohiggs
