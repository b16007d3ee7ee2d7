#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cohiggs/errors.hpp"
#include "cohiggs/lcg.hpp"
#include "cohiggs/stability.hpp"
#include "oracles.hpp"

using namespace cohiggs;

namespace {

CoHiggsBundleP1 make_bundle(std::vector<int> degrees, std::vector<std::vector<UniPoly>> rows) {
  CoHiggsBundleP1 b;
  b.degrees = std::move(degrees);
  const int k = b.rank();
  b.phi = PolyMatrix(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b.phi(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return b;
}

const UniPoly kZ({GaussQ(0), GaussQ(1)});
const UniPoly kZ2({GaussQ(0), GaussQ(0), GaussQ(1)});
const UniPoly kOne({GaussQ(1)});
const UniPoly kZero;

using oracles::OracleStability;

OracleStability to_oracle(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Stable: return OracleStability::Stable;
    case StabilityStatus::Semistable: return OracleStability::Semistable;
    case StabilityStatus::Unstable: return OracleStability::Unstable;
    default: throw std::logic_error("verdict outside the exact rank-two range");
  }
}

}  // namespace

TEST_CASE("slope is the average splitting degree") {
  CHECK(slope(canonical_o_plus_t()) == Rational(1));
  CHECK(slope(random_bundle({1, -1}, 1, 1)) == Rational(0));
  CHECK(slope(random_bundle({-3, 0, 1}, 1, 1)) == Rational(-2, 3));
  CHECK(slope(random_bundle({5}, 1, 1)) == Rational(5));
}

TEST_CASE("polynomial eigenvalues of split and non-split curves") {
  // diag(z^2, 0): discriminant z^4, a perfect square.
  const SpectralCurve split = char_poly(make_bundle({0, 0}, {{kZ2, kZero}, {kZero, kZero}}));
  const std::vector<UniPoly> ls = eigen_sections_rank2(split);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == kZ2);
  CHECK(ls[1] == kZero);

  // Antidiagonal (z^2+1, z^2-1): discriminant 4(z^4-1), not a square.
  const UniPoly z2p1({GaussQ(1), GaussQ(0), GaussQ(1)});
  const UniPoly z2m1({GaussQ(-1), GaussQ(0), GaussQ(1)});
  const SpectralCurve anti = char_poly(make_bundle({0, 0}, {{kZero, z2p1}, {z2m1, kZero}}));
  CHECK(eigen_sections_rank2(anti).empty());

  // Repeated eigenvalue: (y - z)^2.
  SpectralCurve doubled;
  doubled.k = 2;
  doubled.a = {GaussQ(-2) * kZ, kZ * kZ};
  const std::vector<UniPoly> ld = eigen_sections_rank2(doubled);
  REQUIRE(ld.size() == 1);
  CHECK(ld[0] == kZ);

  SpectralCurve rank3;
  rank3.k = 3;
  rank3.a = {kZero, kZero, kOne};
  CHECK_THROWS_AS(eigen_sections_rank2(rank3), RankNotTwo);
}

TEST_CASE("eigenvalues agree with the sample-and-interpolate oracle") {
  Lcg rng(111);
  int with_sections = 0;
  for (int trial = 0; trial < 30; ++trial) {
    CoHiggsBundleP1 b;
    // Mix generic and triangular draws so both outcomes appear.
    if (trial % 3 == 0) {
      b = random_trivial_bundle(2, rng.next_u64(), 3);
    } else {
      b = random_trivial_bundle(2, rng.next_u64(), 3);
      b.phi(1, 0) = kZero;
    }
    const SpectralCurve s = char_poly(b);
    std::vector<UniPoly> fast = eigen_sections_rank2(s);
    std::vector<UniPoly> slow = oracles::oracle_eigen_sections(s);
    std::sort(fast.begin(), fast.end(),
              [](const UniPoly& a, const UniPoly& b2) { return to_string(a) < to_string(b2); });
    std::sort(slow.begin(), slow.end(),
              [](const UniPoly& a, const UniPoly& b2) { return to_string(a) < to_string(b2); });
    CHECK(fast == slow);
    if (!fast.empty()) ++with_sections;
    for (const UniPoly& lambda : fast) {
      CHECK((lambda * lambda + s.a[0] * lambda + s.a[1]).is_zero());
      CHECK(lambda.degree() <= 2);
    }
  }
  CHECK(with_sections >= 10);  // the triangular draws always split
}

TEST_CASE("invariant line degrees of direct sums and triangular fields") {
  // diag(z^2, -1): the eigen-line of z^2 is the first factor.
  const CoHiggsBundleP1 d =
      make_bundle({0, 0}, {{kZ2, kZero}, {kZero, UniPoly({GaussQ(-1)})}});
  CHECK(invariant_subbundle_degree(d, kZ2) == 0);
  CHECK(invariant_subbundle_degree(d, UniPoly({GaussQ(-1)})) == 0);

  // O(1) + O(-1) with O(1) invariant: the line comes in with its full degree.
  const CoHiggsBundleP1 t = make_bundle({1, -1}, {{kZero, kZ}, {kZero, kOne}});
  CHECK(invariant_subbundle_degree(t, kZero) == 1);
  CHECK(invariant_subbundle_degree(t, kOne) == -1);

  // Scalar field: every line is invariant, the best is the larger summand.
  const CoHiggsBundleP1 sc = make_bundle({1, -1}, {{UniPoly({GaussQ(3)}), kZero},
                                                   {kZero, UniPoly({GaussQ(3)})}});
  CHECK(invariant_subbundle_degree(sc, UniPoly({GaussQ(3)})) == 1);

  CHECK_THROWS_AS(invariant_subbundle_degree(d, kOne), NotEigenSection);
  CHECK_THROWS_AS(invariant_subbundle_degree(random_bundle({0}, 1, 1), kZero), RankNotTwo);
}

TEST_CASE("the three benchmark verdicts") {
  // Semistable: diag(z^2, 0) on the trivial bundle, witness degree 0 = slope.
  const StabilityVerdict semi =
      decide_rank2(make_bundle({0, 0}, {{kZ2, kZero}, {kZero, kZero}}));
  CHECK(semi.status == StabilityStatus::Semistable);
  REQUIRE(semi.witnesses.size() == 2);
  CHECK(semi.witnesses[0].degree == 0);
  CHECK(semi.witnesses[1].degree == 0);

  // Stable: no polynomial eigenvalues at all.
  const UniPoly z2p1({GaussQ(1), GaussQ(0), GaussQ(1)});
  const UniPoly z2m1({GaussQ(-1), GaussQ(0), GaussQ(1)});
  const StabilityVerdict stable =
      decide_rank2(make_bundle({0, 0}, {{kZero, z2p1}, {z2m1, kZero}}));
  CHECK(stable.status == StabilityStatus::Stable);
  CHECK(stable.witnesses.empty());

  // Unstable: an invariant line of positive degree against slope zero.
  const StabilityVerdict unstable =
      decide_rank2(make_bundle({1, -1}, {{kZero, kZ}, {kZero, kOne}}));
  CHECK(unstable.status == StabilityStatus::Unstable);
  REQUIRE_FALSE(unstable.witnesses.empty());
  int best = unstable.witnesses[0].degree;
  for (const auto& w : unstable.witnesses) best = std::max(best, w.degree);
  CHECK(best == 1);

  CHECK_THROWS_AS(decide_rank2(random_bundle({0, 0, 0}, 1, 1)), RankNotTwo);
}

TEST_CASE("exact verdicts match the degree-scanning oracle across strata") {
  Lcg rng(777);
  int stables = 0, semis = 0, unstables = 0;
  for (int trial = 0; trial < 40; ++trial) {
    CoHiggsBundleP1 b;
    switch (trial % 4) {
      case 0:
        b = random_trivial_bundle(2, rng.next_u64(), 3);
        break;
      case 1: {  // diagonal with equal degrees: always balanced
        const int d1 = rng.next_int(-2, 2);
        b = random_bundle({d1, d1}, rng.next_u64(), 3);
        b.phi(0, 1) = kZero;
        b.phi(1, 0) = kZero;
        break;
      }
      case 2: {  // upper triangular
        const int d1 = rng.next_int(-2, 2);
        const int d2 = rng.next_int(-2, 2);
        b = random_bundle({d1, d2}, rng.next_u64(), 3);
        b.phi(1, 0) = kZero;
        break;
      }
      default: {  // lower triangular
        const int d1 = rng.next_int(-2, 2);
        const int d2 = rng.next_int(-2, 2);
        b = random_bundle({d1, d2}, rng.next_u64(), 3);
        b.phi(0, 1) = kZero;
        break;
      }
    }
    REQUIRE(validate(b).ok());
    const StabilityVerdict fast = decide_rank2(b);
    const OracleStability slow = oracles::oracle_decide_rank2(b, char_poly(b));
    CHECK(to_oracle(fast.status) == slow);
    if (fast.status == StabilityStatus::Stable) ++stables;
    if (fast.status == StabilityStatus::Semistable) ++semis;
    if (fast.status == StabilityStatus::Unstable) ++unstables;
  }
  // The strata are chosen so every verdict actually occurs.
  CHECK(stables > 0);
  CHECK(semis > 0);
  CHECK(unstables > 0);
}

TEST_CASE("witness degrees agree with the scanning oracle") {
  Lcg rng(888);
  for (int trial = 0; trial < 12; ++trial) {
    const int d1 = static_cast<int>(rng.next_int(-2, 2));
    const int d2 = static_cast<int>(rng.next_int(-2, 2));
    CoHiggsBundleP1 b = random_bundle({d1, d2}, rng.next_u64(), 2);
    b.phi(1, 0) = kZero;  // force a split curve
    const StabilityVerdict v = decide_rank2(b);
    for (const StabilityWitness& w : v.witnesses) {
      CHECK(w.degree == oracles::oracle_invariant_degree(b, w.lambda));
    }
  }
}

TEST_CASE("an irreducible spectral curve certifies stability in any rank") {
  // Antidiagonal rank two: already known stable, also via the curve.
  const UniPoly z2p1({GaussQ(1), GaussQ(0), GaussQ(1)});
  const UniPoly z2m1({GaussQ(-1), GaussQ(0), GaussQ(1)});
  CHECK(stable_by_spectral(make_bundle({0, 0}, {{kZero, z2p1}, {z2m1, kZero}})));

  // y^2 = z is irreducible although singular at infinity.
  CHECK(stable_by_spectral(make_bundle({0, 0}, {{kZero, kOne}, {kZ, kZero}})));

  // A split field is never certified.
  CHECK_FALSE(stable_by_spectral(make_bundle({0, 0}, {{kZ2, kZero}, {kZero, kZero}})));
  // The canonical field is not even reduced.
  CHECK_FALSE(stable_by_spectral(canonical_o_plus_t()));

  // Rank three: a smooth random curve certifies, a block-diagonal one fails.
  bool certified = false;
  for (std::uint64_t seed = 1; seed < 50 && !certified; ++seed) {
    const CoHiggsBundleP1 b = random_trivial_bundle(3, seed, 3);
    const SpectralCurve s = char_poly(b);
    if (is_reduced(s) && smoothness_report(s).status == Smoothness::Smooth) {
      CHECK(stable_by_spectral(b));
      certified = true;
    }
  }
  CHECK(certified);
}

TEST_CASE("the dispatcher uses the exact test in rank two and the curve otherwise") {
  const StabilityVerdict two =
      stability_verdict(make_bundle({0, 0}, {{kZ2, kZero}, {kZero, kZero}}));
  CHECK(two.status == StabilityStatus::Semistable);

  CoHiggsBundleP1 three = random_trivial_bundle(3, 2, 3);
  const StabilityVerdict v3 = stability_verdict(three);
  CHECK((v3.status == StabilityStatus::StableBySpectral ||
         v3.status == StabilityStatus::Unknown));

  // Rank one: the curve is the graph of the single entry, always irreducible.
  const StabilityVerdict one = stability_verdict(random_bundle({0}, 3, 2));
  CHECK(one.status == StabilityStatus::StableBySpectral);

  CHECK(to_string(StabilityStatus::Stable) == std::string("stable"));
  CHECK(to_string(StabilityStatus::StableBySpectral) == std::string("stable_by_spectral"));
}

TEST_CASE("a certified smooth rank-two curve forces a stable verdict") {
  int tested = 0;
  for (std::uint64_t seed = 1; seed < 100 && tested < 5; ++seed) {
    const CoHiggsBundleP1 b = random_trivial_bundle(2, seed, 3);
    const SpectralCurve s = char_poly(b);
    if (!is_reduced(s) || smoothness_report(s).status != Smoothness::Smooth) continue;
    CHECK(decide_rank2(b).status == StabilityStatus::Stable);
    ++tested;
  }
  CHECK(tested == 5);
}
