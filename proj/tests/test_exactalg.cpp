#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cohiggs/bipoly.hpp"
#include "cohiggs/errors.hpp"
#include "cohiggs/lcg.hpp"
#include "cohiggs/matrices.hpp"
#include "cohiggs/multipoly.hpp"
#include "cohiggs/polynomial.hpp"
#include "cohiggs/rational.hpp"

#include "oracles.hpp"

using namespace cohiggs;

namespace {

UniPoly upoly(std::initializer_list<int> ascending) {
  std::vector<GaussQ> c;
  for (int v : ascending) c.emplace_back(v);
  return UniPoly(std::move(c));
}

const UniPoly z = UniPoly::variable();

}  // namespace

TEST_CASE("gaussian rational arithmetic and canonical form") {
  GaussQ a(Rational(3, 4), Rational(1, 2));
  GaussQ b(Rational(-2), Rational(1));
  CHECK(to_string(a) == "3/4+1/2i");
  CHECK(to_string(b) == "-2+1i");
  CHECK(to_string(GaussQ(5)) == "5");
  CHECK(to_string(GaussQ(Rational(0), Rational(-2))) == "-2i");
  CHECK(to_string(GaussQ(0)) == "0");
  CHECK(a + b == GaussQ(Rational(-5, 4), Rational(3, 2)));
  CHECK(a * GaussQ::i() == GaussQ(Rational(-1, 2), Rational(3, 4)));
  CHECK(a / a == GaussQ(1));
  CHECK((a - a).is_zero());
  CHECK(a.conj() == GaussQ(Rational(3, 4), Rational(-1, 2)));
  CHECK(GaussQ(Rational(3), Rational(4)).norm() == Rational(25));
}

TEST_CASE("gaussq parser accepts the documented grammar") {
  CHECK(parse_gaussq("3/4+1/2i") == GaussQ(Rational(3, 4), Rational(1, 2)));
  CHECK(parse_gaussq("-2i") == GaussQ(Rational(0), Rational(-2)));
  CHECK(parse_gaussq("5") == GaussQ(5));
  CHECK(parse_gaussq("  -7/3  ") == GaussQ(Rational(-7, 3)));
  CHECK(parse_gaussq("i") == GaussQ::i());
  CHECK(parse_gaussq("-i") == -GaussQ::i());
  CHECK(parse_gaussq("1i+2") == GaussQ(Rational(2), Rational(1)));
  CHECK(parse_gaussq("0") == GaussQ(0));

  // Round trip: canonical emission re-parses to the same value.
  for (auto& q : {GaussQ(Rational(-3, 7), Rational(2, 9)), GaussQ(0), GaussQ::i(),
                  GaussQ(Rational(4), Rational(-1, 3))})
    CHECK(parse_gaussq(to_string(q)) == q);
}

TEST_CASE("gaussq parser reports byte positions") {
  auto pos_of = [](const char* s) {
    try {
      parse_gaussq(s);
    } catch (const ParseError& e) {
      return static_cast<long long>(e.position());
    }
    return -1LL;
  };
  CHECK(pos_of("") == 0);
  CHECK(pos_of("3/") == 2);
  CHECK(pos_of("3/0") == 2);
  CHECK(pos_of("2+3") == 2);      // duplicate real part
  CHECK(pos_of("i+2i") == 2);     // duplicate imaginary part
  CHECK(pos_of("1+2i junk") == 5);
  CHECK(pos_of("x") == 0);
}

TEST_CASE("exact square roots in Q and Q(i)") {
  CHECK(sqrt_exact(Rational(49, 9)) == Rational(7, 3));
  CHECK(sqrt_exact(Rational(2)) == std::nullopt);
  CHECK(sqrt_exact(Rational(-4)) == std::nullopt);
  CHECK(sqrt_exact(Rational(0)) == Rational(0));

  CHECK(sqrt_exact(GaussQ(-4)) == GaussQ(Rational(0), Rational(2)));
  // (1+i)^2 = 2i
  CHECK(sqrt_exact(GaussQ(Rational(0), Rational(2))) == GaussQ(Rational(1), Rational(1)));
  // (3+2i)^2 = 5+12i
  CHECK(sqrt_exact(GaussQ(Rational(5), Rational(12))) == GaussQ(Rational(3), Rational(2)));
  CHECK(sqrt_exact(GaussQ(Rational(1), Rational(1))) == std::nullopt);

  Lcg rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    GaussQ q(Rational(rng.next_int(-9, 9), rng.next_int(1, 9)),
             Rational(rng.next_int(-9, 9), rng.next_int(1, 9)));
    auto s = sqrt_exact(q * q);
    REQUIRE(s.has_value());
    CHECK(*s * *s == q * q);
  }
}

TEST_CASE("unipoly basics") {
  UniPoly p = upoly({1, 2, 3});  // 3z^2 + 2z + 1
  CHECK(p.degree() == 2);
  CHECK(p(GaussQ(2)) == GaussQ(17));
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly().is_zero());
  CHECK(upoly({0, 0, 0}).is_zero());
  CHECK(p - p == UniPoly());
  CHECK(z * z == upoly({0, 0, 1}));
  CHECK(derivative(p) == upoly({2, 6}));
  CHECK(derivative(UniPoly(7)).is_zero());
}

TEST_CASE("polynomial gcd") {
  CHECK(poly_gcd(z * z - UniPoly(1), z - UniPoly(1)) == z - UniPoly(1));
  // The algorithm is variable-agnostic: (y^2, y) in the variable y.
  CHECK(poly_gcd(z * z, z) == z);
  CHECK(poly_gcd(UniPoly(), UniPoly()) == UniPoly());
  CHECK(poly_gcd(UniPoly(), z + UniPoly(2)) == z + UniPoly(2));
  CHECK(poly_gcd(UniPoly(6), z).is_constant());

  // Random coprime pairs: coprimality certified by a nonzero Sylvester
  // resultant computed with the cofactor-expansion oracle.
  Lcg rng(23);
  int coprime_seen = 0;
  for (int trial = 0; trial < 12; ++trial) {
    UniPoly p = oracles::random_unipoly(rng, 3, 4);
    UniPoly q = oracles::random_unipoly(rng, 2, 4);
    if (p.degree() < 1 || q.degree() < 1) continue;
    GaussQ res = oracles::sylvester_resultant(p, q);
    if (res.is_zero()) continue;
    ++coprime_seen;
    CHECK(poly_gcd(p, q) == UniPoly(1));
  }
  CHECK(coprime_seen >= 8);

  // gcd divides both inputs exactly.
  for (int trial = 0; trial < 10; ++trial) {
    UniPoly g = oracles::random_unipoly(rng, 2, 3);
    UniPoly p = g * oracles::random_unipoly(rng, 2, 3);
    UniPoly q = g * oracles::random_unipoly(rng, 2, 3);
    UniPoly d = poly_gcd(p, q);
    if (p.is_zero() || q.is_zero() || d.is_zero()) continue;
    CHECK(divmod(p, d).second.is_zero());
    CHECK(divmod(q, d).second.is_zero());
    if (!g.is_zero() && g.degree() >= 1) CHECK(divmod(d, g).second.is_zero());
  }
}

TEST_CASE("squarefree part and decomposition") {
  UniPoly zm1 = z - UniPoly(1), zp2 = z + UniPoly(2);
  CHECK(squarefree_part(zm1 * zm1 * zp2) == zm1 * zp2);
  UniPoly q4 = upoly({-1, 0, 0, 0, 1});  // z^4 - 1
  CHECK(squarefree_part(q4) == q4);
  UniPoly zi = upoly({1, 0, 1});  // z^2 + 1
  CHECK(squarefree_part(zi * zi * zi) == zi);
  CHECK(is_squarefree(q4));
  CHECK_FALSE(is_squarefree(zi * zi));
  CHECK_THROWS_AS(squarefree_part(UniPoly()), ZeroPolynomial);

  auto dec = squarefree_decomposition(zm1 * zm1 * zp2);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0] == std::pair{zp2, 1});
  CHECK(dec[1] == std::pair{zm1, 2});

  // squarefree_part(p) is coprime with its derivative.
  Lcg rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    UniPoly p = oracles::random_unipoly(rng, 3, 3);
    if (p.is_zero() || p.degree() < 1) continue;
    UniPoly s = squarefree_part(p * p);
    CHECK(poly_gcd(s, derivative(s)).is_constant());
  }
}

TEST_CASE("polynomial square root") {
  CHECK(poly_sqrt(upoly({1, 2, 1})) == z + UniPoly(1));
  CHECK(poly_sqrt(upoly({1, 0, 1})) == std::nullopt);  // z^2+1 has roots +-i
  UniPoly q = UniPoly(std::vector<GaussQ>{GaussQ(2), GaussQ(-1), GaussQ(Rational(3, 2))});
  CHECK(poly_sqrt(q * q) == q);
  // Sign normalization: a negative leading coefficient flips.
  CHECK(poly_sqrt((-q) * (-q)) == q);
  CHECK(poly_sqrt(UniPoly()) == UniPoly());
  CHECK(poly_sqrt(upoly({0, 1})) == std::nullopt);  // odd degree

  Lcg rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    UniPoly p = oracles::random_unipoly(rng, 3, 5);
    auto r = poly_sqrt(p * p);
    REQUIRE(r.has_value());
    CHECK(*r * *r == p * p);
    if (!p.is_zero()) {
      const GaussQ& l = r->lead();
      CHECK((l.re > 0 || (l.re == 0 && l.im >= 0)));
    }
  }
}

TEST_CASE("reverse_to_degree") {
  UniPoly p = upoly({3, 0, 5});  // 5z^2 + 3
  CHECK(reverse_to_degree(p, 2) == upoly({5, 0, 3}));
  CHECK(reverse_to_degree(p, 4) == upoly({0, 0, 5, 0, 3}));
  CHECK(reverse_to_degree(UniPoly(), 0).is_zero());
  CHECK(reverse_to_degree(reverse_to_degree(p, 2), 2) == p);
  CHECK_THROWS_AS(reverse_to_degree(p, 1), NotHolomorphicAtInfinity);
}

TEST_CASE("gaussian roots of low-degree polynomials") {
  auto roots = gaussian_roots(upoly({-1, 0, 1}));  // z^2 - 1
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == GaussQ(1));
  CHECK(roots[1] == GaussQ(-1));
  roots = gaussian_roots(upoly({1, 0, 1}));  // z^2 + 1 -> +-i
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == GaussQ::i());
  roots = gaussian_roots(upoly({2, 0, 1}));  // z^2 + 2: no Gaussian-rational root
  CHECK(roots.empty());
  roots = gaussian_roots(upoly({-6, 2}));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == GaussQ(3));
  // Probe set finds small roots of higher-degree polynomials.
  roots = gaussian_roots(z * z * z - UniPoly(1));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == GaussQ(1));
}

TEST_CASE("bipoly arithmetic and substitution") {
  // F = y^2 - z^4 + 1
  BiPoly F = BiPoly::from_y_power(2, UniPoly(1)) + BiPoly(upoly({1, 0, 0, 0, -1}));
  CHECK(F.degree_y() == 2);
  CHECK(F(GaussQ(1), GaussQ(0)) == GaussQ(0));
  CHECK(F.specialize_z(GaussQ(2)) == upoly({-15, 0, 1}));
  CHECK(F.at_y(GaussQ(0)) == upoly({1, 0, 0, 0, -1}));
  CHECK(F.substitute_y(z * z) == UniPoly(1));  // (z^2)^2 - z^4 + 1
  CHECK(derivative_y(F) == BiPoly::from_y_power(1, UniPoly(2)));
  CHECK(derivative_z(F) == BiPoly(upoly({0, 0, 0, -4})));
}

TEST_CASE("resultant conventions") {
  BiPoly y = BiPoly::from_y_power(1, UniPoly(1));
  CHECK(resultant_y(y, y).is_zero());

  UniPoly p = upoly({1, 2}), q = upoly({4, 0, 1});
  CHECK(resultant_y(y - BiPoly(p), y - BiPoly(q)) == p - q);

  // (y^2 + a y + b, 2y + a) -> 4b - a^2: the determinant fixes the constant.
  UniPoly a = upoly({1, 1}), b = upoly({0, 0, 3});
  BiPoly F = BiPoly::from_y_power(2, UniPoly(1)) + BiPoly::from_y_power(1, a) + BiPoly(b);
  CHECK(resultant_y(F, derivative_y(F)) == GaussQ(4) * b - a * a);
}

TEST_CASE("resultant matches cofactor-determinant oracle and detects common factors") {
  Lcg rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    UniPoly a1 = oracles::random_unipoly(rng, 2, 3);
    UniPoly a0 = oracles::random_unipoly(rng, 2, 3);
    UniPoly b0 = oracles::random_unipoly(rng, 1, 3);
    BiPoly F = BiPoly::from_y_power(2, UniPoly(1)) + BiPoly::from_y_power(1, a1) + BiPoly(a0);
    BiPoly G = BiPoly::from_y_power(1, UniPoly(1)) + BiPoly(b0);

    // Oracle: same Sylvester matrix, cofactor determinant over UniPoly.
    PolyMatrix syl = PolyMatrix::Constant(3, 3, UniPoly());
    syl(0, 0) = UniPoly(1);
    syl(0, 1) = a1;
    syl(0, 2) = a0;
    syl(1, 0) = UniPoly(1);
    syl(1, 1) = b0;
    syl(2, 1) = UniPoly(1);
    syl(2, 2) = b0;
    CHECK(resultant_y(F, G) == oracles::cofactor_det<UniPoly>(syl));

    // Common factor forces a zero resultant.
    CHECK(resultant_y(F * G, G).is_zero());
    CHECK(gcd_y(F * G, G).degree_y() >= 1);
  }
}

TEST_CASE("gcd_y over the fraction field") {
  BiPoly y = BiPoly::from_y_power(1, UniPoly(1));
  BiPoly ymz = y - BiPoly(z);
  BiPoly ypz = y + BiPoly(z);
  BiPoly g = gcd_y(ymz * ypz, ymz);
  CHECK(g == ymz);
  CHECK(gcd_y(ymz * ymz, derivative_y(ymz * ymz)) == ymz);
  // Coprime in y: gcd has y-degree 0.
  CHECK(gcd_y(ymz, ypz).degree_y() == 0);
  // Nonzero resultant iff gcd trivial (both directions, random samples).
  Lcg rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    BiPoly F = BiPoly::from_y_power(2, UniPoly(1)) +
               BiPoly::from_y_power(1, oracles::random_unipoly(rng, 2, 3)) +
               BiPoly(oracles::random_unipoly(rng, 2, 3));
    BiPoly G = BiPoly::from_y_power(1, UniPoly(1)) + BiPoly(oracles::random_unipoly(rng, 2, 3));
    bool res_zero = resultant_y(F, G).is_zero();
    bool gcd_trivial = gcd_y(F, G).degree_y() == 0;
    CHECK(res_zero == !gcd_trivial);
  }
}

TEST_CASE("kernel basis and exact rank") {
  GqMatrix m(2, 2);
  m << GaussQ(1), GaussQ(1), GaussQ(1), GaussQ(1);
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  // Spanning vector proportional to (1, -1).
  CHECK(basis[0](0) * GaussQ(-1) == basis[0](1));
  CHECK(is_zero_matrix(m * basis[0]));

  GqMatrix id = GqMatrix::Identity(3, 3);
  CHECK(kernel_basis(id).empty());
  CHECK(rank_exact(id) == 3);

  // Random 4x6 built with rank 4: kernel has dimension 2; rank cross-checked
  // against the independent elimination oracle.
  Lcg rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    GqMatrix a = GqMatrix::Constant(4, 6, GaussQ(0));
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 6; ++j) a(i, j) = GaussQ(rng.next_int(-5, 5));
    Eigen::Index r = rank_exact(a);
    CHECK(r == oracles::elimination_rank(a));
    auto kb = kernel_basis(a);
    CHECK(static_cast<Eigen::Index>(kb.size()) == 6 - r);
    for (const auto& v : kb) CHECK(is_zero_matrix(a * v));
    if (r == 4) CHECK(kb.size() == 2);
  }

  // Zero-size edge cases.
  GqMatrix empty(0, 3);
  CHECK(rank_exact(empty) == 0);
  CHECK(kernel_basis(empty).size() == 3);
}

TEST_CASE("fraction-free determinant over polynomials") {
  Lcg rng(83);
  for (int trial = 0; trial < 6; ++trial) {
    PolyMatrix m(3, 3);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) m(i, j) = oracles::random_unipoly(rng, 1, 2);
    CHECK(ring_det(m) == oracles::cofactor_det<UniPoly>(m));
  }
  PolyMatrix sing(2, 2);
  sing << z, z, z, z;
  CHECK(ring_det(sing).is_zero());
  GqMatrix q(2, 2);
  q << GaussQ(Rational(1, 2)), GaussQ(2), GaussQ(3), GaussQ(Rational(1, 3));
  CHECK(ring_det(q) == oracles::cofactor_det<GaussQ>(q));
}

TEST_CASE("multipoly arithmetic and formal conjugate-variable calculus") {
  using MP = MultiPoly;
  MP z1 = MP::variable(MP::Z1), zb1 = MP::variable(MP::Zb1);
  MP f = z1 * z1 * zb1 + GaussQ(2) * z1;
  CHECK(partial(f, MP::Zb1) == z1 * z1);
  CHECK(partial(f, MP::Z1) == GaussQ(2) * z1 * zb1 + MP(2));
  CHECK(partial(f, MP::Z2).is_zero());
  CHECK(f.depends_on(MP::Zb1));
  CHECK_FALSE(f.depends_on(MP::Zb2));
  CHECK((f - f).is_zero());
  CHECK(f * MP(0) == MP());

  // Product rule, checked symbolically.
  MP g = zb1 * zb1 + z1;
  CHECK(partial(f * g, MP::Zb1) == partial(f, MP::Zb1) * g + f * partial(g, MP::Zb1));
}

TEST_CASE("multipoly matrices commute exactly when they commute") {
  using MP = MultiPoly;
  MpMatrix n = MpMatrix::Constant(2, 2, MP());
  n(0, 1) = MP(1);
  MpMatrix prod = n * n;
  CHECK(is_zero_matrix(prod));
  MpMatrix a = MpMatrix::Constant(2, 2, MP());
  a(0, 0) = MP::variable(MP::Z1);
  a(1, 1) = MP(3);
  CHECK_FALSE(is_zero_matrix(a * n - n * a));
}

TEST_CASE("deterministic generator follows its documented recurrence") {
  Lcg g(1);
  std::uint64_t s = 1;
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  CHECK(g.next_u32() == static_cast<std::uint32_t>(s >> 32));
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  CHECK(g.next_u32() == static_cast<std::uint32_t>(s >> 32));

  Lcg a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_int(-7, 7) == b.next_int(-7, 7));
  Lcg c(43);
  double x = c.next_unit();
  CHECK(x >= 0.0);
  CHECK(x < 1.0);
}
