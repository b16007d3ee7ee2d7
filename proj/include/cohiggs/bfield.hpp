#pragma once

#include "cohiggs/bundle.hpp"
#include "cohiggs/matrices.hpp"
#include "cohiggs/multipoly.hpp"

#include <vector>

namespace cohiggs {

// Potential theta = sum_a f_a dz_a with polynomial coefficients in the
// holomorphic and antiholomorphic variables. The exact (0,2)-free B-field it
// generates is B = dbar(theta), with components d f_a / d zb_i.
class DolbeaultB {
 public:
  // One base variable: f may use z1 and zb1 only.
  static DolbeaultB one_variable(MultiPoly f);
  // Two base variables: each f_a may use z1, z2, zb1, zb2.
  static DolbeaultB two_variable(MultiPoly f1, MultiPoly f2);

  int variables() const { return vars_; }
  const MultiPoly& component(int a) const;        // f_a, zero-based index
  MultiPoly b_component(int a, int ibar) const;   // d f_a / d zb_ibar

 private:
  DolbeaultB(int vars, std::vector<MultiPoly> f);
  int vars_ = 0;
  std::vector<MultiPoly> f_;
};

// Higgs field entries lifted from polynomials in z to the shared polynomial
// ring, so they can be mixed with potentials.
MpMatrix phi_as_multipoly(const CoHiggsBundleP1& b);

// [phi.theta, dbar(phi.theta)] with phi.theta = sum_a phi_a f_a. One block
// per antiholomorphic direction, concatenated side by side into an
// n x (vars * n) matrix; it vanishes exactly when the conjugation by
// exp(phi.theta) transforms dbar without a residual obstruction.
MpMatrix commutator_obstruction(const std::vector<MpMatrix>& phis, const DolbeaultB& theta);

struct GaugeCheck {
  bool pass = false;
  MpMatrix holomorphy_residual;   // dbar(f phi) - (df/dzb1) phi
  MpMatrix commutator_residual;   // [f phi, dbar(f phi)]
};

// Verifies the two identities that let exp(f phi) absorb the B-field term on
// a single base variable: the derivative acts on f alone, and f phi commutes
// with its own dbar. Throws ShapeMismatch on a two-variable potential.
GaugeCheck gauge_equivalence_check(const CoHiggsBundleP1& b, const DolbeaultB& theta);

struct TransformedDbar {
  MpMatrix connection_term;  // the added dzb1 coefficient, (df/dzb1) phi
  bool phi_unchanged = true;
};

// The operator pair after turning on B = dbar(theta): dbar gains the
// interior product of phi with B while phi itself stays fixed.
TransformedDbar transformed_dbar(const CoHiggsBundleP1& b, const DolbeaultB& theta);

// Transition data exp(t y / z) on the overlap of the two charts of the total
// space of O(2); the parameter t adds under tensor product.
class LBTransition {
 public:
  explicit LBTransition(Rational t) : t_(std::move(t)) {}
  const Rational& t() const { return t_; }
  bool is_identity() const { return t_ == 0; }
  // Setting y = 0 makes the exponent vanish identically.
  GaussQ restricted_to_zero_section() const { return GaussQ(1); }

 private:
  Rational t_;
};

LBTransition lb_transition(const Rational& t);
LBTransition compose(const LBTransition& a, const LBTransition& b);

// Applies the exact B-field action and returns the holomorphic presentation:
// the identities above mean (dbar + i_phi B, phi) is conjugate to the input
// pair by exp(f phi), so the underlying data comes back unchanged.
CoHiggsBundleP1 apply_exact_bfield(const CoHiggsBundleP1& b, const DolbeaultB& theta);

}  // namespace cohiggs
