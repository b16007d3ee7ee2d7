#include "cohiggs/bfield.hpp"

#include "cohiggs/errors.hpp"

#include <stdexcept>
#include <utility>

namespace cohiggs {

namespace {

void require_variables(const MultiPoly& f, int vars) {
  if (vars >= 2) return;
  if (f.depends_on(MultiPoly::Z2) || f.depends_on(MultiPoly::Zb2)) {
    throw ShapeMismatch("potential component uses a variable outside its arity");
  }
}

MpMatrix dbar_component(const MpMatrix& m, MultiPoly::Var v) {
  MpMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(i, j) = partial(m(i, j), v);
    }
  }
  return out;
}

}  // namespace

DolbeaultB::DolbeaultB(int vars, std::vector<MultiPoly> f) : vars_(vars), f_(std::move(f)) {}

DolbeaultB DolbeaultB::one_variable(MultiPoly f) {
  require_variables(f, 1);
  return DolbeaultB(1, {std::move(f)});
}

DolbeaultB DolbeaultB::two_variable(MultiPoly f1, MultiPoly f2) {
  return DolbeaultB(2, {std::move(f1), std::move(f2)});
}

const MultiPoly& DolbeaultB::component(int a) const {
  if (a < 0 || a >= vars_) throw ShapeMismatch("potential component index out of range");
  return f_[static_cast<std::size_t>(a)];
}

MultiPoly DolbeaultB::b_component(int a, int ibar) const {
  if (ibar < 0 || ibar >= vars_) throw ShapeMismatch("antiholomorphic index out of range");
  return partial(component(a), ibar == 0 ? MultiPoly::Zb1 : MultiPoly::Zb2);
}

MpMatrix phi_as_multipoly(const CoHiggsBundleP1& b) {
  const int k = b.rank();
  MpMatrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      MultiPoly entry;
      const UniPoly& p = b.phi(i, j);
      for (int e = 0; e <= p.degree(); ++e) {
        if (!p.coeff(e).is_zero()) {
          entry += MultiPoly::monomial_in(MultiPoly::Z1, e, p.coeff(e));
        }
      }
      out(i, j) = entry;
    }
  }
  return out;
}

MpMatrix commutator_obstruction(const std::vector<MpMatrix>& phis, const DolbeaultB& theta) {
  if (static_cast<int>(phis.size()) != theta.variables()) {
    throw ShapeMismatch("one higgs matrix per base variable is required");
  }
  if (phis.empty()) throw ShapeMismatch("at least one higgs matrix is required");
  const Eigen::Index n = phis.front().rows();
  for (const MpMatrix& p : phis) {
    if (p.rows() != n || p.cols() != n) {
      throw ShapeMismatch("higgs matrices must be square and of equal size");
    }
  }
  MpMatrix contracted(n, n);
  contracted.setZero();
  for (int a = 0; a < theta.variables(); ++a) {
    contracted += phis[static_cast<std::size_t>(a)] * theta.component(a);
  }
  MpMatrix out(n, n * theta.variables());
  for (int ibar = 0; ibar < theta.variables(); ++ibar) {
    const MpMatrix d =
        dbar_component(contracted, ibar == 0 ? MultiPoly::Zb1 : MultiPoly::Zb2);
    out.middleCols(ibar * n, n) = contracted * d - d * contracted;
  }
  return out;
}

GaugeCheck gauge_equivalence_check(const CoHiggsBundleP1& b, const DolbeaultB& theta) {
  if (theta.variables() != 1) {
    throw ShapeMismatch("the gauge argument runs over a single base variable");
  }
  if (!validate(b).ok()) {
    throw std::invalid_argument("gauge_equivalence_check needs a valid bundle");
  }
  const MpMatrix phi = phi_as_multipoly(b);
  const MultiPoly& f = theta.component(0);
  const MpMatrix fphi = phi * f;
  const MpMatrix dbar_fphi = dbar_component(fphi, MultiPoly::Zb1);
  const MpMatrix df_phi = phi * partial(f, MultiPoly::Zb1);

  GaugeCheck check;
  check.holomorphy_residual = dbar_fphi - df_phi;
  check.commutator_residual = fphi * dbar_fphi - dbar_fphi * fphi;
  check.pass = is_zero_matrix(check.holomorphy_residual) &&
               is_zero_matrix(check.commutator_residual);
  return check;
}

TransformedDbar transformed_dbar(const CoHiggsBundleP1& b, const DolbeaultB& theta) {
  if (theta.variables() != 1) {
    throw ShapeMismatch("the transformed operator lives over a single base variable");
  }
  if (!validate(b).ok()) {
    throw std::invalid_argument("transformed_dbar needs a valid bundle");
  }
  TransformedDbar out;
  const MpMatrix phi = phi_as_multipoly(b);
  out.connection_term = phi * partial(theta.component(0), MultiPoly::Zb1);
  out.phi_unchanged = true;
  return out;
}

LBTransition lb_transition(const Rational& t) { return LBTransition(t); }

LBTransition compose(const LBTransition& a, const LBTransition& b) {
  return LBTransition(a.t() + b.t());
}

CoHiggsBundleP1 apply_exact_bfield(const CoHiggsBundleP1& b, const DolbeaultB& theta) {
  const GaugeCheck check = gauge_equivalence_check(b, theta);
  if (!check.pass) {
    throw std::logic_error("exact B-field action failed its gauge identities");
  }
  return b;
}

}  // namespace cohiggs
