#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace cohiggs {

// A point on a matrix-triple trajectory: dT1/dt = [T2, T3] and cyclic.
struct NahmState {
  double t = 0.0;
  Eigen::MatrixXcd T1, T2, T3;

  Eigen::Index size() const { return T1.rows(); }
};

struct NahmRhs {
  Eigen::MatrixXcd dT1, dT2, dT3;
};

NahmRhs nahm_rhs(const NahmState& s);

struct IntegratorOptions {
  // Frobenius-norm ceiling on any T_i; crossing it raises PoleEncountered.
  double blowup_threshold = 1e8;
};

using StepObserver = std::function<void(const NahmState&)>;

// Classical fourth-order Runge-Kutta with a fixed step of magnitude dt
// (adjusted minimally so the final step lands exactly on t_end). t_end is the
// absolute target time; integrating backwards is allowed. The observer, when
// set, sees the initial state and every accepted step.
NahmState integrate(const NahmState& s0, double t_end, double dt,
                    const IntegratorOptions& opts = {}, const StepObserver& observer = {});

// Quadratic pencil A(z) = a0 + a1 z + a2 z^2 and its companion B(z) = b0 +
// b1 z with a0 = T1 + i T2, a1 = 2 i T3, a2 = T1 - i T2, b0 = a1 / 2,
// b1 = a2; the triple equations become dA/dt = [B, A] for every z.
struct LaxPair {
  Eigen::MatrixXcd a0, a1, a2;
  Eigen::MatrixXcd b0, b1;
};

LaxPair lax_pair(const NahmState& s);

// Inverts the pencil encoding back to a matrix triple.
NahmState state_from_pencil(double t, const Eigen::MatrixXcd& a0, const Eigen::MatrixXcd& a1,
                            const Eigen::MatrixXcd& a2);

// Integrates the pencil equation dA/dt = [B(A), A] directly and converts the
// result back; agrees with integrate up to integration error.
NahmState lax_flow(const NahmState& s0, double t_end, double dt,
                   const IntegratorOptions& opts = {});

// Coefficients c of det(y I - M) = y^n + c[0] y^(n-1) + ... + c[n-1],
// computed by the trace recursion.
std::vector<std::complex<double>> char_poly_coeffs(const Eigen::MatrixXcd& m);

// Real sample points for the pencil parameter, centered on zero.
std::vector<std::complex<double>> lax_sample_points(int samples);

// Largest absolute change of any characteristic coefficient of A(z) between
// the initial state and integrate(s0, t_end, dt), maximized over the sample
// points. Conserved quantities of the flow, so this measures solver drift.
double isospectral_drift(const NahmState& s0, double t_end, double dt, int samples,
                         const IntegratorOptions& opts = {});

// Frobenius norms of dA/dt - sign * [A, B] on this state, for sign = +1
// (first) and sign = -1 (second), summed over pencil coefficients.
std::pair<double, double> lax_sign_residuals(const NahmState& s);

struct LaxSignResult {
  int sign = 0;        // the orientation with the vanishing residual
  double residual = 0.0;
};

// Draws random non-commuting triples until one residual vanishes (to
// rounding) while the other does not, and reports that orientation. Throws
// NoConsistentSign after too many degenerate draws.
LaxSignResult lax_consistency_oracle(int k, std::uint64_t seed);

// Entries drawn as scale * (2u - 1) with u uniform on [0,1): real part first,
// then imaginary, entries row-major, matrices in index order.
NahmState random_nahm_state(int k, std::uint64_t seed, double scale);

// The su(2) pole family T_i(t) = e_i / (c - t) with [e2, e3] = e1 and cyclic;
// blows up at t = c.
NahmState pole_solution(double c, double t);

}  // namespace cohiggs
