#include "cohiggs/nahm.hpp"

#include "cohiggs/errors.hpp"
#include "cohiggs/lcg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cohiggs {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a * b - b * a;
}

template <std::size_t N>
struct MatVec {
  std::array<Eigen::MatrixXcd, N> m;

  MatVec operator+(const MatVec& o) const {
    MatVec out = *this;
    for (std::size_t i = 0; i < N; ++i) out.m[i] += o.m[i];
    return out;
  }
  MatVec operator*(double s) const {
    MatVec out = *this;
    for (std::size_t i = 0; i < N; ++i) out.m[i] *= s;
    return out;
  }
};

template <std::size_t N, class Rhs>
MatVec<N> rk4_step(const MatVec<N>& y, double h, const Rhs& rhs) {
  const MatVec<N> k1 = rhs(y);
  const MatVec<N> k2 = rhs(y + k1 * (h / 2));
  const MatVec<N> k3 = rhs(y + k2 * (h / 2));
  const MatVec<N> k4 = rhs(y + k3 * h);
  return y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6);
}

long step_count(double span, double dt) {
  if (dt <= 0 || !std::isfinite(dt)) {
    throw std::invalid_argument("step size must be positive and finite");
  }
  if (span == 0) return 0;
  const long n = std::lround(std::abs(span) / dt);
  return std::max(n, 1L);
}

bool past_threshold(const Eigen::MatrixXcd& m, double threshold) {
  return !(m.norm() <= threshold);  // catches NaN as well
}

void check_state(const NahmState& s, const IntegratorOptions& opts) {
  if (past_threshold(s.T1, opts.blowup_threshold) ||
      past_threshold(s.T2, opts.blowup_threshold) ||
      past_threshold(s.T3, opts.blowup_threshold)) {
    throw PoleEncountered(s.t);
  }
}

}  // namespace

NahmRhs nahm_rhs(const NahmState& s) {
  NahmRhs rhs;
  rhs.dT1 = commutator(s.T2, s.T3);
  rhs.dT2 = commutator(s.T3, s.T1);
  rhs.dT3 = commutator(s.T1, s.T2);
  return rhs;
}

NahmState integrate(const NahmState& s0, double t_end, double dt,
                    const IntegratorOptions& opts, const StepObserver& observer) {
  check_state(s0, opts);
  if (observer) observer(s0);
  const double span = t_end - s0.t;
  const long n = step_count(span, dt);
  NahmState s = s0;
  if (n == 0) return s;
  const double h = span / static_cast<double>(n);

  const auto rhs = [](const MatVec<3>& y) {
    MatVec<3> d;
    d.m[0] = commutator(y.m[1], y.m[2]);
    d.m[1] = commutator(y.m[2], y.m[0]);
    d.m[2] = commutator(y.m[0], y.m[1]);
    return d;
  };

  MatVec<3> y{{s.T1, s.T2, s.T3}};
  for (long step = 1; step <= n; ++step) {
    y = rk4_step(y, h, rhs);
    s.t = s0.t + static_cast<double>(step) * h;
    s.T1 = y.m[0];
    s.T2 = y.m[1];
    s.T3 = y.m[2];
    check_state(s, opts);
    if (observer) observer(s);
  }
  s.t = t_end;
  return s;
}

LaxPair lax_pair(const NahmState& s) {
  LaxPair p;
  p.a0 = s.T1 + kI * s.T2;
  p.a1 = 2.0 * kI * s.T3;
  p.a2 = s.T1 - kI * s.T2;
  p.b0 = 0.5 * p.a1;
  p.b1 = p.a2;
  return p;
}

NahmState state_from_pencil(double t, const Eigen::MatrixXcd& a0, const Eigen::MatrixXcd& a1,
                            const Eigen::MatrixXcd& a2) {
  NahmState s;
  s.t = t;
  s.T1 = 0.5 * (a0 + a2);
  s.T2 = -0.5 * kI * (a0 - a2);
  s.T3 = -0.5 * kI * a1;
  return s;
}

NahmState lax_flow(const NahmState& s0, double t_end, double dt,
                   const IntegratorOptions& opts) {
  check_state(s0, opts);
  const double span = t_end - s0.t;
  const long n = step_count(span, dt);
  const LaxPair p0 = lax_pair(s0);
  MatVec<3> y{{p0.a0, p0.a1, p0.a2}};
  if (n == 0) return s0;
  const double h = span / static_cast<double>(n);

  // dA/dt = [B, A] coefficient by coefficient in the pencil parameter, with
  // B rebuilt from A at every evaluation.
  const auto rhs = [](const MatVec<3>& a) {
    const Eigen::MatrixXcd b0 = 0.5 * a.m[1];
    const Eigen::MatrixXcd& b1 = a.m[2];
    MatVec<3> d;
    d.m[0] = commutator(b0, a.m[0]);
    d.m[1] = commutator(b0, a.m[1]) + commutator(b1, a.m[0]);
    d.m[2] = commutator(b0, a.m[2]) + commutator(b1, a.m[1]);
    return d;
  };

  NahmState s = s0;
  for (long step = 1; step <= n; ++step) {
    y = rk4_step(y, h, rhs);
    s = state_from_pencil(s0.t + static_cast<double>(step) * h, y.m[0], y.m[1], y.m[2]);
    check_state(s, opts);
  }
  s.t = t_end;
  return s;
}

std::vector<std::complex<double>> char_poly_coeffs(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw ShapeMismatch("characteristic coefficients need a square matrix");
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n));
  Eigen::MatrixXcd work = m;
  for (Eigen::Index step = 1; step <= n; ++step) {
    const std::complex<double> cm = -work.trace() / static_cast<double>(step);
    c[static_cast<std::size_t>(step - 1)] = cm;
    if (step < n) {
      work.diagonal().array() += cm;
      work = m * work;
    }
  }
  return c;
}

std::vector<std::complex<double>> lax_sample_points(int samples) {
  if (samples < 1) throw std::invalid_argument("at least one sample point is required");
  std::vector<std::complex<double>> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  const double center = (samples - 1) / 2.0;
  for (int j = 0; j < samples; ++j) {
    pts.emplace_back(static_cast<double>(j) - center, 0.0);
  }
  return pts;
}

namespace {

Eigen::MatrixXcd pencil_at(const LaxPair& p, const std::complex<double>& z) {
  return p.a0 + z * p.a1 + (z * z) * p.a2;
}

}  // namespace

double isospectral_drift(const NahmState& s0, double t_end, double dt, int samples,
                         const IntegratorOptions& opts) {
  const NahmState s1 = integrate(s0, t_end, dt, opts);
  const LaxPair p0 = lax_pair(s0);
  const LaxPair p1 = lax_pair(s1);
  double drift = 0.0;
  for (const std::complex<double>& z : lax_sample_points(samples)) {
    const auto c0 = char_poly_coeffs(pencil_at(p0, z));
    const auto c1 = char_poly_coeffs(pencil_at(p1, z));
    for (std::size_t i = 0; i < c0.size(); ++i) {
      drift = std::max(drift, std::abs(c1[i] - c0[i]));
    }
  }
  return drift;
}

std::pair<double, double> lax_sign_residuals(const NahmState& s) {
  const NahmRhs rhs = nahm_rhs(s);
  const LaxPair p = lax_pair(s);
  const Eigen::MatrixXcd d0 = rhs.dT1 + kI * rhs.dT2;
  const Eigen::MatrixXcd d1 = 2.0 * kI * rhs.dT3;
  const Eigen::MatrixXcd d2 = rhs.dT1 - kI * rhs.dT2;
  const Eigen::MatrixXcd c0 = commutator(p.a0, p.b0);
  const Eigen::MatrixXcd c1 = commutator(p.a0, p.b1) + commutator(p.a1, p.b0);
  const Eigen::MatrixXcd c2 = commutator(p.a1, p.b1) + commutator(p.a2, p.b0);
  const double plus = (d0 - c0).norm() + (d1 - c1).norm() + (d2 - c2).norm();
  const double minus = (d0 + c0).norm() + (d1 + c1).norm() + (d2 + c2).norm();
  return {plus, minus};
}

LaxSignResult lax_consistency_oracle(int k, std::uint64_t seed) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const NahmState s = random_nahm_state(k, seed + static_cast<std::uint64_t>(attempt), 1.0);
    const NahmRhs rhs = nahm_rhs(s);
    const double motion = rhs.dT1.norm() + rhs.dT2.norm() + rhs.dT3.norm();
    if (motion < 1e-6) continue;  // nearly commuting draw, no signal
    const auto [plus, minus] = lax_sign_residuals(s);
    const double scale = std::max(1.0, plus + minus);
    const double lo = std::min(plus, minus);
    const double hi = std::max(plus, minus);
    if (lo <= 1e-12 * scale && hi >= 1e-3 * scale) {
      return {minus < plus ? -1 : 1, lo};
    }
  }
  throw NoConsistentSign("no sample separated the two pencil orientations");
}

NahmState random_nahm_state(int k, std::uint64_t seed, double scale) {
  if (k < 1) throw ShapeMismatch("matrix size must be positive");
  Lcg rng(seed);
  NahmState s;
  s.t = 0.0;
  const auto draw = [&rng, scale, k]() {
    Eigen::MatrixXcd m(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        const double re = scale * rng.next_symmetric();
        const double im = scale * rng.next_symmetric();
        m(i, j) = std::complex<double>(re, im);
      }
    }
    return m;
  };
  s.T1 = draw();
  s.T2 = draw();
  s.T3 = draw();
  return s;
}

NahmState pole_solution(double c, double t) {
  if (c == t) throw std::invalid_argument("the pole family is singular at t = c");
  const double r = 1.0 / (c - t);
  NahmState s;
  s.t = t;
  s.T1 = Eigen::MatrixXcd(2, 2);
  s.T1 << 0.0, -0.5 * kI * r, -0.5 * kI * r, 0.0;
  s.T2 = Eigen::MatrixXcd(2, 2);
  s.T2 << 0.0, -0.5 * r, 0.5 * r, 0.0;
  s.T3 = Eigen::MatrixXcd(2, 2);
  s.T3 << -0.5 * kI * r, 0.0, 0.0, 0.5 * kI * r;
  return s;
}

}  // namespace cohiggs
