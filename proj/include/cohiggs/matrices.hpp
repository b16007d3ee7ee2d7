#pragma once

#include "cohiggs/errors.hpp"
#include "cohiggs/multipoly.hpp"
#include "cohiggs/polynomial.hpp"
#include "cohiggs/rational.hpp"

#include <Eigen/Core>

#include <vector>

namespace Eigen {

// Exact scalars: epsilon/dummy_precision are zero so any Eigen comparison
// degenerates to exact equality.
#define COHIGGS_EXACT_NUM_TRAITS(T)                      \
  template <>                                            \
  struct NumTraits<cohiggs::T> {                         \
    using Real = cohiggs::T;                             \
    using NonInteger = cohiggs::T;                       \
    using Nested = cohiggs::T;                           \
    using Literal = cohiggs::T;                          \
    enum {                                               \
      IsComplex = 0,                                     \
      IsInteger = 0,                                     \
      IsSigned = 1,                                      \
      RequireInitialization = 1,                         \
      ReadCost = 10,                                     \
      AddCost = 40,                                      \
      MulCost = 80                                       \
    };                                                   \
    static inline cohiggs::T epsilon() { return cohiggs::T(0); }        \
    static inline cohiggs::T dummy_precision() { return cohiggs::T(0); } \
    static inline int digits10() { return 0; }           \
  }

COHIGGS_EXACT_NUM_TRAITS(GaussQ);
COHIGGS_EXACT_NUM_TRAITS(UniPoly);
COHIGGS_EXACT_NUM_TRAITS(MultiPoly);

#undef COHIGGS_EXACT_NUM_TRAITS

}  // namespace Eigen

namespace cohiggs {

using GqMatrix = Eigen::Matrix<GaussQ, Eigen::Dynamic, Eigen::Dynamic>;
using GqVector = Eigen::Matrix<GaussQ, Eigen::Dynamic, 1>;
using PolyMatrix = Eigen::Matrix<UniPoly, Eigen::Dynamic, Eigen::Dynamic>;
using MpMatrix = Eigen::Matrix<MultiPoly, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_zero_value(const GaussQ& x) { return x.is_zero(); }
inline bool is_zero_value(const UniPoly& x) { return x.is_zero(); }
inline bool is_zero_value(const MultiPoly& x) { return x.is_zero(); }

inline GaussQ exact_div(const GaussQ& a, const GaussQ& b) { return a / b; }
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return div_exact(a, b); }

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero_value(m(i, j))) return false;
  return true;
}

// Determinant over any integral domain with exact division, by fraction-free
// (Bareiss) elimination. Works for GaussQ and UniPoly entries.
template <class Scalar>
Scalar ring_det(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw ShapeMismatch("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index p = 0; p + 1 < n; ++p) {
    if (is_zero_value(a(p, p))) {
      Eigen::Index r = p + 1;
      while (r < n && is_zero_value(a(r, p))) ++r;
      if (r == n) return Scalar(0);
      a.row(p).swap(a.row(r));
      negate = !negate;
    }
    for (Eigen::Index i = p + 1; i < n; ++i)
      for (Eigen::Index j = p + 1; j < n; ++j)
        a(i, j) = exact_div(a(p, p) * a(i, j) - a(i, p) * a(p, j), prev);
    prev = a(p, p);
  }
  return negate ? Scalar(-1) * a(n - 1, n - 1) : a(n - 1, n - 1);
}

// Reduced row echelon form in place; returns the pivot column indices.
// Pivot choice is the first nonzero entry in column order, so the result is
// deterministic.
std::vector<Eigen::Index> rref_in_place(GqMatrix& m);

Eigen::Index rank_exact(const GqMatrix& m);

// Basis of the right kernel {v : M v = 0}. Size = cols - rank; each basis
// vector has a 1 in "its" free column and zeros in the other free columns.
std::vector<GqVector> kernel_basis(const GqMatrix& m);

}  // namespace cohiggs
