#include "cohiggs/matrices.hpp"

namespace cohiggs {

std::vector<Eigen::Index> rref_in_place(GqMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    GaussQ inv = GaussQ(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      GaussQ f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Eigen::Index rank_exact(const GqMatrix& m) {
  GqMatrix work = m;
  return static_cast<Eigen::Index>(rref_in_place(work).size());
}

std::vector<GqVector> kernel_basis(const GqMatrix& m) {
  GqMatrix work = m;
  std::vector<Eigen::Index> pivots = rref_in_place(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Eigen::Index p : pivots) is_pivot[p] = true;

  std::vector<GqVector> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    GqVector v = GqVector::Zero(m.cols());
    v(free) = GaussQ(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cohiggs
