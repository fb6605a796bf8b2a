#ifndef SP4FORMS_LINALG_HPP
#define SP4FORMS_LINALG_HPP

#include <cstddef>
#include <vector>

#include "gaussian_rational.hpp"

namespace sp4forms {

/// Dense matrix over Q(i). Only used for small exact solves (structure
/// constants, per-weight-space kernels).
class GMatrix {
 public:
  GMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && at(sel, col).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
      GaussianRational inv = GaussianRational(1) / at(row, col);
      for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || at(r, col).is_zero()) continue;
        GaussianRational f = at(r, col);
        for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    GMatrix copy = *this;
    return copy.rref().size();
  }

  /// Basis of the right kernel, one vector per column of the result list.
  std::vector<std::vector<GaussianRational>> kernel() const {
    GMatrix m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<GaussianRational> v(cols_);
      v[free_col] = GaussianRational(1);
      for (std::size_t i = 0; i < pivots.size(); ++i)
        v[pivots[i]] = -m.at(i, free_col);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Solves A x = b. Throws if inconsistent; ignores kernel freedom (any
  /// solution returned). For the structure-constant solve the system is
  /// full-rank so the solution is unique.
  std::vector<GaussianRational> solve(const std::vector<GaussianRational>& b) const {
    GMatrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_) = b[r];
    }
    std::vector<std::size_t> pivots = aug.rref();
    std::vector<GaussianRational> x(cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] == cols_) throw std::logic_error("inconsistent linear system");
      x[pivots[i]] = aug.at(i, cols_);
    }
    return x;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<GaussianRational> a_;
};

}  // namespace sp4forms

#endif
