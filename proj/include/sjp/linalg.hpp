#pragma once
// Exact rational linear algebra: dense Gaussian elimination for the small
// resolution cells, and a sparse Markowitz-pivoted rank for bar-complex
// oracles.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sjp/rational.hpp"

namespace sjp {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void append_row(const std::vector<Rat>& row);

  // Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// Solve A x = b; returns a particular solution (free variables = 0) or
// nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_linear(const QMatrix& a,
                                             const std::vector<Rat>& b);

// Basis of the kernel of A (as column vectors).
std::vector<std::vector<Rat>> kernel_basis(const QMatrix& a);

// Rank of a sparse matrix given as rows of (column -> value).
std::size_t sparse_rank(std::vector<std::map<std::size_t, Rat>> rows,
                        std::size_t cols);

}  // namespace sjp
