#pragma once
// Homogeneous weight slices of the free bimodules P_n, and the matrix of
// d_n restricted to a slice.  Shared by the derivation-lifting solver and
// the comparison-map extension solver.

#include <cstddef>
#include <map>
#include <vector>

#include "sjp/linalg.hpp"
#include "sjp/resolution.hpp"

namespace sjp {

// Basis of the weight-w slice of P_n: all keys l (x) g (x) r with
// deg l + deg g + deg r = w, in Key order.
class BimoduleCell {
 public:
  BimoduleCell(int level, int weight);

  int level() const { return level_; }
  int weight() const { return weight_; }
  const std::vector<BimoduleElement::Key>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  std::vector<Rat> coordinates(const BimoduleElement& e) const;
  BimoduleElement element(const std::vector<Rat>& coords) const;

 private:
  int level_ = 0;
  int weight_ = 0;
  std::vector<BimoduleElement::Key> basis_;
  std::map<BimoduleElement::Key, std::size_t> index_;
};

// Matrix of d_level : cell(level, w) -> cell(level - 1, w); columns follow
// the source basis, rows the target basis.
QMatrix cell_differential_matrix(int level, int weight);

}  // namespace sjp
