#include "sjp/cells.hpp"

#include <algorithm>
#include <stdexcept>

#include "sjp/algebra.hpp"

namespace sjp {

BimoduleCell::BimoduleCell(int level, int weight)
    : level_(level), weight_(weight) {
  for (const GeneratorTag& g : level_generators(level)) {
    const int rest = weight - g.degree();
    for (int dl = 0; dl <= rest; ++dl) {
      for (const PBWMonomial& l : graded_basis(dl)) {
        for (const PBWMonomial& r : graded_basis(rest - dl)) {
          basis_.push_back({l, g, r});
        }
      }
    }
  }
  std::sort(basis_.begin(), basis_.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

std::vector<Rat> BimoduleCell::coordinates(const BimoduleElement& e) const {
  std::vector<Rat> out(basis_.size(), Rat(0));
  for (const auto& [key, c] : e.terms()) {
    auto it = index_.find(key);
    if (it == index_.end())
      throw std::invalid_argument("BimoduleCell: term outside the cell");
    out[it->second] = c;
  }
  return out;
}

BimoduleElement BimoduleCell::element(const std::vector<Rat>& coords) const {
  if (coords.size() != basis_.size())
    throw std::invalid_argument("BimoduleCell: coordinate length mismatch");
  BimoduleElement out(level_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0)
      out.add(basis_[i].left, basis_[i].gen, basis_[i].right, coords[i]);
  }
  return out;
}

QMatrix cell_differential_matrix(int level, int weight) {
  const BimoduleCell src(level, weight);
  const BimoduleCell dst(level - 1, weight);
  QMatrix m(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    BimoduleElement e(level);
    const auto& k = src.basis()[j];
    e.add(k.left, k.gen, k.right, Rat(1));
    const std::vector<Rat> col = dst.coordinates(differential(level, e));
    for (std::size_t i = 0; i < dst.dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

}  // namespace sjp
