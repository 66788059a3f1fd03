#include "sjp/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace sjp {

void QMatrix::append_row(const std::vector<Rat>& row) {
  if (cols_ == 0 && rows_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("append_row: width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
    // Partial pivoting by smallest numerator/denominator bit size keeps the
    // intermediate fractions small.
    std::size_t best = rows_;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = lead; r < rows_; ++r) {
      const Rat& v = at(r, col);
      if (v == 0) continue;
      std::size_t sz = rat_complexity(v);
      if (sz < best_size) {
        best_size = sz;
        best = r;
      }
    }
    if (best == rows_) continue;
    if (best != lead)
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(at(lead, c), at(best, c));
    Rat inv = 1 / at(lead, col);
    for (std::size_t c = col; c < cols_; ++c) at(lead, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      Rat f = at(r, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix copy = *this;
  return copy.rref().size();
}

std::optional<std::vector<Rat>> solve_linear(const QMatrix& a,
                                             const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: size");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug.at(i, a.cols());
  return x;
}

std::vector<std::vector<Rat>> kernel_basis(const QMatrix& a) {
  QMatrix copy = a;
  auto pivots = copy.rref();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(a.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -copy.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t sparse_rank(std::vector<std::map<std::size_t, Rat>> rows,
                        std::size_t cols) {
  // Markowitz-style exact elimination: repeatedly pick the nonzero entry
  // minimising (row fill - 1) * (column fill - 1), eliminate its column.
  std::vector<std::size_t> col_count(cols, 0);
  std::vector<bool> row_done(rows.size(), false);
  for (const auto& row : rows)
    for (const auto& [c, v] : row) ++col_count[c];

  std::size_t rank = 0;
  for (;;) {
    std::size_t best_row = rows.size();
    std::size_t best_col = 0;
    unsigned long long best_score = ~0ULL;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (row_done[r] || rows[r].empty()) continue;
      for (const auto& [c, v] : rows[r]) {
        unsigned long long score =
            static_cast<unsigned long long>(rows[r].size() - 1) *
            static_cast<unsigned long long>(col_count[c] - 1);
        if (score < best_score) {
          best_score = score;
          best_row = r;
          best_col = c;
          if (score == 0) break;
        }
      }
      if (best_score == 0) break;
    }
    if (best_row == rows.size()) break;

    ++rank;
    row_done[best_row] = true;
    auto pivot_row = rows[best_row];
    for (const auto& [c, v] : pivot_row) --col_count[c];
    rows[best_row].clear();
    Rat pivot_val = pivot_row.at(best_col);

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (row_done[r]) continue;
      auto it = rows[r].find(best_col);
      if (it == rows[r].end()) continue;
      Rat f = it->second / pivot_val;
      for (const auto& [c, v] : pivot_row) {
        auto jt = rows[r].find(c);
        if (jt == rows[r].end()) {
          Rat nv = -f * v;
          if (nv != 0) {
            rows[r].emplace(c, std::move(nv));
            ++col_count[c];
          }
        } else {
          jt->second -= f * v;
          if (jt->second == 0) {
            rows[r].erase(jt);
            --col_count[c];
          }
        }
      }
    }
  }
  return rank;
}

}  // namespace sjp
