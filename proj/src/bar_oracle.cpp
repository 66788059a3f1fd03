#include "sjp/bar_oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "sjp/algebra.hpp"
#include "sjp/bar.hpp"
#include "sjp/linalg.hpp"

namespace sjp {

namespace {

// All tuples of `len` positive-degree PBW monomials of total degree `deg`,
// in a fixed deterministic order.
const std::vector<BarTuple>& tuples_of(int len, int deg) {
  static std::map<std::pair<int, int>, std::vector<BarTuple>> cache;
  auto key = std::make_pair(len, deg);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<BarTuple> out;
  if (len == 0) {
    if (deg == 0) out.push_back({});
  } else if (deg >= len) {
    for (int d = 1; d <= deg - (len - 1); ++d)
      for (const auto& m : graded_basis(d))
        for (const auto& rest : tuples_of(len - 1, deg - d)) {
          BarTuple t;
          t.reserve(rest.size() + 1);
          t.push_back(m);
          t.insert(t.end(), rest.begin(), rest.end());
          out.push_back(std::move(t));
        }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::size_t rank_or_zero(std::vector<std::map<std::size_t, Rat>> rows,
                         std::size_t cols) {
  if (rows.empty() || cols == 0) return 0;
  return sparse_rank(std::move(rows), cols);
}

// ---- coefficients in k ------------------------------------------------------

// Index of a tuple within tuples_of(len, deg); tuples are enumerated in a
// deterministic order, so binary search over an ordered copy would also do;
// a map keeps it simple.
class TupleIndex {
 public:
  TupleIndex(int len, int deg) {
    const auto& ts = tuples_of(len, deg);
    for (std::size_t i = 0; i < ts.size(); ++i) index_[ts[i]] = i;
  }
  std::optional<std::size_t> find(const BarTuple& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::map<BarTuple, std::size_t> index_;
};

// Matrix of the k-coefficient differential C^len -> C^{len+1} in weight w
// (tuple degree -w); only the interior merge faces survive epsilon.
std::vector<std::map<std::size_t, Rat>> k_differential_rows(int len, int w) {
  const int deg = -w;
  TupleIndex src(len, deg);
  const auto& tgt = tuples_of(len + 1, deg);
  std::vector<std::map<std::size_t, Rat>> rows(tgt.size());
  for (std::size_t r = 0; r < tgt.size(); ++r) {
    const BarTuple& tau = tgt[r];
    for (int i = 0; i + 1 < static_cast<int>(tau.size()); ++i) {
      AlgebraElement prod =
          multiply(AlgebraElement(tau[i]), AlgebraElement(tau[i + 1]));
      Rat sign = (i % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^{i+1}, 1-based
      for (const auto& [m, c] : prod.terms()) {
        BarTuple merged;
        merged.reserve(tau.size() - 1);
        merged.insert(merged.end(), tau.begin(), tau.begin() + i);
        merged.push_back(m);
        merged.insert(merged.end(), tau.begin() + i + 2, tau.end());
        if (auto col = src.find(merged)) {
          rows[r][*col] += sign * c;
          if (rows[r][*col] == 0) rows[r].erase(*col);
        }
      }
    }
  }
  return rows;
}

// ---- homology with coefficients in A ---------------------------------------

// Cell basis of C_len = A (x) (A^+)^{(x) len} in weight w: pairs
// (coefficient monomial, tuple) with deg a0 + deg tuple = w.
struct HomologyCell {
  // flattened index blocks: for each tuple degree t, tuples_of(len, t) x
  // graded_basis(w - t)
  std::vector<std::pair<PBWMonomial, BarTuple>> basis;
  std::map<std::pair<BarTuple, PBWMonomial>, std::size_t> index;

  HomologyCell(int len, int w) {
    for (int t = len; t <= w; ++t)
      for (const auto& tup : tuples_of(len, t))
        for (const auto& a0 : graded_basis(w - t)) {
          index[{tup, a0}] = basis.size();
          basis.emplace_back(a0, tup);
        }
  }
};

// Rows of b : C_len -> C_{len-1} in weight w (rows = target cell).
std::vector<std::map<std::size_t, Rat>> homology_b_rows(int len, int w) {
  HomologyCell src(len, w);
  HomologyCell tgt(len - 1, w);
  std::vector<std::map<std::size_t, Rat>> rows(tgt.basis.size());
  auto emit = [&](std::size_t col, const BarTuple& tup,
                  const AlgebraElement& a0, const Rat& sign) {
    for (const auto& [m, c] : a0.terms()) {
      auto it = tgt.index.find({tup, m});
      if (it == tgt.index.end())
        throw std::logic_error("homology_b_rows: target cell misses a term");
      auto& row = rows[it->second];
      row[col] += sign * c;
      if (row[col] == 0) row.erase(col);
    }
  };
  for (std::size_t col = 0; col < src.basis.size(); ++col) {
    const auto& [a0, tau] = src.basis[col];
    AlgebraElement a0e{a0};
    // left face: (a0 * tau_1) (x) tail
    BarTuple tail(tau.begin() + 1, tau.end());
    emit(col, tail, multiply(a0e, AlgebraElement(tau.front())), 1);
    // interior merges
    for (int i = 0; i + 1 < static_cast<int>(tau.size()); ++i) {
      AlgebraElement prod =
          multiply(AlgebraElement(tau[i]), AlgebraElement(tau[i + 1]));
      Rat sign = (i % 2 == 0) ? Rat(-1) : Rat(1);
      for (const auto& [m, c] : prod.terms()) {
        BarTuple merged;
        merged.insert(merged.end(), tau.begin(), tau.begin() + i);
        merged.push_back(m);
        merged.insert(merged.end(), tau.begin() + i + 2, tau.end());
        emit(col, merged, AlgebraElement(a0, c), sign);
      }
    }
    // right face: (tau_n * a0) (x) head, sign (-1)^n
    BarTuple head(tau.begin(), tau.end() - 1);
    Rat rsign = (tau.size() % 2 == 0) ? Rat(1) : Rat(-1);
    emit(col, head, multiply(AlgebraElement(tau.back()), a0e), rsign);
  }
  return rows;
}

// ---- cohomology with coefficients in A --------------------------------------

// n = 0: the center cell, ker([x,-], [y,-]) on A_w.
int center_cell_dim(int w) {
  auto basis = graded_basis(w);
  if (basis.empty()) return 0;
  auto xrow = graded_basis(w + 1);
  QMatrix m(2 * xrow.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    AlgebraElement a{basis[j]};
    AlgebraElement cx = commutator(elem(1, 0, 0), a);
    AlgebraElement cy = commutator(elem(0, 0, 1), a);
    for (std::size_t i = 0; i < xrow.size(); ++i) {
      m.at(i, j) = cx.coeff(xrow[i]);
      m.at(xrow.size() + i, j) = cy.coeff(xrow[i]);
    }
  }
  return static_cast<int>(basis.size() - m.rank());
}

// n = 1: derivations determined by (D(x), D(y)) in A_{w+1}^2, constrained by
// Leibniz on the defining relations, modulo inner derivations from A_w.
int derivation_cell_dim(int w) {
  auto vals = graded_basis(w + 1);
  if (vals.empty()) return 0;
  const AlgebraElement ax = elem(1, 0, 0), ay = elem(0, 0, 1);
  auto relation_images = [&](const AlgebraElement& vx,
                             const AlgebraElement& vy) {
    // D(x^2) and D(y^2x - xy^2 - xyx) by the Leibniz rule on letters.
    AlgebraElement r1 = multiply(vx, ax) + multiply(ax, vx);
    AlgebraElement d_y2x = multiply(vy, multiply(ay, ax)) +
                           multiply(ay, multiply(vy, ax)) +
                           multiply(ay, multiply(ay, vx));
    AlgebraElement d_xy2 = multiply(vx, multiply(ay, ay)) +
                           multiply(ax, multiply(vy, ay)) +
                           multiply(ax, multiply(ay, vy));
    AlgebraElement d_xyx = multiply(vx, multiply(ay, ax)) +
                           multiply(ax, multiply(vy, ax)) +
                           multiply(ax, multiply(ay, vx));
    return std::make_pair(r1, d_y2x - d_xy2 - d_xyx);
  };
  auto rows2 = graded_basis(w + 2);
  auto rows3 = graded_basis(w + 3);
  QMatrix m(rows2.size() + rows3.size(), 2 * vals.size());
  for (std::size_t j = 0; j < 2 * vals.size(); ++j) {
    AlgebraElement vx = j < vals.size() ? AlgebraElement(vals[j])
                                        : AlgebraElement();
    AlgebraElement vy = j < vals.size() ? AlgebraElement()
                                        : AlgebraElement(vals[j - vals.size()]);
    auto [r1, r2] = relation_images(vx, vy);
    for (std::size_t i = 0; i < rows2.size(); ++i) m.at(i, j) = r1.coeff(rows2[i]);
    for (std::size_t i = 0; i < rows3.size(); ++i)
      m.at(rows2.size() + i, j) = r2.coeff(rows3[i]);
  }
  int der_dim = static_cast<int>(2 * vals.size() - m.rank());

  // inner derivations a |-> ([x,a], [y,a]) from A_w
  auto inner_src = graded_basis(w);
  QMatrix inner(2 * vals.size(), inner_src.size());
  for (std::size_t j = 0; j < inner_src.size(); ++j) {
    AlgebraElement a{inner_src[j]};
    AlgebraElement cx = commutator(ax, a), cy = commutator(ay, a);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      inner.at(i, j) = cx.coeff(vals[i]);
      inner.at(vals.size() + i, j) = cy.coeff(vals[i]);
    }
  }
  return der_dim - static_cast<int>(inner.rank());
}

// Truncated Hom((A^+)^{(x) len}, A) layer in weight w, tuple degrees < cutoff.
struct CochainCell {
  // pairs (tuple, value monomial in A_{deg tuple + w})
  std::vector<std::pair<BarTuple, PBWMonomial>> basis;
  std::map<std::pair<BarTuple, PBWMonomial>, std::size_t> index;

  CochainCell(int len, int w, int cutoff) {
    for (int t = std::max(len, -w); t < cutoff; ++t)
      for (const auto& tup : tuples_of(len, t))
        for (const auto& v : graded_basis(t + w)) {
          index[{tup, v}] = basis.size();
          basis.emplace_back(tup, v);
        }
  }
};

// Rows of d : C^{len} -> C^{len+1} (both truncated at `cutoff`) in weight w.
std::vector<std::map<std::size_t, Rat>> cochain_d_rows(int len, int w,
                                                       int cutoff) {
  CochainCell src(len, w, cutoff);
  CochainCell tgt(len + 1, w, cutoff);
  std::vector<std::map<std::size_t, Rat>> rows(tgt.basis.size());
  std::size_t r0 = 0;
  for (int t = std::max(len + 1, -w); t < cutoff; ++t) {
    for (const auto& tau : tuples_of(len + 1, t)) {
      auto values = graded_basis(t + w);
      if (values.empty()) continue;
      auto row_of = [&](const PBWMonomial& mu) {
        // rows for tau occupy r0 .. r0+values.size()-1 in basis order
        return r0 + static_cast<std::size_t>(
                        std::lower_bound(values.begin(), values.end(), mu) -
                        values.begin());
      };
      auto add = [&](const PBWMonomial& mu, std::size_t col, const Rat& v) {
        auto& row = rows[row_of(mu)];
        row[col] += v;
        if (row[col] == 0) row.erase(col);
      };
      // left outer face: tau_1 * phi(tau_2..)
      {
        BarTuple sigma(tau.begin() + 1, tau.end());
        int sdeg = t - tau.front().degree();
        if (sdeg + w >= 0)
          for (const auto& nu : graded_basis(sdeg + w)) {
            auto col = src.index.find({sigma, nu});
            if (col == src.index.end())
              throw std::logic_error("cochain_d_rows: missing source");
            AlgebraElement prod =
                multiply(AlgebraElement(tau.front()), AlgebraElement(nu));
            for (const auto& [mu, c] : prod.terms()) add(mu, col->second, c);
          }
      }
      // interior merges, sign (-1)^{i} for 1-based face i
      for (int i = 0; i + 1 < static_cast<int>(tau.size()); ++i) {
        AlgebraElement prod =
            multiply(AlgebraElement(tau[i]), AlgebraElement(tau[i + 1]));
        Rat sign = (i % 2 == 0) ? Rat(-1) : Rat(1);
        for (const auto& [m, c] : prod.terms()) {
          BarTuple merged;
          merged.insert(merged.end(), tau.begin(), tau.begin() + i);
          merged.push_back(m);
          merged.insert(merged.end(), tau.begin() + i + 2, tau.end());
          for (const auto& mu : values) {
            auto col = src.index.find({merged, mu});
            if (col == src.index.end())
              throw std::logic_error("cochain_d_rows: missing merge source");
            add(mu, col->second, sign * c);
          }
        }
      }
      // right outer face: phi(tau_1..tau_len) * tau_{len+1}, sign (-1)^{len+1}
      {
        BarTuple sigma(tau.begin(), tau.end() - 1);
        int sdeg = t - tau.back().degree();
        Rat sign = (len % 2 == 0) ? Rat(-1) : Rat(1);
        if (sdeg + w >= 0)
          for (const auto& nu : graded_basis(sdeg + w)) {
            auto col = src.index.find({sigma, nu});
            if (col == src.index.end())
              throw std::logic_error("cochain_d_rows: missing source");
            AlgebraElement prod =
                multiply(AlgebraElement(nu), AlgebraElement(tau.back()));
            for (const auto& [mu, c] : prod.terms())
              add(mu, col->second, sign * c);
          }
      }
      r0 += values.size();
    }
  }
  return rows;
}

int truncated_cohomology_dim(int n, int w, int cutoff) {
  CochainCell here(n, w, cutoff);
  std::size_t rank_out = rank_or_zero(cochain_d_rows(n, w, cutoff),
                                      here.basis.size());
  std::size_t rank_in = 0;
  if (n >= 1) {
    CochainCell below(n - 1, w, cutoff);
    rank_in = rank_or_zero(cochain_d_rows(n - 1, w, cutoff),
                           below.basis.size());
  }
  return static_cast<int>(here.basis.size() - rank_out - rank_in);
}

std::size_t cochain_cell_size(int len, int w, int cutoff) {
  std::size_t n = 0;
  for (int t = std::max(len, -w); t < cutoff; ++t)
    n += tuples_of(len, t).size() * graded_basis(t + w).size();
  return n;
}

int truncation_cutoff(int n, int w) { return n + 4 + std::max(0, -w); }

}  // namespace

int bar_dim_cohomology_k(int n, int w) {
  if (n < 0) throw std::invalid_argument("bar_dim_cohomology_k: n >= 0");
  if (n == 0) return w == 0 ? 1 : 0;
  const int deg = -w;
  std::size_t dim = tuples_of(n, deg).size();
  if (dim == 0) return 0;
  std::size_t rank_out = rank_or_zero(k_differential_rows(n, w), dim);
  std::size_t rank_in =
      rank_or_zero(k_differential_rows(n - 1, w), tuples_of(n - 1, deg).size());
  return static_cast<int>(dim - rank_out - rank_in);
}

int bar_dim_homology_A(int n, int w) {
  if (n < 0) throw std::invalid_argument("bar_dim_homology_A: n >= 0");
  HomologyCell cell(n, w);
  if (cell.basis.empty()) return 0;
  std::size_t rank_in =
      rank_or_zero(homology_b_rows(n + 1, w), HomologyCell(n + 1, w).basis.size());
  std::size_t rank_out =
      n == 0 ? 0 : rank_or_zero(homology_b_rows(n, w), cell.basis.size());
  return static_cast<int>(cell.basis.size() - rank_out - rank_in);
}

std::size_t bar_cohomology_budget() { return 40000; }

std::size_t bar_cohomology_cost(int n, int w) {
  if (n < 2) return 0;
  int cutoff = truncation_cutoff(n, w) + 1;  // stabilization pass
  std::size_t worst = 0;
  for (int len = n - 1; len <= n + 1; ++len)
    worst = std::max(worst, cochain_cell_size(len, w, cutoff));
  return worst;
}

int bar_dim_cohomology_A(int n, int w) {
  if (n < 0) throw std::invalid_argument("bar_dim_cohomology_A: n >= 0");
  if (n == 0) return center_cell_dim(w);
  if (n == 1) return derivation_cell_dim(w);
  if (bar_cohomology_cost(n, w) > bar_cohomology_budget())
    throw ResourceGuard("bar oracle window too large at n=" +
                        std::to_string(n) + ", w=" + std::to_string(w));
  int cutoff = truncation_cutoff(n, w);
  int d0 = truncated_cohomology_dim(n, w, cutoff);
  int d1 = truncated_cohomology_dim(n, w, cutoff + 1);
  if (d0 != d1)
    throw OracleUnstable("bar oracle not stable under cutoff raise at n=" +
                         std::to_string(n) + ", w=" + std::to_string(w));
  return d0;
}

}  // namespace sjp
