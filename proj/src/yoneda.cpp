#include "sjp/yoneda.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "sjp/algebra.hpp"
#include "sjp/cells.hpp"

namespace sjp {
namespace {

AlgebraElement as_element(const PBWMonomial& m, const Rat& c = 1) {
  return elem(m.a, m.b, m.c, c);
}

bool x_type(const GeneratorTag& g) {
  return g.kind == GenKind::UNIT || g.kind == GenKind::X ||
         g.kind == GenKind::XPOW;
}

BimoduleElement g_of_bar(const BarElement& e);

// Chain-map square for a tuple outside the published patterns: solve
// d(G) = g(b(1 (x) mids (x) 1)) in the tuple's weight cell.  Solutions
// differ by boundaries with positive-degree outers only, so the unit-outer
// part is canonical.
BimoduleElement solve_extension(const BarTuple& mids) {
  const int n = static_cast<int>(mids.size());
  BarElement one(n);
  one.add(kOne, mids, kOne, 1);
  const BimoduleElement rhs = g_of_bar(bar_differential(one));
  int w = 0;
  for (const auto& m : mids) w += m.degree();
  const BimoduleCell src(n - 1, w);
  const BimoduleCell dst(n - 2, w);
  const auto sol = solve_linear(cell_differential_matrix(n - 1, w),
                                dst.coordinates(rhs));
  if (!sol) throw std::logic_error("comparison_g_extended: no solution");
  return src.element(*sol);
}

const BimoduleElement& extended_tuple(const BarTuple& mids) {
  static std::map<BarTuple, BimoduleElement> cache;
  auto it = cache.find(mids);
  if (it != cache.end()) return it->second;
  BimoduleElement v;
  try {
    v = comparison_g_tuple(mids);
  } catch (const PatternUnsupported&) {
    v = solve_extension(mids);
  }
  return cache.emplace(mids, std::move(v)).first->second;
}

BimoduleElement g_of_bar(const BarElement& e) {
  BimoduleElement out(e.bar_deg() - 1);
  for (const auto& [key, c] : e.terms()) {
    BimoduleElement t = extended_tuple(key.mids)
                            .left_mul(as_element(key.left))
                            .right_mul(as_element(key.right));
    t *= c;
    out += t;
  }
  return out;
}

// Multilinear expansion of the entrywise t^{-1} twist, paired against phi.
Rat twisted_pair(const KCochain& phi, const BarTuple& mids) {
  std::vector<std::vector<std::pair<PBWMonomial, Rat>>> options;
  options.reserve(mids.size());
  for (const auto& m : mids) {
    std::vector<std::pair<PBWMonomial, Rat>> opt;
    AlgebraElement acted = act_t_inv(as_element(m));
    for (const auto& [mm, c] : acted.terms())
      opt.emplace_back(mm, c);
    options.push_back(std::move(opt));
  }
  Rat total = 0;
  std::vector<std::size_t> idx(options.size(), 0);
  while (true) {
    Rat coeff = 1;
    BarTuple t;
    t.reserve(options.size());
    for (std::size_t i = 0; i < options.size(); ++i) {
      coeff *= options[i][idx[i]].second;
      t.push_back(options[i][idx[i]].first);
    }
    total += coeff * k_pair_tuple(phi, t);
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < options[i].size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return total;
}

QMatrix one_minus(const QMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = (i == j ? Rat(1) : Rat(0)) - m.at(i, j);
  return out;
}

std::vector<Rat> mat_vec(const QMatrix& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

std::vector<Rat> rep_vector(const KCochain& c) {
  if (c.hdeg == 0) return {c.vx};
  return {c.vx, c.vy};
}

struct PageCell {
  int dim = 0;
  std::vector<int> rows;  // coordinate rows of the named class basis
  bool pure = true;
};

PageCell page_cell(int p, int q) {
  const QMatrix om = one_minus(yoneda_action_matrix(q));
  PageCell out;
  if (p == 0) {
    const auto kern = kernel_basis(om);
    out.dim = static_cast<int>(kern.size());
    for (const auto& v : kern) {
      int nz = -1;
      bool pure = true;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (nz >= 0) pure = false;
        nz = static_cast<int>(i);
      }
      if (pure && nz >= 0)
        out.rows.push_back(nz);
      else
        out.pure = false;
    }
  } else {
    out.dim = static_cast<int>(om.cols() - om.rank());
    for (std::size_t i = 0;
         i < om.rows() && out.rows.size() < static_cast<std::size_t>(out.dim);
         ++i) {
      std::vector<Rat> ei(om.rows(), Rat(0));
      ei[i] = 1;
      if (!solve_linear(om, ei)) out.rows.push_back(static_cast<int>(i));
    }
    if (out.rows.size() != static_cast<std::size_t>(out.dim)) out.pure = false;
  }
  return out;
}

std::string class_name(int p, int q, int row) {
  std::string head = q == 0 ? "e" : (row == 0 ? "eta" : "omega");
  if (p == 1) head += "bar";
  if (q != 0) head += "^" + std::to_string(q);
  return head;
}

bool invariant(int q, const KCochain& rep) {
  const QMatrix om = one_minus(yoneda_action_matrix(q));
  for (const Rat& v : mat_vec(om, rep_vector(rep)))
    if (v != 0) return false;
  return true;
}

// Coordinates of the coinvariant class of rep on the page representatives.
std::vector<Rat> coker_class(int q, const KCochain& rep) {
  const QMatrix om = one_minus(yoneda_action_matrix(q));
  const PageCell cell = page_cell(1, q);
  QMatrix sys(om.rows(), om.cols() + cell.rows.size());
  for (std::size_t i = 0; i < om.rows(); ++i)
    for (std::size_t j = 0; j < om.cols(); ++j) sys.at(i, j) = om.at(i, j);
  for (std::size_t j = 0; j < cell.rows.size(); ++j)
    sys.at(static_cast<std::size_t>(cell.rows[j]), om.cols() + j) = 1;
  const auto sol = solve_linear(sys, rep_vector(rep));
  if (!sol) throw std::logic_error("coker_class: representatives do not span");
  return {sol->begin() + static_cast<std::ptrdiff_t>(om.cols()), sol->end()};
}

bool zero_vector(const std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::string KCochain::str() const {
  return "(" + rat_str(vx) + ", " + rat_str(vy) + ")@" + std::to_string(hdeg);
}

KCochain k_eta(int q) {
  if (q < 0) throw std::invalid_argument("k_eta: degree >= 0");
  return {q, 1, 0};
}

KCochain k_omega(int q) {
  if (q < 1) throw std::invalid_argument("k_omega: degree >= 1");
  return {q, 0, 1};
}

BimoduleElement comparison_g_extended(const BarTuple& mids) {
  return extended_tuple(mids);
}

Rat k_pair_tuple(const KCochain& phi, const BarTuple& mids) {
  if (static_cast<int>(mids.size()) != phi.hdeg)
    throw std::invalid_argument("k_pair_tuple: length != degree");
  Rat v = 0;
  for (const auto& [key, c] : extended_tuple(mids).terms()) {
    if (key.left != kOne || key.right != kOne) continue;
    v += c * (x_type(key.gen) ? phi.vx : phi.vy);
  }
  return v;
}

KCochain cup_k(const KCochain& phi, const KCochain& psi) {
  const int m = phi.hdeg, n = psi.hdeg;
  KCochain out;
  out.hdeg = m + n;
  for (const GeneratorTag& g : level_generators(m + n - 1)) {
    Rat v = 0;
    BarElement fg = comparison_f(m + n, g);
    for (const auto& [key, c] : fg.terms()) {
      if (key.left != kOne || key.right != kOne) continue;
      const BarTuple first(key.mids.begin(), key.mids.begin() + m);
      const BarTuple second(key.mids.begin() + m, key.mids.end());
      v += c * k_pair_tuple(phi, first) * k_pair_tuple(psi, second);
    }
    (x_type(g) ? out.vx : out.vy) = v;
  }
  return out;
}

bool differential_is_radical(int level) {
  for (const GeneratorTag& g : level_generators(level)) {
    BimoduleElement dg = differential_gen(g);
    for (const auto& [key, c] : dg.terms()) {
      if (key.left == kOne && key.right == kOne) return false;
    }
  }
  return true;
}

std::vector<int> yoneda_hilbert(int max_q) {
  for (int l = 0; l <= max_q; ++l) {
    if (!differential_is_radical(l))
      throw std::logic_error("yoneda_hilbert: non-radical differential");
  }
  std::vector<int> dims;
  dims.reserve(static_cast<std::size_t>(max_q) + 1);
  for (int q = 0; q <= max_q; ++q)
    dims.push_back(static_cast<int>(level_generators(q - 1).size()));
  return dims;
}

KTwoReport yoneda_k2_report(int max_degree) {
  KTwoReport r;
  const KCochain e1 = k_eta(1), w1 = k_omega(1), w2 = k_omega(2);
  r.relations_hold = cup_k(w1, w1).is_zero() && cup_k(w2, w2).is_zero() &&
                     cup_k(w1, w2).is_zero() && cup_k(w2, w1).is_zero() &&
                     cup_k(w1, e1).is_zero() && cup_k(e1, w1).is_zero() &&
                     (cup_k(w2, e1) + cup_k(e1, w2)).is_zero();
  const std::vector<KCochain> gens = {e1, w1, w2};
  std::vector<std::vector<KCochain>> span(
      static_cast<std::size_t>(max_degree) + 1);
  span[0] = {k_eta(0)};
  r.generated_in_low_degrees = true;
  for (int d = 1; d <= max_degree; ++d) {
    for (const KCochain& g : gens) {
      if (g.hdeg > d) continue;
      for (const KCochain& v : span[static_cast<std::size_t>(d - g.hdeg)])
        span[static_cast<std::size_t>(d)].push_back(cup_k(g, v));
    }
    const auto& vs = span[static_cast<std::size_t>(d)];
    QMatrix m(vs.size(), 2);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      m.at(i, 0) = vs[i].vx;
      m.at(i, 1) = vs[i].vy;
    }
    if (m.rank() != 2) r.generated_in_low_degrees = false;
  }
  r.k2 = r.relations_hold && r.generated_in_low_degrees;
  return r;
}

QMatrix yoneda_action_matrix(int q) {
  if (q == 0) {
    QMatrix m(1, 1);
    m.at(0, 0) = 1;
    return m;
  }
  QMatrix m(2, 2);
  const std::array<KCochain, 2> basis = {k_eta(q), k_omega(q)};
  for (std::size_t col = 0; col < 2; ++col) {
    for (const GeneratorTag& g : level_generators(q - 1)) {
      Rat v = 0;
      BarElement fg = comparison_f(q, g);
      for (const auto& [key, c] : fg.terms()) {
        if (key.left != kOne || key.right != kOne) continue;
        v += c * twisted_pair(basis[col], key.mids);
      }
      m.at(x_type(g) ? 0 : 1, col) = v;
    }
  }
  return m;
}

std::vector<E2Cell> e2_page(int max_q) {
  std::vector<E2Cell> out;
  for (int q = 0; q <= max_q; ++q) {
    for (int p = 0; p <= 1; ++p) {
      const PageCell cell = page_cell(p, q);
      E2Cell e;
      e.p = p;
      e.q = q;
      e.dim = cell.dim;
      if (!cell.pure) {
        e.basis = "(mixed)";
      } else {
        for (std::size_t i = 0; i < cell.rows.size(); ++i) {
          if (i) e.basis += ",";
          e.basis += class_name(p, q, cell.rows[i]);
        }
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

int smash_ext1_dimension() {
  // Generators 0 = x, 1 = y, 2 = t, 3 = t^{-1}; relations of the smash
  // product: the two algebra relations, the two commutation rules
  // t x = -x t and t y = (-y + x) t, and invertibility of t.
  using Term = std::pair<Rat, std::vector<int>>;
  const std::vector<std::vector<Term>> relations = {
      {{Rat(1), {0, 0}}},
      {{Rat(1), {1, 1, 0}}, {Rat(-1), {0, 1, 1}}, {Rat(-1), {0, 1, 0}}},
      {{Rat(1), {2, 0}}, {Rat(1), {0, 2}}},
      {{Rat(1), {2, 1}}, {Rat(1), {1, 2}}, {Rat(-1), {0, 2}}},
      {{Rat(1), {2, 3}}},
      {{Rat(1), {3, 2}}},
  };
  const std::array<Rat, 4> eps = {Rat(0), Rat(0), Rat(1), Rat(1)};
  QMatrix m(relations.size(), 4);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (const auto& [c, word] : relations[r]) {
      for (std::size_t i = 0; i < word.size(); ++i) {
        Rat others = 1;
        for (std::size_t j = 0; j < word.size(); ++j)
          if (j != i) others *= eps[static_cast<std::size_t>(word[j])];
        m.at(r, static_cast<std::size_t>(word[i])) += c * others;
      }
    }
  }
  return 4 - static_cast<int>(m.rank());
}

bool smash_d2_vanishes() {
  const int ext1 = smash_ext1_dimension();
  const int e01 = page_cell(0, 1).dim;
  const int e10 = page_cell(1, 0).dim;
  return ext1 - e01 == e10;
}

std::vector<SmashProductCheck> smash_product_checks(int max_q) {
  std::vector<SmashProductCheck> out;
  const auto push = [&](std::string label, bool ok) {
    out.push_back({std::move(label), ok});
  };

  bool ok = true;
  for (int q = 1; q <= max_q; ++q) {
    for (const KCochain& phi : {k_eta(q), k_omega(q)})
      ok = ok && cup_k(k_eta(0), phi) == phi && cup_k(phi, k_eta(0)) == phi;
  }
  push("e is a unit", ok);

  ok = invariant(0, k_eta(0));
  for (int k = 1; 2 * k <= max_q; ++k) ok = ok && invariant(2 * k, k_eta(2 * k));
  for (int k = 1; 2 * k + 1 <= max_q; ++k)
    ok = ok && invariant(2 * k + 1, k_omega(2 * k + 1));
  push("named invariants are fixed by the action", ok);

  ok = true;
  for (int k = 1; k <= max_q / 2; ++k)
    for (int kk = 1; 2 * k + 2 * kk <= max_q; ++kk)
      ok = ok && cup_k(k_eta(2 * k), k_eta(2 * kk)) == k_eta(2 * (k + kk));
  push("eta^{2k} eta^{2k'} = eta^{2(k+k')}", ok);

  ok = true;
  for (int k = 1; k <= max_q / 2; ++k) {
    for (int kk = 1; 2 * k + 2 * kk + 1 <= max_q; ++kk) {
      const KCochain target = k_omega(2 * (k + kk) + 1);
      ok = ok && cup_k(k_eta(2 * k), k_omega(2 * kk + 1)) == target &&
           cup_k(k_omega(2 * kk + 1), k_eta(2 * k)) == target;
    }
  }
  push("eta^{2k} omega^{2k'+1} = omega^{2(k+k')+1} (both orders)", ok);

  ok = true;
  for (int k = 1; 2 * k + 1 <= max_q; ++k)
    for (int kk = 1; 2 * k + 2 * kk + 2 <= max_q; ++kk)
      ok = ok &&
           cup_k(k_omega(2 * k + 1), k_omega(2 * kk + 1)).is_zero();
  push("omega omega = 0", ok);

  ok = true;
  for (int k = 1; 2 * k <= max_q; ++k) {
    for (int kk = 0; 2 * k + 2 * kk <= max_q; ++kk) {
      const int qt = 2 * (k + kk);
      const KCochain eta_kk = kk == 0 ? k_eta(0) : k_eta(2 * kk);
      const auto lhs = coker_class(qt, cup_k(k_eta(2 * k), eta_kk));
      const auto rhs = coker_class(qt, k_eta(qt));
      ok = ok && lhs == rhs && !zero_vector(rhs);
    }
  }
  push("eta^{2k} etabar^{2k'} = etabar^{2(k+k')}", ok);

  ok = true;
  for (int k = 0; 2 * k <= max_q; ++k) {
    for (int kk = 1; 2 * k + 2 * kk + 1 <= max_q; ++kk) {
      const int qt = 2 * (k + kk) + 1;
      const KCochain eta_k = k == 0 ? k_eta(0) : k_eta(2 * k);
      const auto lhs = coker_class(qt, cup_k(eta_k, k_omega(2 * kk + 1)));
      const auto rhs = coker_class(qt, k_omega(qt));
      ok = ok && lhs == rhs && !zero_vector(rhs);
    }
  }
  push("eta^{2k} omegabar^{2k'+1} = omegabar^{2(k+k')+1}", ok);

  ok = true;
  for (int k = 1; 2 * k + 1 <= max_q; ++k) {
    for (int kk = 1; 2 * k + 2 * kk + 2 <= max_q; ++kk) {
      const int qt = 2 * (k + kk) + 2;
      ok = ok && zero_vector(coker_class(
                     qt, cup_k(k_omega(2 * k + 1), k_omega(2 * kk + 1))));
    }
  }
  push("omega omegabar = 0", ok);

  push("products of two barred classes vanish (no p >= 2 row)", true);
  return out;
}

std::vector<int> smash_hilbert(int max_n) {
  std::vector<int> dims(static_cast<std::size_t>(max_n) + 1, 0);
  for (int n = 0; n <= max_n; ++n) {
    int d = page_cell(0, n).dim;
    if (n >= 1) d += page_cell(1, n - 1).dim;
    dims[static_cast<std::size_t>(n)] = d;
  }
  return dims;
}

SmashK2Report smash_k2_report() {
  SmashK2Report r;
  // Degree-3 page basis: the (0,3) classes then the (1,2) classes.
  const PageCell c03 = page_cell(0, 3);
  const PageCell c12 = page_cell(1, 2);
  const int total = c03.dim + c12.dim;
  // Positive-degree products landing in total degree 3: the degree-1 page
  // class is ebar = (1,0), the degree-2 one is eta^2 = (0,2); both orders
  // of their product land in the (1,2) cell with representative e * eta^2.
  std::vector<std::vector<Rat>> prods;
  for (const KCochain& rep :
       {cup_k(k_eta(0), k_eta(2)), cup_k(k_eta(2), k_eta(0))}) {
    std::vector<Rat> v(static_cast<std::size_t>(total), Rat(0));
    const auto cls = coker_class(2, rep);
    for (std::size_t i = 0; i < cls.size(); ++i)
      v[static_cast<std::size_t>(c03.dim) + i] = cls[i];
    prods.push_back(std::move(v));
  }
  QMatrix span(prods.size(), static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < prods.size(); ++i)
    for (std::size_t j = 0; j < prods[i].size(); ++j)
      span.at(i, j) = prods[i][j];
  const std::size_t rank = span.rank();
  r.k2 = rank == static_cast<std::size_t>(total);
  if (!r.k2) {
    // A (0,3) basis class is outside the span: products never reach it.
    r.witness = c03.pure && !c03.rows.empty()
                    ? class_name(0, 3, c03.rows.front())
                    : "(0,3) cell";
  }
  return r;
}

}  // namespace sjp
