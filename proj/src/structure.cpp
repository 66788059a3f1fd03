#include "sjp/structure.hpp"

#include <stdexcept>

#include "sjp/algebra.hpp"
#include "sjp/bar.hpp"
#include "sjp/linalg.hpp"

namespace sjp {
namespace {

AlgebraElement as_element(const PBWMonomial& m, const Rat& c = 1) {
  return elem(m.a, m.b, m.c, c);
}

// Sum_{l=0}^{top} (k!/l!) x^a (yx)^{base-l} y^{2l}
AlgebraElement scaled_loop_sum(int a, int base, int k, int top) {
  AlgebraElement e;
  for (int l = 0; l <= top; ++l)
    e += elem(a, base - l, 2 * l, Rat(falling_ratio(k, l)));
  return e;
}

}  // namespace

AlgebraElement apply_derivation(const Cochain& d, const AlgebraElement& a) {
  if (d.hdeg != 1)
    throw std::invalid_argument("apply_derivation: needs a 1-cochain");
  AlgebraElement out;
  for (const auto& [m, c] : a.terms()) {
    const Word w = m.word();
    for (std::size_t i = 0; i < w.size(); ++i) {
      const AlgebraElement& dv = w[i] == 'x' ? d.vx : d.vy;
      const PBWMonomial pre = parse_pbw_word(w.substr(0, i));
      const PBWMonomial suf = parse_pbw_word(w.substr(i + 1));
      out += multiply(multiply(as_element(pre, c), dv), as_element(suf));
    }
  }
  return out;
}

Cochain circle_h1(const Cochain& f, const Cochain& g) {
  return {1, apply_derivation(f, g.vx), apply_derivation(f, g.vy)};
}

Cochain bracket_h1(const Cochain& f, const Cochain& g) {
  return circle_h1(f, g) - circle_h1(g, f);
}

Lifting::Lifting(Cochain one_cocycle) : d_(std::move(one_cocycle)) {
  if (d_.hdeg != 1) throw std::invalid_argument("Lifting: needs a 1-cochain");
  weight_ = cochain_weight(d_).value_or(0);
  values_[tag_unit()] = BimoduleElement(-1);
}

const BimoduleElement& Lifting::value(const GeneratorTag& g) {
  auto it = values_.find(g);
  if (it == values_.end()) it = values_.emplace(g, solve_value(g)).first;
  return it->second;
}

void Lifting::override_value(const GeneratorTag& g, BimoduleElement v) {
  values_[g] = std::move(v);
}

BimoduleElement Lifting::apply(const BimoduleElement& e) {
  BimoduleElement out(e.hdeg());
  for (const auto& [key, c] : e.terms()) {
    out.add(apply_derivation(d_, as_element(key.left)), key.gen,
            as_element(key.right), c);
    BimoduleElement inserted =
        value(key.gen).left_mul(as_element(key.left)).right_mul(
            as_element(key.right));
    inserted *= c;
    out += inserted;
    out.add(as_element(key.left), key.gen,
            apply_derivation(d_, as_element(key.right)), c);
  }
  return out;
}

BimoduleElement Lifting::solve_value(const GeneratorTag& g) {
  const int level = g.hdeg;
  const BimoduleElement rhs = apply(differential(level, gen_elem(g)));
  const int w = g.degree() + weight_;
  const BimoduleCell src(level, w);
  const BimoduleCell dst(level - 1, w);
  const auto sol = solve_linear(cell_differential_matrix(level, w),
                                dst.coordinates(rhs));
  if (!sol)
    throw std::logic_error("Lifting: commuting square has no solution");
  return src.element(*sol);
}

bool Lifting::chain_condition_holds(int level) {
  for (const GeneratorTag& g : level_generators(level)) {
    if (differential(level, value(g)) != apply(differential(level, gen_elem(g))))
      return false;
  }
  return true;
}

Lifting make_c_lifting(int max_level) {
  Lifting lift(cls_c());
  lift.override_value(tag_x(), BimoduleElement(0));
  lift.override_value(tag_y(), gen_elem(tag_x()));
  for (int l = 1; l <= max_level; ++l) {
    lift.override_value(tag_xpow(l), BimoduleElement(l));
    BimoduleElement v(l);
    v.add(kY, tag_xpow(l), kOne, 1);
    v.add(kOne, tag_xpow(l), kY, l % 2 == 0 ? 1 : -1);
    v.add(kX, tag_xpow(l), kOne, -1);
    lift.override_value(tag_y2x(l), v);
  }
  return lift;
}

Lifting make_euler_lifting(int max_level) {
  Lifting lift(cls_s(0));
  lift.override_value(tag_x(), gen_elem(tag_x()));
  lift.override_value(tag_y(), gen_elem(tag_y()));
  for (int l = 1; l <= max_level; ++l) {
    lift.override_value(tag_xpow(l), gen_elem(tag_xpow(l)) *= Rat(l + 1));
    lift.override_value(tag_y2x(l), gen_elem(tag_y2x(l)) *= Rat(l + 2));
  }
  return lift;
}

Cochain bracket_with_lifting(Lifting& lift, const Cochain& psi) {
  Cochain out;
  out.hdeg = psi.hdeg;
  for (const GeneratorTag& g : cochain_support(psi.hdeg)) {
    AlgebraElement v = apply_derivation(lift.derivation(), cochain_value(psi, g));
    v -= evaluate_cochain(psi, lift.value(g));
    if (g.kind == GenKind::Y || g.kind == GenKind::Y2X)
      out.vy = v;
    else
      out.vx = v;
  }
  return out;
}

Cochain cup(const Cochain& phi, const Cochain& psi) {
  const int m = phi.hdeg, n = psi.hdeg;
  Cochain out;
  out.hdeg = m + n;
  for (const GeneratorTag& g : cochain_support(m + n)) {
    AlgebraElement v;
    BarElement fg = comparison_f(m + n, g);
    for (const auto& [key, c] : fg.terms()) {
      const BarTuple first(key.mids.begin(), key.mids.begin() + m);
      const BarTuple second(key.mids.begin() + m, key.mids.end());
      AlgebraElement t = as_element(key.left, c);
      t = multiply(t, evaluate_cochain(phi, comparison_g_tuple(first)));
      t = multiply(t, evaluate_cochain(psi, comparison_g_tuple(second)));
      t = multiply(t, as_element(key.right));
      v += t;
    }
    if (g.kind == GenKind::Y || g.kind == GenKind::Y2X)
      out.vy = v;
    else
      out.vx = v;
  }
  return out;
}

Cochain fam_rho(int k) {
  return {1, scaled_loop_sum(1, k, k, k - 1), {}};
}

Cochain fam_zeta(int b, int k) {
  AlgebraElement vy = elem(1, b, 2 * k + 2, 1);
  vy += elem(1, b + 1, 2 * k, Rat(b + 1));
  vy -= elem(0, b + 1, 2 * k + 1, 1);
  return {1, elem(1, b + 1, 2 * k, 1), vy};
}

Cochain fam_sigma(int k) {
  AlgebraElement vx = scaled_loop_sum(0, k + 1, k, k);
  vx -= elem(1, 0, 2 * k + 1, 1);
  return {1, vx, {}};
}

Cochain fam_tau(int b, int k) {
  AlgebraElement vx = scaled_loop_sum(0, k + 2 + b, k, k) *= Rat(-1);
  vx += elem(1, b + 1, 2 * k + 1, 1);
  return {1, vx, elem(1, b + 1, 2 * k + 1, Rat(b + 1))};
}

Cochain fam_nu(int b, int k) {
  AlgebraElement vy = elem(0, b + 1, 2 * k, 1);
  vy -= elem(1, b, 2 * k + 1, 1);
  return {1, {}, vy};
}

Cochain fam_xi(int b, int k) {
  return {1, scaled_loop_sum(1, k + 1 + b, k, k - 1) *= Rat(-1),
          elem(1, b + 1, 2 * k, Rat(b + 1))};
}

VirasoroElement& VirasoroElement::operator+=(const VirasoroElement& o) {
  for (const auto& [m, v] : o.l) {
    Rat s = (l[m] += v);
    if (s == 0) l.erase(m);
  }
  c += o.c;
  return *this;
}

VirasoroElement& VirasoroElement::operator-=(const VirasoroElement& o) {
  VirasoroElement neg = o;
  neg *= Rat(-1);
  return *this += neg;
}

VirasoroElement& VirasoroElement::operator*=(const Rat& s) {
  if (s == 0) {
    l.clear();
    c = 0;
    return *this;
  }
  for (auto& [m, v] : l) v *= s;
  c *= s;
  return *this;
}

bool operator==(const VirasoroElement& a, const VirasoroElement& b) {
  return a.l == b.l && a.c == b.c;
}

std::string VirasoroElement::str() const {
  std::string out;
  for (const auto& [m, v] : l) {
    if (!out.empty()) out += " + ";
    out += rat_str(v) + "*L(" + std::to_string(m) + ")";
  }
  if (c != 0) {
    if (!out.empty()) out += " + ";
    out += rat_str(c) + "*C";
  }
  return out.empty() ? "0" : out;
}

VirasoroElement vir_l(int m, const Rat& coeff) {
  VirasoroElement e;
  if (coeff != 0) e.l[m] = coeff;
  return e;
}

VirasoroElement vir_central(const Rat& coeff) {
  VirasoroElement e;
  e.c = coeff;
  return e;
}

VirasoroElement vir_bracket(const VirasoroElement& a,
                            const VirasoroElement& b) {
  VirasoroElement out;
  for (const auto& [m, am] : a.l) {
    for (const auto& [n, bn] : b.l) {
      const Rat coeff = am * bn;
      out += vir_l(m + n, coeff * Rat(n - m));
      if (m == -n)
        out += vir_central(coeff * Rat(static_cast<long>(m) * m * m - m) /
                           Rat(12));
    }
  }
  return out;
}

VirasoroElement transport_s(int m, const Rat& coeff) {
  Rat scale = coeff;
  for (int i = 0; i <= m; ++i) scale *= 2;
  return vir_l(m, scale);
}

VirasoroElement transport_c(const Rat& coeff) { return vir_central(coeff); }

SeriesFit fit_series(const std::vector<std::tuple<int, int, Rat>>& samples) {
  QMatrix a(samples.size(), 2);
  std::vector<Rat> rhs(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [m, n, lambda] = samples[i];
    a.at(i, 0) = Rat(m);
    a.at(i, 1) = 1;
    rhs[i] = lambda - Rat(n);
  }
  SeriesFit fit;
  if (const auto sol = solve_linear(a, rhs)) {
    fit.consistent = true;
    fit.a = (*sol)[0];
    fit.b = (*sol)[1];
  }
  return fit;
}

}  // namespace sjp
