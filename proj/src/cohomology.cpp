#include "sjp/cohomology.hpp"

#include <algorithm>

namespace sjp {

namespace {

const AlgebraElement kAX = elem(1, 0, 0);
const AlgebraElement kAY = elem(0, 0, 1);
const AlgebraElement kAY2 = elem(0, 0, 2);
const AlgebraElement kAXY = elem(1, 0, 1);
const AlgebraElement kAYX = elem(0, 1, 0);

// sum_{i=0}^{n} (n!/i!) (yx)^{n-i} y^{2i}
AlgebraElement yx_sum(int n) {
  AlgebraElement e;
  for (int i = 0; i <= n; ++i)
    e.add(mono(0, n - i, 2 * i), Rat(falling_ratio(n, i)));
  return e;
}

}  // namespace

std::vector<GeneratorTag> cochain_support(int hdeg) {
  return level_generators(hdeg - 1);
}

std::optional<int> cochain_weight(const Cochain& c) {
  std::optional<int> w;
  auto fold = [&w](const AlgebraElement& v, int gen_deg) -> bool {
    if (v.is_zero()) return true;
    auto d = v.homogeneous_degree();
    if (!d) return false;
    int tw = *d - gen_deg;
    if (!w) w = tw;
    return *w == tw;
  };
  auto gens = cochain_support(c.hdeg);
  if (!fold(c.vx, gens.front().degree())) return std::nullopt;
  if (gens.size() > 1 && !fold(c.vy, gens.back().degree()))
    return std::nullopt;
  return w;
}

const AlgebraElement& cochain_value(const Cochain& c, const GeneratorTag& g) {
  switch (g.kind) {
    case GenKind::UNIT:
    case GenKind::X:
    case GenKind::XPOW:
      return c.vx;
    case GenKind::Y:
    case GenKind::Y2X:
      return c.vy;
  }
  throw std::logic_error("cochain_value: unreachable");
}

AlgebraElement evaluate_cochain(const Cochain& phi, const BimoduleElement& e) {
  if (e.hdeg() != phi.hdeg - 1)
    throw std::invalid_argument("evaluate_cochain: level mismatch");
  AlgebraElement out;
  for (const auto& [k, c] : e.terms()) {
    AlgebraElement v = multiply(AlgebraElement(k.left),
                                multiply(cochain_value(phi, k.gen),
                                         AlgebraElement(k.right)));
    v *= c;
    out += v;
  }
  return out;
}

Cochain hom_differential(const Cochain& phi) {
  Cochain out{phi.hdeg + 1, {}, {}};
  auto gens = cochain_support(out.hdeg);
  out.vx = evaluate_cochain(phi, differential_gen(gens.front()));
  if (gens.size() > 1)
    out.vy = evaluate_cochain(phi, differential_gen(gens.back()));
  return out;
}

Cochain d0_explicit(const AlgebraElement& a) {
  return Cochain{1, commutator(kAX, a), commutator(kAY, a)};
}

Cochain d1_explicit(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement on_x2 = multiply(kAX, a) + multiply(a, kAX);
  AlgebraElement yb_by = multiply(kAY, b) + multiply(b, kAY);
  AlgebraElement on_y2x = commutator(kAY2, a) + commutator(yb_by, kAX) -
                          multiply(kAXY, a) - multiply(a, kAYX) -
                          multiply(kAX, multiply(b, kAX));
  return Cochain{2, on_x2, on_y2x};
}

AlgebraElement col_d(const AlgebraElement& a) {
  return commutator(kAY2, a) - multiply(kAXY, a) - multiply(a, kAYX);
}
AlgebraElement col_delta(const AlgebraElement& a) {
  return multiply(kAX, a) + multiply(a, kAX);
}
AlgebraElement col_partial(const AlgebraElement& a) {
  return commutator(kAX, a);
}
AlgebraElement col_delta_prime(const AlgebraElement& b) {
  return -(multiply(kAX, b) + multiply(b, kAX));
}
AlgebraElement col_partial_prime(const AlgebraElement& b) {
  return -commutator(kAX, b);
}

// --- cells -------------------------------------------------------------------

std::vector<Cochain> cochain_cell_basis(int hdeg, int w) {
  std::vector<Cochain> out;
  auto gens = cochain_support(hdeg);
  for (const auto& m : graded_basis(gens.front().degree() + w))
    out.push_back(Cochain{hdeg, AlgebraElement(m), {}});
  if (gens.size() > 1)
    for (const auto& m : graded_basis(gens.back().degree() + w))
      out.push_back(Cochain{hdeg, {}, AlgebraElement(m)});
  return out;
}

std::vector<Rat> cochain_coordinates(const Cochain& c, int w) {
  auto gens = cochain_support(c.hdeg);
  std::vector<Rat> coords;
  auto push = [&coords](const AlgebraElement& v, int d) {
    for (const auto& m : graded_basis(d)) coords.push_back(v.coeff(m));
    for (const auto& [m, cf] : v.terms())
      if (m.degree() != d)
        throw std::invalid_argument("cochain_coordinates: weight mismatch");
  };
  push(c.vx, gens.front().degree() + w);
  if (gens.size() > 1)
    push(c.vy, gens.back().degree() + w);
  else if (!c.vy.is_zero())
    throw std::invalid_argument("cochain_coordinates: vy at level -1");
  return coords;
}

QMatrix cochain_differential_matrix(int hdeg, int w) {
  auto basis = cochain_cell_basis(hdeg, w);
  std::size_t target_dim =
      cochain_coordinates(Cochain{hdeg + 1, {}, {}}, w).size();
  QMatrix m(target_dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto coords = cochain_coordinates(hom_differential(basis[j]), w);
    for (std::size_t i = 0; i < target_dim; ++i) m.at(i, j) = coords[i];
  }
  return m;
}

CellDims cohomology_cell(int hdeg, int w) {
  CellDims out;
  auto basis = cochain_cell_basis(hdeg, w);
  out.cochains = static_cast<int>(basis.size());
  QMatrix d_here = cochain_differential_matrix(hdeg, w);
  out.cocycles = out.cochains - static_cast<int>(d_here.rank());
  out.coboundaries =
      hdeg == 0 ? 0
                : static_cast<int>(cochain_differential_matrix(hdeg - 1, w)
                                       .rank());
  out.h = out.cocycles - out.coboundaries;
  return out;
}

CellDims cohomology_cell_k(int hdeg, int w) {
  // Coefficients in k: a value on a generator g is a scalar in weight
  // -deg(g); the differential evaluates through the augmentation and
  // vanishes iff every differential coefficient has positive outer degree.
  CellDims out;
  auto dim_at = [](int hd, int ww) {
    int dim = 0;
    for (const auto& g : cochain_support(hd))
      if (g.degree() + ww == 0) ++dim;
    return dim;
  };
  out.cochains = dim_at(hdeg, w);
  // Differential matrix through epsilon.
  auto matrix = [dim_at](int hd, int ww) {
    auto gens_src = cochain_support(hd);
    auto gens_tgt = cochain_support(hd + 1);
    QMatrix m(static_cast<std::size_t>(dim_at(hd + 1, ww)),
              static_cast<std::size_t>(dim_at(hd, ww)));
    std::size_t col = 0;
    for (const auto& gs : gens_src) {
      if (gs.degree() + ww != 0) continue;
      std::size_t row = 0;
      for (const auto& gt : gens_tgt) {
        if (gt.degree() + ww != 0) continue;
        Rat entry = 0;
        BimoduleElement dgt = differential_gen(gt);
        for (const auto& [k, c] : dgt.terms())
          if (k.gen == gs && k.left == kOne && k.right == kOne) entry += c;
        m.at(row, col) = entry;
        ++row;
      }
      ++col;
    }
    return m;
  };
  out.cocycles = out.cochains - static_cast<int>(matrix(hdeg, w).rank());
  out.coboundaries =
      hdeg == 0 ? 0 : static_cast<int>(matrix(hdeg - 1, w).rank());
  out.h = out.cocycles - out.coboundaries;
  return out;
}

// --- named classes -----------------------------------------------------------

Cochain cls_c() { return Cochain{1, {}, kAX}; }

Cochain cls_s(int n) {
  if (n < 0) throw std::invalid_argument("cls_s: n >= 0");
  return Cochain{1, Rat(2 * n + 1) * elem(1, 0, 2 * n), elem(0, 0, 2 * n + 1)};
}

Cochain cls_t(int n, int p) {
  if (n < 0 || p < 1) throw std::invalid_argument("cls_t: n >= 0, p >= 1");
  return Cochain{2 * p, {}, elem(1, 0, 2 * n)};
}

Cochain cls_u(int n, int p) {
  if (n < 0 || p < 1) throw std::invalid_argument("cls_u: n >= 0, p >= 1");
  return Cochain{2 * p, yx_sum(n), -elem(0, 0, 2 * n + 1)};
}

Cochain cls_v(int n, int p) {
  if (n < 0 || p < 1) throw std::invalid_argument("cls_v: n >= 0, p >= 1");
  return Cochain{2 * p + 1, {}, yx_sum(n)};
}

Cochain cls_w(int n, int p) {
  if (n < 0 || p < 1) throw std::invalid_argument("cls_w: n >= 0, p >= 1");
  return Cochain{2 * p + 1, elem(1, 0, 2 * n), elem(1, 0, 2 * n + 1)};
}

std::vector<NamedClass> named_classes_in_cell(int hdeg, int w) {
  std::vector<NamedClass> out;
  if (hdeg == 0) {
    if (w == 0) out.push_back({"1", Cochain{0, AlgebraElement::one(), {}}});
    return out;
  }
  if (hdeg == 1) {
    if (w == 0) out.push_back({"c", cls_c()});
    if (w >= 0 && w % 2 == 0)
      out.push_back({"s" + std::to_string(w / 2), cls_s(w / 2)});
    return out;
  }
  if (w % 2 != 0) return out;
  if (hdeg % 2 == 0) {
    int p = hdeg / 2;
    int n2 = w + 2 * p;  // 2n
    if (n2 >= 0) {
      std::string suf =
          "(" + std::to_string(n2 / 2) + "," + std::to_string(hdeg) + ")";
      out.push_back({"t" + suf, cls_t(n2 / 2, p)});
      out.push_back({"u" + suf, cls_u(n2 / 2, p)});
    }
    return out;
  }
  int p = (hdeg - 1) / 2;
  int n2v = w + 2 * p + 2;
  std::string deg = std::to_string(hdeg);
  if (n2v >= 0)
    out.push_back({"v(" + std::to_string(n2v / 2) + "," + deg + ")",
                   cls_v(n2v / 2, p)});
  int n2w = w + 2 * p;
  if (n2w >= 0)
    out.push_back({"w(" + std::to_string(n2w / 2) + "," + deg + ")",
                   cls_w(n2w / 2, p)});
  return out;
}

int expected_h_dim(int hdeg, int w) {
  return static_cast<int>(named_classes_in_cell(hdeg, w).size());
}

std::map<std::string, Rat> reduce_to_basis(const Cochain& z) {
  if (z.is_zero()) return {};
  auto w_opt = cochain_weight(z);
  if (!w_opt) throw std::invalid_argument("reduce_to_basis: inhomogeneous");
  int w = *w_opt;
  if (!hom_differential(z).is_zero())
    throw NotACocycle("reduce_to_basis: not a cocycle");

  auto named = named_classes_in_cell(z.hdeg, w);
  std::vector<Cochain> cob_srcs =
      z.hdeg == 0 ? std::vector<Cochain>{} : cochain_cell_basis(z.hdeg - 1, w);

  std::size_t rows = cochain_coordinates(Cochain{z.hdeg, {}, {}}, w).size();
  QMatrix m(rows, named.size() + cob_srcs.size());
  for (std::size_t j = 0; j < named.size(); ++j) {
    auto coords = cochain_coordinates(named[j].rep, w);
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = coords[i];
  }
  for (std::size_t j = 0; j < cob_srcs.size(); ++j) {
    auto coords = cochain_coordinates(hom_differential(cob_srcs[j]), w);
    for (std::size_t i = 0; i < rows; ++i)
      m.at(i, named.size() + j) = coords[i];
  }
  auto rhs = cochain_coordinates(z, w);
  auto sol = solve_linear(m, rhs);
  if (!sol) throw BasisMismatch("reduce_to_basis: cocycle outside the span");
  std::map<std::string, Rat> out;
  for (std::size_t j = 0; j < named.size(); ++j)
    if ((*sol)[j] != 0) out[named[j].name] = (*sol)[j];
  return out;
}

// --- homology ----------------------------------------------------------------

std::optional<int> chain_weight(const Chain& c) {
  std::optional<int> w;
  auto gens = cochain_support(c.hdeg);
  auto fold = [&w](const AlgebraElement& v, int gen_deg) -> bool {
    if (v.is_zero()) return true;
    auto d = v.homogeneous_degree();
    if (!d) return false;
    int tw = *d + gen_deg;
    if (!w) w = tw;
    return *w == tw;
  };
  if (!fold(c.vx, gens.front().degree())) return std::nullopt;
  if (gens.size() > 1 && !fold(c.vy, gens.back().degree()))
    return std::nullopt;
  return w;
}

Chain chain_differential(const Chain& c) {
  if (c.hdeg <= 0) throw std::invalid_argument("chain_differential: hdeg >= 1");
  Chain out{c.hdeg - 1, {}, {}};
  auto add_to = [&out](const GeneratorTag& g, const AlgebraElement& v) {
    switch (g.kind) {
      case GenKind::UNIT:
      case GenKind::X:
      case GenKind::XPOW:
        out.vx += v;
        return;
      case GenKind::Y:
      case GenKind::Y2X:
        out.vy += v;
        return;
    }
  };
  auto gens = cochain_support(c.hdeg);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const AlgebraElement& v = gi == 0 ? c.vx : c.vy;
    if (v.is_zero()) continue;
    BimoduleElement dgen = differential_gen(gens[gi]);
    for (const auto& [k, coeff] : dgen.terms()) {
      AlgebraElement moved = multiply(
          AlgebraElement(k.right), multiply(v, AlgebraElement(k.left)));
      moved *= coeff;
      add_to(k.gen, moved);
    }
  }
  return out;
}

AlgebraElement h_d0(const AlgebraElement& a, const AlgebraElement& b) {
  return commutator(a, kAX) + commutator(b, kAY);
}

Chain h_delta_bar(const AlgebraElement& a) {
  return Chain{1, multiply(a, kAX) + multiply(kAX, a), {}};
}

Chain h_d1(const AlgebraElement& b) {
  AlgebraElement on_x = commutator(b, kAY2) -
                        (multiply(b, kAXY) + multiply(kAYX, b));
  AlgebraElement xb = commutator(kAX, b);
  AlgebraElement on_y = multiply(xb, kAY) + multiply(kAY, xb) -
                        multiply(kAX, multiply(b, kAX));
  return Chain{1, on_x, on_y};
}

AlgebraElement hcol_d(const AlgebraElement& a) {
  return commutator(a, kAY2) - (multiply(a, kAXY) + multiply(kAYX, a));
}
AlgebraElement hcol_delta(const AlgebraElement& a) {
  return multiply(a, kAX) + multiply(kAX, a);
}
AlgebraElement hcol_partial(const AlgebraElement& a) {
  return commutator(a, kAX);
}

std::vector<Chain> chain_cell_basis(int hdeg, int w) {
  std::vector<Chain> out;
  auto gens = cochain_support(hdeg);
  for (const auto& m : graded_basis(w - gens.front().degree()))
    out.push_back(Chain{hdeg, AlgebraElement(m), {}});
  if (gens.size() > 1)
    for (const auto& m : graded_basis(w - gens.back().degree()))
      out.push_back(Chain{hdeg, {}, AlgebraElement(m)});
  return out;
}

std::vector<Rat> chain_coordinates(const Chain& c, int w) {
  auto gens = cochain_support(c.hdeg);
  std::vector<Rat> coords;
  auto push = [&coords](const AlgebraElement& v, int d) {
    for (const auto& m : graded_basis(d)) coords.push_back(v.coeff(m));
    for (const auto& [m, cf] : v.terms())
      if (m.degree() != d)
        throw std::invalid_argument("chain_coordinates: weight mismatch");
  };
  push(c.vx, w - gens.front().degree());
  if (gens.size() > 1)
    push(c.vy, w - gens.back().degree());
  else if (!c.vy.is_zero())
    throw std::invalid_argument("chain_coordinates: vy at level -1");
  return coords;
}

QMatrix chain_differential_matrix(int hdeg, int w) {
  auto basis = chain_cell_basis(hdeg, w);
  std::size_t target_dim =
      chain_coordinates(Chain{hdeg - 1, {}, {}}, w).size();
  QMatrix m(target_dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto coords = chain_coordinates(chain_differential(basis[j]), w);
    for (std::size_t i = 0; i < target_dim; ++i) m.at(i, j) = coords[i];
  }
  return m;
}

CellDims homology_cell(int hdeg, int w) {
  CellDims out;
  auto basis = chain_cell_basis(hdeg, w);
  out.cochains = static_cast<int>(basis.size());
  int rank_out = hdeg == 0
                     ? 0
                     : static_cast<int>(chain_differential_matrix(hdeg, w)
                                            .rank());
  out.cocycles = out.cochains - rank_out;
  out.coboundaries =
      static_cast<int>(chain_differential_matrix(hdeg + 1, w).rank());
  out.h = out.cocycles - out.coboundaries;
  return out;
}

std::vector<NamedCycle> named_cycles_in_cell(int hdeg, int w) {
  std::vector<NamedCycle> out;
  auto push = [&out, hdeg](const std::string& base, int n,
                           AlgebraElement on_x, AlgebraElement on_y) {
    out.push_back({base + std::to_string(n) + "@" + std::to_string(hdeg),
                   Chain{hdeg, std::move(on_x), std::move(on_y)}});
  };
  if (hdeg == 0) {
    // classes xbar y^n (w >= 1) and ybar^n (w >= 0) on the unit generator
    if (w >= 1) push("h0x_", w - 1, elem(1, 0, w - 1), {});
    if (w >= 0) push("h0y_", w, elem(0, 0, w), {});
    return out;
  }
  if (hdeg == 1) {
    if (w >= 2 && w % 2 == 0) {
      int n = (w - 2) / 2;
      AlgebraElement on_y;
      for (int i = 0; i <= n; ++i)
        on_y.add(mono(1, n - i, 2 * i),
                 Rat(falling_ratio(n, i)) * rat(n + 1, n - i + 1));
      for (int i = 0; i <= n - 1; ++i)
        on_y.add(mono(0, n - i, 2 * i + 1),
                 Rat(falling_ratio(n, i)) * rat(1, n - i));
      push("h1a_", n, elem(0, 0, 2 * n + 1), on_y);
    }
    if (w >= 1 && w % 2 == 1) push("h1b_", (w - 1) / 2, yx_sum((w - 1) / 2), {});
    if (w >= 1) push("h1c_", w - 1, {}, elem(0, 0, w - 1));
    if (w >= 3 && w % 2 == 1) {
      int n = (w - 3) / 2;
      push("h1d_", n, -elem(0, 1, 2 * n),
           elem(1, 0, 2 * n + 1) + elem(0, 1, 2 * n));
    }
    return out;
  }
  if (hdeg == 2) {
    if (w >= 3 && w % 2 == 1) {
      int n = (w - 3) / 2;
      push("h2a_", n, elem(1, 0, 2 * n), {});
      // The x^2-column partner follows the same shape as the higher even
      // degrees; without it the stated value is only a cycle of the column.
      AlgebraElement on_x;
      for (int i = 0; i <= n; ++i)
        on_x.add(mono(0, n - i, 2 * i + 1), Rat(falling_ratio(n, i)));
      push("h2b_", n, on_x, yx_sum(n));
    }
    return out;
  }
  if (hdeg % 2 == 1) {  // 2p+1, p >= 1
    if (w >= hdeg && (w - hdeg) % 2 == 0)
      push("hoa_", (w - hdeg) / 2, yx_sum((w - hdeg) / 2), {});
    if (w >= hdeg + 2 && (w - hdeg) % 2 == 0) {
      int n = (w - hdeg - 2) / 2;
      push("hob_", n, -elem(0, 1, 2 * n), elem(1, 0, 2 * n));
    }
    return out;
  }
  // hdeg = 2p+2, p >= 1
  if (w >= hdeg + 1 && (w - hdeg) % 2 == 1) {
    int n = (w - hdeg - 1) / 2;
    push("hea_", n, elem(1, 0, 2 * n), {});
    AlgebraElement on_x;
    for (int i = 0; i <= n; ++i)
      on_x.add(mono(0, n - i, 2 * i + 1), Rat(falling_ratio(n, i)));
    push("heb_", n, on_x, yx_sum(n));
  }
  return out;
}

int expected_hh_dim(int hdeg, int w) {
  return static_cast<int>(named_cycles_in_cell(hdeg, w).size());
}

}  // namespace sjp
