#include "sjp/resolution.hpp"

namespace sjp {

std::vector<GeneratorTag> level_generators(int n) {
  if (n < -1) throw std::invalid_argument("level_generators: n >= -1");
  if (n == -1) return {tag_unit()};
  if (n == 0) return {tag_x(), tag_y()};
  return {tag_xpow(n), tag_y2x(n)};
}

void BimoduleElement::add(const PBWMonomial& l, const GeneratorTag& g,
                          const PBWMonomial& r, const Rat& c) {
  if (c == 0) return;
  Key k{l, g, r};
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void BimoduleElement::add(const AlgebraElement& l, const GeneratorTag& g,
                          const AlgebraElement& r, const Rat& c) {
  for (const auto& [lm, lc] : l.terms())
    for (const auto& [rm, rc] : r.terms()) add(lm, g, rm, c * lc * rc);
}

BimoduleElement& BimoduleElement::operator+=(const BimoduleElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.left, k.gen, k.right, c);
  return *this;
}

BimoduleElement& BimoduleElement::operator-=(const BimoduleElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.left, k.gen, k.right, -c);
  return *this;
}

BimoduleElement& BimoduleElement::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

BimoduleElement BimoduleElement::left_mul(const AlgebraElement& a) const {
  BimoduleElement out(hdeg_);
  for (const auto& [k, c] : terms_) {
    AlgebraElement prod = multiply(a, AlgebraElement(k.left));
    for (const auto& [m, pc] : prod.terms()) out.add(m, k.gen, k.right, c * pc);
  }
  return out;
}

BimoduleElement BimoduleElement::right_mul(const AlgebraElement& a) const {
  BimoduleElement out(hdeg_);
  for (const auto& [k, c] : terms_) {
    AlgebraElement prod = multiply(AlgebraElement(k.right), a);
    for (const auto& [m, pc] : prod.terms()) out.add(k.left, k.gen, m, c * pc);
  }
  return out;
}

std::optional<int> BimoduleElement::homogeneous_weight() const {
  std::optional<int> w;
  for (const auto& [k, c] : terms_) {
    int tw = k.left.degree() + k.gen.degree() + k.right.degree();
    if (!w)
      w = tw;
    else if (*w != tw)
      return std::nullopt;
  }
  return w;
}

std::string BimoduleElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (ac != 1) s += rat_str(ac) + "*";
    s += k.left.str() + "(x)" + k.gen.str() + "(x)" + k.right.str();
  }
  return s;
}

BimoduleElement gen_elem(const GeneratorTag& g) {
  BimoduleElement e(g.hdeg);
  e.add(kOne, g, kOne, 1);
  return e;
}

namespace {

const PBWMonomial kYX = mono(0, 1, 0);
const PBWMonomial kY2 = mono(0, 0, 2);
const PBWMonomial kXY = mono(1, 0, 1);

}  // namespace

BimoduleElement differential_gen(const GeneratorTag& g) {
  BimoduleElement out(g.hdeg - 1);
  switch (g.kind) {
    case GenKind::UNIT:
      throw std::invalid_argument("differential: no d below level -1");
    case GenKind::X:
      out.add(kX, tag_unit(), kOne, 1);
      out.add(kOne, tag_unit(), kX, -1);
      return out;
    case GenKind::Y:
      out.add(kY, tag_unit(), kOne, 1);
      out.add(kOne, tag_unit(), kY, -1);
      return out;
    case GenKind::XPOW: {
      int n = g.hdeg;
      GeneratorTag below = n == 1 ? tag_x() : tag_xpow(n - 1);
      out.add(kX, below, kOne, 1);
      out.add(kOne, below, kX, (n % 2 == 0) ? -1 : 1);  // (-1)^{n+1}
      return out;
    }
    case GenKind::Y2X: {
      int n = g.hdeg;
      if (n == 1) {
        out.add(kY2, tag_x(), kOne, 1);
        out.add(kY, tag_y(), kX, 1);
        out.add(kOne, tag_y(), kYX, 1);
        out.add(kXY, tag_y(), kOne, -1);
        out.add(kX, tag_y(), kY, -1);
        out.add(kOne, tag_x(), kY2, -1);
        out.add(kXY, tag_x(), kOne, -1);
        out.add(kX, tag_y(), kX, -1);
        out.add(kOne, tag_x(), kYX, -1);
        return out;
      }
      GeneratorTag xb = tag_xpow(n - 1);
      GeneratorTag yb = tag_y2x(n - 1);
      Rat sign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
      out.add(kY2, xb, kOne, 1);
      out.add(kOne, yb, kX, sign);
      out.add(kX, yb, kOne, -1);
      out.add(kXY, xb, kOne, -1);
      out.add(kOne, xb, kY2, -1);
      out.add(kOne, xb, kYX, -1);
      return out;
    }
  }
  throw std::logic_error("differential_gen: unreachable");
}

BimoduleElement differential(int n, const BimoduleElement& e) {
  if (e.hdeg() != n)
    throw std::invalid_argument("differential: level mismatch");
  BimoduleElement out(n - 1);
  for (const auto& [k, c] : e.terms()) {
    if (k.gen.hdeg != n)
      throw std::invalid_argument("differential: tag level mismatch");
    BimoduleElement dg = differential_gen(k.gen);
    dg = dg.left_mul(AlgebraElement(k.left)).right_mul(AlgebraElement(k.right));
    dg *= c;
    out += dg;
  }
  return out;
}

BimoduleElement bicomplex_map(BicomplexMap which, const GeneratorTag& g) {
  int n = g.hdeg;
  BimoduleElement out(n - 1);
  switch (which) {
    case BicomplexMap::D: {
      if (g.kind != GenKind::Y2X || n < 2)
        throw std::invalid_argument("bicomplex d: level-n y^2x^n, n >= 2");
      GeneratorTag xb = tag_xpow(n - 1);
      out.add(kY2, xb, kOne, 1);
      out.add(kXY, xb, kOne, -1);
      out.add(kOne, xb, kY2, -1);
      out.add(kOne, xb, kYX, -1);
      return out;
    }
    case BicomplexMap::DELTA: {
      if (g.kind != GenKind::XPOW || n < 2)
        throw std::invalid_argument("bicomplex delta: level-n x^{n+1}, n >= 2");
      GeneratorTag below = tag_xpow(n - 1);
      out.add(kX, below, kOne, 1);
      out.add(kOne, below, kX, 1);
      return out;
    }
    case BicomplexMap::PARTIAL: {
      if (g.kind != GenKind::XPOW || n < 2)
        throw std::invalid_argument("bicomplex partial: level-n x^{n+1}");
      GeneratorTag below = tag_xpow(n - 1);
      out.add(kX, below, kOne, 1);
      out.add(kOne, below, kX, -1);
      return out;
    }
    case BicomplexMap::DELTA_PRIME: {
      if (g.kind != GenKind::Y2X || n < 2)
        throw std::invalid_argument("bicomplex delta': level-n y^2x^n, n >= 2");
      GeneratorTag below = tag_y2x(n - 1);
      out.add(kX, below, kOne, -1);
      out.add(kOne, below, kX, -1);
      return out;
    }
    case BicomplexMap::PARTIAL_PRIME: {
      if (g.kind != GenKind::Y2X || n < 3)
        throw std::invalid_argument(
            "bicomplex partial': level-n y^2x^n, n >= 3");
      GeneratorTag below = tag_y2x(n - 1);
      out.add(kX, below, kOne, -1);
      out.add(kOne, below, kX, 1);
      return out;
    }
  }
  throw std::logic_error("bicomplex_map: unreachable");
}

AlgebraElement multiply_out(const BimoduleElement& e) {
  if (e.hdeg() != -1)
    throw std::invalid_argument("multiply_out: expects level -1");
  AlgebraElement out;
  for (const auto& [k, c] : e.terms()) {
    AlgebraElement p = multiply(k.left, k.right);
    p *= c;
    out += p;
  }
  return out;
}

}  // namespace sjp
