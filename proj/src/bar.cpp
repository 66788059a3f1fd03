#include "sjp/bar.hpp"

namespace sjp {

namespace {

const PBWMonomial kYX = mono(0, 1, 0);
const PBWMonomial kY2 = mono(0, 0, 2);
const PBWMonomial kXY = mono(1, 0, 1);
const PBWMonomial kXY2 = mono(1, 0, 2);
const PBWMonomial kXYX = mono(1, 1, 0);

}  // namespace

void BarElement::add(const PBWMonomial& l, const BarTuple& mids,
                     const PBWMonomial& r, const Rat& c) {
  if (c == 0) return;
  for (const auto& m : mids)
    if (m.degree() == 0)
      throw std::invalid_argument("bar middle of degree zero");
  Key k{l, mids, r};
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void BarElement::add_outer(const AlgebraElement& l, const BarTuple& mids,
                           const AlgebraElement& r, const Rat& c) {
  for (const auto& [lm, lc] : l.terms())
    for (const auto& [rm, rc] : r.terms()) add(lm, mids, rm, c * lc * rc);
}

BarElement& BarElement::operator+=(const BarElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.left, k.mids, k.right, c);
  return *this;
}

BarElement& BarElement::operator-=(const BarElement& o) {
  for (const auto& [k, c] : o.terms_) add(k.left, k.mids, k.right, -c);
  return *this;
}

BarElement& BarElement::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string BarElement::str() const {
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
    s += k.left.str() + "[";
    for (std::size_t i = 0; i < k.mids.size(); ++i) {
      if (i) s += "|";
      s += k.mids[i].str();
    }
    s += "]" + k.right.str();
  }
  return s;
}

BarElement bar_differential(const BarElement& e) {
  int n = e.bar_deg();
  if (n <= 0) throw std::invalid_argument("bar_differential: degree >= 1");
  BarElement out(n - 1);
  for (const auto& [k, coeff] : e.terms()) {
    // Left slide.
    {
      AlgebraElement l = multiply(k.left, k.mids.front());
      BarTuple rest(k.mids.begin() + 1, k.mids.end());
      out.add_outer(l, rest, AlgebraElement(k.right), coeff);
    }
    // Interior merges.
    for (int i = 0; i + 1 < n; ++i) {
      AlgebraElement prod = multiply(k.mids[static_cast<std::size_t>(i)],
                                     k.mids[static_cast<std::size_t>(i) + 1]);
      Rat sgn = (i % 2 == 0) ? -1 : 1;  // (-1)^{i+1} with 1-based i
      for (const auto& [pm, pc] : prod.terms()) {
        BarTuple mids;
        mids.reserve(static_cast<std::size_t>(n) - 1);
        for (int j = 0; j < n; ++j) {
          if (j == i) {
            mids.push_back(pm);
          } else if (j != i + 1) {
            mids.push_back(k.mids[static_cast<std::size_t>(j)]);
          }
        }
        out.add(k.left, mids, k.right, coeff * sgn * pc);
      }
    }
    // Right slide.
    {
      AlgebraElement r = multiply(k.mids.back(), k.right);
      BarTuple rest(k.mids.begin(), k.mids.end() - 1);
      Rat sgn = (n % 2 == 0) ? 1 : -1;  // (-1)^n
      out.add_outer(AlgebraElement(k.left), rest, r, coeff * sgn);
    }
  }
  return out;
}

BarElement comparison_f(int n, const GeneratorTag& g) {
  if (g.hdeg != n - 1)
    throw std::invalid_argument("comparison_f: bar degree must be level + 1");
  BarElement out(n);
  switch (g.kind) {
    case GenKind::UNIT:
      out.add(kOne, {}, kOne, 1);
      return out;
    case GenKind::X:
      out.add(kOne, {kX}, kOne, 1);
      return out;
    case GenKind::Y:
      out.add(kOne, {kY}, kOne, 1);
      return out;
    case GenKind::XPOW: {
      BarTuple xs(static_cast<std::size_t>(n), kX);
      out.add(kOne, xs, kOne, 1);
      return out;
    }
    case GenKind::Y2X: {
      auto tuple = [n](std::initializer_list<PBWMonomial> head,
                       int xs) {
        BarTuple t(head);
        for (int i = 0; i < xs; ++i) t.push_back(kX);
        if (static_cast<int>(t.size()) != n)
          throw std::logic_error("comparison_f: tuple length");
        return t;
      };
      out.add(kY, tuple({kY}, n - 1), kOne, 1);
      out.add(kOne, tuple({kY, kYX}, n - 2), kOne, 1);
      out.add(kX, tuple({kY, kY}, n - 2), kOne, -1);
      out.add(kOne, tuple({kX, kY2}, n - 2), kOne, -1);
      out.add(kX, tuple({kY}, n - 1), kOne, -1);
      out.add(kOne, tuple({kX, kYX}, n - 2), kOne, -1);
      for (int i = 0; i <= n - 3; ++i) {
        Rat sgn = (i % 2 == 0) ? 1 : -1;
        BarTuple t1, t2;
        for (int j = 0; j < 2 + i; ++j) t1.push_back(kX);
        t2 = t1;
        t1.push_back(kY2);
        t2.push_back(kYX);
        for (int j = 0; j < n - 3 - i; ++j) {
          t1.push_back(kX);
          t2.push_back(kX);
        }
        out.add(kOne, t1, kOne, sgn);
        out.add(kOne, t2, kOne, sgn);
      }
      return out;
    }
  }
  throw std::logic_error("comparison_f: unreachable");
}

namespace {

BimoduleElement g_on_monomial(const PBWMonomial& m) {
  // Total formula at bar degree 1.
  BimoduleElement out(0);
  if (m.a == 1) out.add(kOne, tag_x(), mono(0, m.b, m.c), 1);
  for (int i = 0; i < m.b; ++i) {
    out.add(mono(m.a, i, 0), tag_y(), mono(1, m.b - 1 - i, m.c), 1);
    out.add(mono(m.a, i, 1), tag_x(), mono(0, m.b - 1 - i, m.c), 1);
  }
  for (int i = 0; i < m.c; ++i)
    out.add(mono(m.a, m.b, i), tag_y(), mono(0, 0, m.c - 1 - i), 1);
  return out;
}

[[noreturn]] void unsupported(const BarTuple& mids) {
  std::string s = "comparison g: unsupported middle tuple (";
  for (std::size_t i = 0; i < mids.size(); ++i) {
    if (i) s += ",";
    s += mids[i].str();
  }
  throw PatternUnsupported(s + ")");
}

}  // namespace

BimoduleElement comparison_g_tuple(const BarTuple& mids) {
  int n = static_cast<int>(mids.size());
  BimoduleElement out(n - 1);
  if (n == 0) {
    out.add(kOne, tag_unit(), kOne, 1);
    return out;
  }
  if (n == 1) return g_on_monomial(mids.front());

  int special = -1;  // position of the unique non-x entry, if any
  for (int i = 0; i < n; ++i) {
    if (mids[static_cast<std::size_t>(i)] == kX) continue;
    if (special != -1) {
      // Allow only the leading (y, yx, x..) / (y, y, x..) patterns.
      if (special == 0 && i == 1 && mids[0] == kY &&
          (mids[1] == kYX || mids[1] == kY)) {
        for (int j = 2; j < n; ++j)
          if (mids[static_cast<std::size_t>(j)] != kX) unsupported(mids);
        if (mids[1] == kYX) out.add(kOne, tag_y2x(n - 1), kOne, 1);
        return out;
      }
      unsupported(mids);
    }
    special = i;
  }

  if (special == -1) {  // x^{(x)n}
    out.add(kOne, tag_xpow(n - 1), kOne, 1);
    return out;
  }
  const PBWMonomial& entry = mids[static_cast<std::size_t>(special)];
  if (entry == kY) {
    if (special == 0) return out;  // (y, x, ..., x) -> 0
    unsupported(mids);
  }
  if (entry == kY2) {
    if (special == 0) out.add(kOne, tag_y2x(n - 1), kOne, 1);
    return out;
  }
  if (entry == kYX) {
    if (special == 0) out.add(kY, tag_xpow(n - 1), kOne, 1);
    return out;
  }
  if (entry == kXY2) {
    if (special == 0) out.add(kX, tag_y2x(n - 1), kOne, 1);
    if (special < n - 1) out.add(kOne, tag_xpow(n - 1), kYX, 1);
    out.add(kOne, tag_xpow(n - 1), kY2, 1);
    return out;
  }
  if (entry == kXYX) {
    if (special == 0) out.add(kXY, tag_xpow(n - 1), kOne, 1);
    if (special == n - 1) out.add(kOne, tag_xpow(n - 1), kYX, 1);
    return out;
  }
  unsupported(mids);
}

BimoduleElement comparison_g(const BarElement& e) {
  BimoduleElement out(e.bar_deg() - 1);
  for (const auto& [k, c] : e.terms()) {
    BimoduleElement ge = comparison_g_tuple(k.mids);
    ge = ge.left_mul(AlgebraElement(k.left)).right_mul(AlgebraElement(k.right));
    ge *= c;
    out += ge;
  }
  return out;
}

BarElement comparison_f_elem(int n, const BimoduleElement& e) {
  BarElement out(n);
  for (const auto& [k, c] : e.terms()) {
    BarElement fg = comparison_f(n, k.gen);
    for (const auto& [fk, fc] : fg.terms()) {
      AlgebraElement left = multiply(AlgebraElement(k.left), AlgebraElement(fk.left));
      AlgebraElement right = multiply(AlgebraElement(fk.right), AlgebraElement(k.right));
      out.add_outer(left, fk.mids, right, c * fc);
    }
  }
  return out;
}

std::vector<BarTuple> g_domain_tuples(int n) {
  std::vector<BarTuple> out;
  if (n <= 0) return out;
  if (n == 1) {
    // g1 is defined on every middle, sample each PBW shape in low degrees.
    for (int d = 1; d <= 5; ++d)
      for (const auto& m : graded_basis(d)) out.push_back({m});
    return out;
  }
  BarTuple all_x(static_cast<std::size_t>(n), kX);
  out.push_back(all_x);
  if (n >= 2) {
    BarTuple head = all_x;
    head[0] = kY;
    out.push_back(head);  // (y, x, ..., x)
  }
  if (n >= 3) {
    BarTuple t = all_x;
    t[0] = kY;
    t[1] = kYX;
    out.push_back(t);  // (y, yx, x, ..., x)
    t[1] = kY;
    out.push_back(t);  // (y, y, x, ..., x)
  }
  for (const PBWMonomial& special : {kY2, kYX, kXY2, kXYX}) {
    for (int i = 0; i < n; ++i) {
      BarTuple t = all_x;
      t[static_cast<std::size_t>(i)] = special;
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace sjp
