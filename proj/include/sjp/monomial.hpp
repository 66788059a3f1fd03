#pragma once
// PBW basis monomials x^a (yx)^b y^c with a in {0,1}, b,c >= 0.

#include <compare>
#include <stdexcept>
#include <string>

#include "sjp/word.hpp"

namespace sjp {

struct PBWMonomial {
  int a = 0;  // 0 or 1
  int b = 0;
  int c = 0;

  int degree() const { return a + 2 * b + c; }

  // Canonical order: by (degree, a, b, c).  Within one degree this is the
  // descending deg-lex order on the underlying words (y^c first).
  friend auto operator<=>(const PBWMonomial& l, const PBWMonomial& r) {
    if (auto cmp = l.degree() <=> r.degree(); cmp != 0) return cmp;
    if (auto cmp = l.a <=> r.a; cmp != 0) return cmp;
    if (auto cmp = l.b <=> r.b; cmp != 0) return cmp;
    return l.c <=> r.c;
  }
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;

  Word word() const {
    Word w;
    w.reserve(static_cast<std::size_t>(degree()));
    if (a) w.push_back('x');
    for (int i = 0; i < b; ++i) {
      w.push_back('y');
      w.push_back('x');
    }
    w.append(static_cast<std::size_t>(c), 'y');
    return w;
  }

  std::string str() const {
    if (a == 0 && b == 0 && c == 0) return "1";
    std::string s;
    if (a) s += "x";
    if (b == 1) s += "yx";
    if (b > 1) s += "(yx)^" + std::to_string(b);
    if (c == 1) s += "y";
    if (c > 1) s += "y^" + std::to_string(c);
    return s;
  }
};

inline const PBWMonomial kOne{0, 0, 0};
inline const PBWMonomial kX{1, 0, 0};
inline const PBWMonomial kY{0, 0, 1};

inline PBWMonomial mono(int a, int b, int c) {
  if (a < 0 || a > 1 || b < 0 || c < 0)
    throw std::invalid_argument("mono: exponents out of range");
  return PBWMonomial{a, b, c};
}

// y^c convenience.
inline PBWMonomial ypow(int c) { return mono(0, 0, c); }

// Parse a redex-free word as a PBW monomial: optional leading x, then a run
// of "yx" pairs, then trailing y's.  Words with no "xx"/"yyx" factors always
// have this shape.
inline PBWMonomial parse_pbw_word(const Word& w) {
  std::size_t i = 0;
  int a = 0, b = 0, c = 0;
  if (i < w.size() && w[i] == 'x') {
    a = 1;
    ++i;
  }
  while (i + 1 < w.size() && w[i] == 'y' && w[i + 1] == 'x') {
    ++b;
    i += 2;
  }
  while (i < w.size() && w[i] == 'y') {
    ++c;
    ++i;
  }
  if (i != w.size())
    throw std::invalid_argument("parse_pbw_word: not in normal form: " + w);
  return PBWMonomial{a, b, c};
}

}  // namespace sjp
