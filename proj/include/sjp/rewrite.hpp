#pragma once
// Word-level rewriting for A = k<x,y> / (x^2, y^2x - xy^2 - xyx).
//
// Reduction system on words: xx -> 0 and yyx -> xyy + xyx, applied at the
// leftmost redex by default.  This route never uses the closed-form
// commutation identities, so it serves as an independent oracle for them.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sjp/element.hpp"
#include "sjp/rational.hpp"
#include "sjp/word.hpp"

namespace sjp {

using WordPoly = std::map<Word, Rat>;

namespace rewrite_detail {

inline void poly_add(WordPoly& p, const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// Positions of all redexes ("xx" or "yyx") in w.
inline std::vector<std::size_t> redex_positions(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == 'x' && w[i + 1] == 'x') {
      out.push_back(i);
    } else if (i + 2 < w.size() && w[i] == 'y' && w[i + 1] == 'y' &&
               w[i + 2] == 'x') {
      out.push_back(i);
    }
  }
  return out;
}

// Rewrite w once at redex position i; the result has 0, 1 or 2 words.
inline std::vector<Word> rewrite_at(const Word& w, std::size_t i) {
  if (w[i] == 'x') return {};  // xx -> 0
  Word head = w.substr(0, i);
  Word tail = w.substr(i + 3);
  return {head + "xyy" + tail, head + "xyx" + tail};
}

}  // namespace rewrite_detail

// Normal form of a single word, leftmost-redex strategy.  Rewriting is
// breadth-first so that equal intermediate words merge; without merging the
// branch count explodes on words like y^{2n}(yx)^b.
inline WordPoly normal_form_word(const Word& w0) {
  using namespace rewrite_detail;
  WordPoly done;
  WordPoly cur{{w0, Rat(1)}};
  while (!cur.empty()) {
    WordPoly next;
    for (const auto& [w, c] : cur) {
      auto redexes = redex_positions(w);
      if (redexes.empty()) {
        poly_add(done, w, c);
        continue;
      }
      for (const Word& u : rewrite_at(w, redexes.front()))
        poly_add(next, u, c);
    }
    cur = std::move(next);
  }
  return done;
}

// Normal form of a word polynomial.
inline WordPoly normal_form(const WordPoly& p) {
  WordPoly out;
  for (const auto& [w, c] : p) {
    WordPoly nf = normal_form_word(w);
    for (const auto& [u, d] : nf) rewrite_detail::poly_add(out, u, c * d);
  }
  return out;
}

// Interpret a normal-form word polynomial as an element of A.
inline AlgebraElement element_of_normal_form(const WordPoly& p) {
  AlgebraElement e;
  for (const auto& [w, c] : p) e.add(parse_pbw_word(w), c);
  return e;
}

inline AlgebraElement reduce_word(const Word& w) {
  return element_of_normal_form(normal_form_word(w));
}

}  // namespace sjp
