#pragma once
// Words in the free algebra k<x,y> and the deg-lex order with y > x.

#include <string>

namespace sjp {

// A word is a string over {'x','y'}; the empty string is the unit.
using Word = std::string;

inline int word_degree(const Word& w) { return static_cast<int>(w.size()); }

// Deg-lex with y > x: longer words are larger; same length compares
// letterwise with 'y' beating 'x'.
inline bool word_deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] == 'x';  // x < y
  }
  return false;
}

}  // namespace sjp
