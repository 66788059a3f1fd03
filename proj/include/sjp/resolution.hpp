#pragma once
// The minimal projective A^e-resolution of A.
//
// Generator tags follow the ambiguity ladder: level 0 holds {x, y}, level
// n >= 1 holds {x^{n+1}, y^2 x^n}.  The augmentation target A (x) A is
// modeled as level -1 with a sentinel UNIT generator, so d_0 lands there.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sjp/algebra.hpp"
#include "sjp/element.hpp"

namespace sjp {

enum class GenKind { UNIT, X, Y, XPOW, Y2X };

struct GeneratorTag {
  GenKind kind = GenKind::UNIT;
  int hdeg = -1;  // ambiguity level; -1 for UNIT

  // Internal degree of the generator word.
  int degree() const {
    switch (kind) {
      case GenKind::UNIT:
        return 0;
      case GenKind::X:
      case GenKind::Y:
        return 1;
      case GenKind::XPOW:
        return hdeg + 1;
      case GenKind::Y2X:
        return hdeg + 2;
    }
    return 0;
  }

  std::string str() const {
    switch (kind) {
      case GenKind::UNIT:
        return "1";
      case GenKind::X:
        return "x";
      case GenKind::Y:
        return "y";
      case GenKind::XPOW:
        return hdeg == 0 ? "x" : "x^" + std::to_string(hdeg + 1);
      case GenKind::Y2X:
        return hdeg == 1 ? "y^2x" : "y^2x^" + std::to_string(hdeg);
    }
    return "?";
  }

  friend auto operator<=>(const GeneratorTag&, const GeneratorTag&) = default;
};

inline GeneratorTag tag_unit() { return {GenKind::UNIT, -1}; }
inline GeneratorTag tag_x() { return {GenKind::X, 0}; }
inline GeneratorTag tag_y() { return {GenKind::Y, 0}; }
inline GeneratorTag tag_xpow(int n) {
  if (n < 1) throw std::invalid_argument("tag_xpow: level >= 1");
  return {GenKind::XPOW, n};
}
inline GeneratorTag tag_y2x(int n) {
  if (n < 1) throw std::invalid_argument("tag_y2x: level >= 1");
  return {GenKind::Y2X, n};
}

// Generators at ambiguity level n (n = -1 gives the sentinel).
std::vector<GeneratorTag> level_generators(int n);

// An element of A (x) k<level-n generators> (x) A.
class BimoduleElement {
 public:
  struct Key {
    PBWMonomial left;
    GeneratorTag gen;
    PBWMonomial right;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using Terms = std::map<Key, Rat>;

  BimoduleElement() = default;
  explicit BimoduleElement(int hdeg) : hdeg_(hdeg) {}

  int hdeg() const { return hdeg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PBWMonomial& l, const GeneratorTag& g, const PBWMonomial& r,
           const Rat& c);
  // Adds (l (x) g (x) r) * c for algebra-element outers.
  void add(const AlgebraElement& l, const GeneratorTag& g,
           const AlgebraElement& r, const Rat& c = 1);

  BimoduleElement& operator+=(const BimoduleElement& o);
  BimoduleElement& operator-=(const BimoduleElement& o);
  BimoduleElement& operator*=(const Rat& s);
  friend BimoduleElement operator+(BimoduleElement l,
                                   const BimoduleElement& r) {
    l += r;
    return l;
  }
  friend BimoduleElement operator-(BimoduleElement l,
                                   const BimoduleElement& r) {
    l -= r;
    return l;
  }
  friend bool operator==(const BimoduleElement&, const BimoduleElement&) =
      default;

  // Left/right module action.
  BimoduleElement left_mul(const AlgebraElement& a) const;
  BimoduleElement right_mul(const AlgebraElement& a) const;

  // Internal weight of a homogeneous element (deg l + deg g + deg r).
  std::optional<int> homogeneous_weight() const;

  std::string str() const;

 private:
  int hdeg_ = 0;
  Terms terms_;
};

// Basis element 1 (x) g (x) 1.
BimoduleElement gen_elem(const GeneratorTag& g);

// d_n : level n -> level n-1 (n >= 0).
BimoduleElement differential(int n, const BimoduleElement& e);
BimoduleElement differential_gen(const GeneratorTag& g);

// Bicomplex components of d_n for n >= 2 (names follow the two-column
// diagram: the x-power column alternates delta/partial, the y^2x-column
// carries d plus an alternating primed map).
enum class BicomplexMap { D, DELTA, PARTIAL, DELTA_PRIME, PARTIAL_PRIME };
BimoduleElement bicomplex_map(BicomplexMap which, const GeneratorTag& g);

// Multiplication map P_{-1} = A (x) A -> A.
AlgebraElement multiply_out(const BimoduleElement& e);

}  // namespace sjp
