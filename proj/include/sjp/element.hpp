#pragma once
// Elements of A: finite rational linear combinations of PBW monomials.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sjp/monomial.hpp"
#include "sjp/rational.hpp"

namespace sjp {

class AlgebraElement {
 public:
  using Terms = std::map<PBWMonomial, Rat>;

  AlgebraElement() = default;
  explicit AlgebraElement(const PBWMonomial& m, Rat coeff = 1) {
    add(m, std::move(coeff));
  }

  static AlgebraElement zero() { return {}; }
  static AlgebraElement one() { return AlgebraElement(kOne); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PBWMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  AlgebraElement& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement l, const AlgebraElement& r) {
    l += r;
    return l;
  }
  friend AlgebraElement operator-(AlgebraElement l, const AlgebraElement& r) {
    l -= r;
    return l;
  }
  friend AlgebraElement operator*(AlgebraElement l, const Rat& s) {
    l *= s;
    return l;
  }
  friend AlgebraElement operator*(const Rat& s, AlgebraElement r) {
    r *= s;
    return r;
  }
  friend AlgebraElement operator-(AlgebraElement e) {
    for (auto& [m, c] : e.terms_) c = -c;
    return e;
  }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) =
      default;

  Rat coeff(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  // Degree of a homogeneous element; nullopt for 0 or inhomogeneous.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      if (!d)
        d = m.degree();
      else if (*d != m.degree())
        return std::nullopt;
    }
    return d;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rat ac = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) s += "-";
        first = false;
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (ac != 1 || m == kOne) {
        s += rat_str(ac);
        if (m != kOne) s += "*";
      }
      if (m != kOne) s += m.str();
    }
    return s;
  }

 private:
  Terms terms_;
};

inline AlgebraElement elem(int a, int b, int c, Rat coeff = 1) {
  return AlgebraElement(mono(a, b, c), std::move(coeff));
}

}  // namespace sjp
