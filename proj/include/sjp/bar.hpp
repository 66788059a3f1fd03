#pragma once
// The normalized bar resolution B_n = A (x) Abar^{(x)n} (x) A and the
// comparison chain maps f : P -> B and g : B -> P.
//
// g is published only on the finitely many middle-tuple patterns needed by
// cup products of f-images; anything else raises PatternUnsupported.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sjp/resolution.hpp"

namespace sjp {

struct PatternUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Middle tuples are positive-degree PBW monomials.
using BarTuple = std::vector<PBWMonomial>;

class BarElement {
 public:
  struct Key {
    PBWMonomial left;
    BarTuple mids;
    PBWMonomial right;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using Terms = std::map<Key, Rat>;

  BarElement() = default;
  explicit BarElement(int bar_deg) : bar_deg_(bar_deg) {}

  int bar_deg() const { return bar_deg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PBWMonomial& l, const BarTuple& mids, const PBWMonomial& r,
           const Rat& c);
  void add_outer(const AlgebraElement& l, const BarTuple& mids,
                 const AlgebraElement& r, const Rat& c = 1);

  BarElement& operator+=(const BarElement& o);
  BarElement& operator-=(const BarElement& o);
  BarElement& operator*=(const Rat& s);
  friend BarElement operator+(BarElement l, const BarElement& r) {
    l += r;
    return l;
  }
  friend BarElement operator-(BarElement l, const BarElement& r) {
    l -= r;
    return l;
  }
  friend bool operator==(const BarElement&, const BarElement&) = default;

  std::string str() const;

 private:
  int bar_deg_ = 0;
  Terms terms_;
};

// b_n : B_n -> B_{n-1}; merged middles are normalized in A and terms whose
// merged middle vanishes are dropped (middles have positive degree, so a
// merge never lands in degree zero).
BarElement bar_differential(const BarElement& e);

// f at bar degree n on a generator of ambiguity level n-1.
BarElement comparison_f(int n, const GeneratorTag& g);

// g on a single middle tuple (bar degree = tuple length).
BimoduleElement comparison_g_tuple(const BarTuple& mids);

// g on a bar element; throws PatternUnsupported outside the listed domain.
BimoduleElement comparison_g(const BarElement& e);

// f extended A-bilinearly to bar degree n: every generator tag appearing in
// e must live at ambiguity level n - 1.
BarElement comparison_f_elem(int n, const BimoduleElement& e);

// Canonical catalogue of middle tuples inside g's pattern domain at bar
// degree n, used to exercise the chain-map identity on all supported shapes.
std::vector<BarTuple> g_domain_tuples(int n);

}  // namespace sjp
