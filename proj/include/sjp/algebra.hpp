#pragma once
// Arithmetic in A = k<x,y> / (x^2, y^2x - xy^2 - xyx) on the PBW basis
// x^a (yx)^b y^c, via the closed-form commutation identities.

#include <vector>

#include "sjp/element.hpp"

namespace sjp {

// Closed forms for moving powers of y across x and yx:
//   eq1: y^{2n} x      = sum_{i=0}^{n}   n!/i! * x (yx)^{n-i} y^{2i}
//   eq2: y^{2n+1} x    = sum_{i=0}^{n}   n!/i! * (yx)^{n-i+1} y^{2i}
//   eq3: y^{2n} (yx)^b = sum_{i=0}^{n}   C(n,i) (b+n-i-1)!/(b-1)!
//                                          * (yx)^{b+n-i} y^{2i}
//   eq4: y^{2n+1}(yx)^b= sum_{i=0}^{n+1} C(n+1,i) (b+n-i)!/(b-1)!
//                                          * x (yx)^{b+n-i} y^{2i}
// (eq3/eq4 need b >= 1).
AlgebraElement commutation_closed_form(int eq, int n, int b = 0);

AlgebraElement multiply(const PBWMonomial& m1, const PBWMonomial& m2);
AlgebraElement multiply(const AlgebraElement& e1, const AlgebraElement& e2);

inline AlgebraElement commutator(const AlgebraElement& a,
                                 const AlgebraElement& b) {
  return multiply(a, b) - multiply(b, a);
}

AlgebraElement power(const AlgebraElement& e, int k);

// The PBW monomials of degree d in the canonical order.
std::vector<PBWMonomial> graded_basis(int d);

inline int graded_dimension(int d) { return d >= 0 ? d + 1 : 0; }

// Algebra automorphism group Z acting by t.x = -x, t.y = -y + x.
AlgebraElement act_t(const AlgebraElement& e);
AlgebraElement act_t_inv(const AlgebraElement& e);
AlgebraElement act_power(int k, const AlgebraElement& e);

// Augmentation A -> k (constant coefficient).
Rat augmentation(const AlgebraElement& e);

// Independent dimension oracle: dim of degree-d part of the word quotient
// k<x,y>_d / (two-sided ideal of the relators)_d, by exact rank over the
// 2^d word basis.  Practical for d <= ~10.
int word_quotient_dimension(int d);

}  // namespace sjp
