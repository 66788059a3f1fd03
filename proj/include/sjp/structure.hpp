#pragma once
// Multiplicative and Lie structure on Hochschild cohomology: cup products
// through the comparison maps, derivation brackets, liftings of 1-cocycles
// to chain self-maps of the resolution, and the Virasoro comparison.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sjp/cells.hpp"
#include "sjp/cohomology.hpp"

namespace sjp {

// The derivation D(x) = d.vx, D(y) = d.vy applied letterwise; well defined
// on A when d is a 1-cocycle.
AlgebraElement apply_derivation(const Cochain& d, const AlgebraElement& a);

// Circle product of 1-cochains, (f o g)(v) = D_f(g(v)), and the bracket
// [f, g] = f o g - g o f.
Cochain circle_h1(const Cochain& f, const Cochain& g);
Cochain bracket_h1(const Cochain& f, const Cochain& g);

// Lifting of the derivation of a 1-cocycle to a degree-0 chain self-map of
// the resolution: on A (x) <g> (x) A it acts by D (x) 1 (x) 1 + value
// insertion + 1 (x) 1 (x) D.  Values beyond the seeded ones are solved
// degreewise from the commuting-square condition.
class Lifting {
 public:
  explicit Lifting(Cochain one_cocycle);

  const Cochain& derivation() const { return d_; }
  int weight() const { return weight_; }

  // Lifting value on 1 (x) g (x) 1 (memoized; solved on demand).
  const BimoduleElement& value(const GeneratorTag& g);

  // Seeds/overrides a value (used to install closed-form liftings).
  void override_value(const GeneratorTag& g, BimoduleElement v);

  // The lifted map applied to a level-n element.
  BimoduleElement apply(const BimoduleElement& e);

  // Commuting square d_n(value(g)) = apply(d_n(1 (x) g (x) 1)) for every
  // generator at the given ambiguity level.
  bool chain_condition_holds(int level);

 private:
  BimoduleElement solve_value(const GeneratorTag& g);

  Cochain d_;
  int weight_ = 0;
  std::map<GeneratorTag, BimoduleElement> values_;
};

// Closed-form liftings for the classes c and s_0, seeded through max_level.
Lifting make_c_lifting(int max_level);
Lifting make_euler_lifting(int max_level);

// Gerstenhaber bracket [delta, psi] of the lifted 1-cocycle with an
// N-cochain psi: g -> D(psi(g)) - psi(value(g)).
Cochain bracket_with_lifting(Lifting& lift, const Cochain& psi);

// Cup product through the comparison maps (no auxiliary signs).
Cochain cup(const Cochain& phi, const Cochain& psi);

// Coboundary families spanning Im d^0 (as 1-cochains); the bracket
// reductions rewrite composites against these.
Cochain fam_rho(int k);
Cochain fam_zeta(int b, int k);
Cochain fam_sigma(int k);
Cochain fam_tau(int b, int k);
Cochain fam_nu(int b, int k);
Cochain fam_xi(int b, int k);

// The Witt/Virasoro algebra with basis {L_m} and central element C:
// [L_m, L_n] = (n - m) L_{m+n} + delta_{m,-n} (m^3 - m)/12 C.
struct VirasoroElement {
  std::map<int, Rat> l;
  Rat c = 0;

  VirasoroElement& operator+=(const VirasoroElement& o);
  VirasoroElement& operator-=(const VirasoroElement& o);
  VirasoroElement& operator*=(const Rat& s);
  friend VirasoroElement operator+(VirasoroElement a,
                                   const VirasoroElement& b) {
    a += b;
    return a;
  }
  friend VirasoroElement operator-(VirasoroElement a,
                                   const VirasoroElement& b) {
    a -= b;
    return a;
  }
  friend bool operator==(const VirasoroElement&, const VirasoroElement&);
  std::string str() const;
};

VirasoroElement vir_l(int m, const Rat& coeff = 1);
VirasoroElement vir_central(const Rat& coeff = 1);
VirasoroElement vir_bracket(const VirasoroElement& a,
                            const VirasoroElement& b);

// Images of the cohomology generators: s_m -> 2^{m+1} L_m, c -> C.
VirasoroElement transport_s(int m, const Rat& coeff = 1);
VirasoroElement transport_c(const Rat& coeff = 1);

// Exact fit of bracket eigenvalue samples (m, n, lambda) against the family
// lambda = n + a*m + b.
struct SeriesFit {
  bool consistent = false;
  Rat a = 0, b = 0;
};
SeriesFit fit_series(const std::vector<std::tuple<int, int, Rat>>& samples);

}  // namespace sjp
