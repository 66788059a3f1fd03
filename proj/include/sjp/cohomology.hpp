#pragma once
// Hochschild cohomology and homology of A from the minimal resolution.
//
// A cochain of cohomological degree N stores its values on the generators
// of the level-(N-1) term: `vx` on the x-power-type generator (x at N = 1,
// x^N at N >= 2, the sentinel unit at N = 0) and `vy` on the y-type one
// (y at N = 1, y^2 x^{N-1} at N >= 2; unused at N = 0).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sjp/linalg.hpp"
#include "sjp/resolution.hpp"

namespace sjp {

struct NotACocycle : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BasisMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cochain {
  int hdeg = 0;
  AlgebraElement vx, vy;

  bool is_zero() const { return vx.is_zero() && vy.is_zero(); }
  friend Cochain operator+(Cochain l, const Cochain& r) {
    l.vx += r.vx;
    l.vy += r.vy;
    return l;
  }
  friend Cochain operator-(Cochain l, const Cochain& r) {
    l.vx -= r.vx;
    l.vy -= r.vy;
    return l;
  }
  friend Cochain operator*(const Rat& s, Cochain c) {
    c.vx *= s;
    c.vy *= s;
    return c;
  }
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

// Generator tags a degree-N cochain evaluates on (level N-1).
std::vector<GeneratorTag> cochain_support(int hdeg);

// Weight of a homogeneous cochain: deg(value) - deg(generator), equal on
// both slots; nullopt for inhomogeneous, 0 weight for the zero cochain is
// not distinguished (returns nullopt on zero).
std::optional<int> cochain_weight(const Cochain& c);

const AlgebraElement& cochain_value(const Cochain& c, const GeneratorTag& g);

// sum c * l * phi(g) * r over the terms of e (level hdeg-1).
AlgebraElement evaluate_cochain(const Cochain& phi, const BimoduleElement& e);

// Derived differential: (d phi)(g) = phi(d_{level(g)}(1 (x) g (x) 1)).
Cochain hom_differential(const Cochain& phi);

// Hand-transcribed cross-check formulas for the first two differentials and
// the column maps of the cochain bicomplex.
Cochain d0_explicit(const AlgebraElement& a);
Cochain d1_explicit(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement col_d(const AlgebraElement& a);        // [y^2,a]-(xya+ayx)
AlgebraElement col_delta(const AlgebraElement& a);    // xa+ax
AlgebraElement col_partial(const AlgebraElement& a);  // [x,a]
AlgebraElement col_delta_prime(const AlgebraElement& b);
AlgebraElement col_partial_prime(const AlgebraElement& b);

// --- cells -----------------------------------------------------------------

struct CellDims {
  int cochains = 0;
  int cocycles = 0;
  int coboundaries = 0;
  int h = 0;
};

std::vector<Cochain> cochain_cell_basis(int hdeg, int w);
std::vector<Rat> cochain_coordinates(const Cochain& c, int w);
// Matrix of d : cell(hdeg, w) -> cell(hdeg+1, w); rows = target coords.
QMatrix cochain_differential_matrix(int hdeg, int w);
CellDims cohomology_cell(int hdeg, int w);

// Same for coefficients in k = A/A+ (epsilon-action); the differential is
// identically zero by minimality, which dimension counting verifies.
CellDims cohomology_cell_k(int hdeg, int w);

// --- named classes (the degreewise description of HH^*(A)) -----------------

Cochain cls_c();
Cochain cls_s(int n);
Cochain cls_t(int n, int p);  // degree 2p, p >= 1
Cochain cls_u(int n, int p);
Cochain cls_v(int n, int p);  // degree 2p+1, p >= 1
Cochain cls_w(int n, int p);

struct NamedClass {
  std::string name;
  Cochain rep;
};

// All named classes living in the cell (hdeg, w).
std::vector<NamedClass> named_classes_in_cell(int hdeg, int w);

// Expected cell dimension from the degreewise description.
int expected_h_dim(int hdeg, int w);

// Coordinates of a cocycle in the named basis modulo coboundaries.
std::map<std::string, Rat> reduce_to_basis(const Cochain& z);

// --- homology ---------------------------------------------------------------

struct Chain {
  int hdeg = 0;
  AlgebraElement vx, vy;  // coefficients on the two level-(hdeg-1) generators

  bool is_zero() const { return vx.is_zero() && vy.is_zero(); }
  friend Chain operator+(Chain l, const Chain& r) {
    l.vx += r.vx;
    l.vy += r.vy;
    return l;
  }
  friend Chain operator-(Chain l, const Chain& r) {
    l.vx -= r.vx;
    l.vy -= r.vy;
    return l;
  }
  friend Chain operator*(const Rat& s, Chain c) {
    c.vx *= s;
    c.vy *= s;
    return c;
  }
  friend bool operator==(const Chain&, const Chain&) = default;
};

std::optional<int> chain_weight(const Chain& c);

// Induced map A (x)_{A^e} P_N -> A (x)_{A^e} P_{N-1} under the convention
// a (x) (l (x) g (x) r) = (r a l) (x) g.
Chain chain_differential(const Chain& c);

// Cross-checks transcribed from the homology section.
AlgebraElement h_d0(const AlgebraElement& a, const AlgebraElement& b);
Chain h_delta_bar(const AlgebraElement& a);
Chain h_d1(const AlgebraElement& b);
AlgebraElement hcol_d(const AlgebraElement& a);      // [a,y^2]-(axy+yxa)
AlgebraElement hcol_delta(const AlgebraElement& a);  // ax+xa
AlgebraElement hcol_partial(const AlgebraElement& a);  // [a,x]

std::vector<Chain> chain_cell_basis(int hdeg, int w);
std::vector<Rat> chain_coordinates(const Chain& c, int w);
QMatrix chain_differential_matrix(int hdeg, int w);  // cell(h, w) -> cell(h-1, w)
CellDims homology_cell(int hdeg, int w);

struct NamedCycle {
  std::string name;
  Chain rep;
};
std::vector<NamedCycle> named_cycles_in_cell(int hdeg, int w);
int expected_hh_dim(int hdeg, int w);

}  // namespace sjp
