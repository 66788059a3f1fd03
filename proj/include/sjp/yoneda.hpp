#pragma once
// The Yoneda algebra Ext_A(k,k) through the minimal resolution, the
// Z-action coming from the bosonization A # kZ, and the two-row spectral
// sequence computing Ext_{A#kZ}(k,k).

#include <string>
#include <vector>

#include "sjp/bar.hpp"
#include "sjp/linalg.hpp"
#include "sjp/resolution.hpp"

namespace sjp {

// A k-valued cochain: one scalar per generator of its level.  `vx` holds
// the value on the x-power-type generator (the unit at hdeg 0), `vy` on the
// y-type one.
struct KCochain {
  int hdeg = 0;
  Rat vx = 0, vy = 0;

  bool is_zero() const { return vx == 0 && vy == 0; }
  friend KCochain operator+(KCochain a, const KCochain& b) {
    a.vx += b.vx;
    a.vy += b.vy;
    return a;
  }
  friend KCochain operator-(KCochain a, const KCochain& b) {
    a.vx -= b.vx;
    a.vy -= b.vy;
    return a;
  }
  friend KCochain operator*(const Rat& s, KCochain a) {
    a.vx *= s;
    a.vy *= s;
    return a;
  }
  friend bool operator==(const KCochain&, const KCochain&) = default;
  std::string str() const;
};

// Dual basis classes (eta^0 is the unit e).
KCochain k_eta(int q);
KCochain k_omega(int q);

// g on a middle tuple, extended beyond the published patterns by solving
// the commuting square in the tuple's weight cell (memoized).  The terms
// with unit outers are independent of the solver's choice of solution.
BimoduleElement comparison_g_extended(const BarTuple& mids);

// epsilon-reduced pairing <phi, g(1 (x) mids (x) 1)>.
Rat k_pair_tuple(const KCochain& phi, const BarTuple& mids);

// Yoneda (cup) product through the comparison maps with epsilon outers.
KCochain cup_k(const KCochain& phi, const KCochain& psi);

// d(P_level) lies in rad P rad (no unit-outer terms): the minimality that
// makes every k-differential vanish.
bool differential_is_radical(int level);

// dim Ext^q_A(k,k) for q <= max_q; throws if minimality fails.
std::vector<int> yoneda_hilbert(int max_q);

struct KTwoReport {
  bool relations_hold = false;
  bool generated_in_low_degrees = false;
  bool k2 = false;
};
// Generation of Ext_A(k,k) by eta^1, omega^1, omega^2 and the defining
// relations among them, checked through max_degree.
KTwoReport yoneda_k2_report(int max_degree);

// --- bosonization -----------------------------------------------------------

// Degree-q block of the Z-action on Ext_A(k,k): columns are the images of
// (eta^q, omega^q) in the same basis; the q = 0 block is the 1x1 identity.
QMatrix yoneda_action_matrix(int q);

struct E2Cell {
  int p = 0, q = 0;
  int dim = 0;
  std::string basis;  // comma-joined class names, "" when dim = 0
};
// Invariants (p = 0) and coinvariants (p = 1) of the action blocks.
std::vector<E2Cell> e2_page(int max_q);

// dim Ext^1_{A#kZ}(k,k) from the epsilon-derivation system of the
// presentation on x, y, t, t^{-1}.
int smash_ext1_dimension();

// The d_2 obstruction on the (1,0) cell vanishes exactly when the page
// accounts for the independently computed Ext^1 dimension.
bool smash_d2_vanishes();

struct SmashProductCheck {
  std::string label;
  bool ok = false;
};
// Multiplication on the collapsed page against the closed product table.
std::vector<SmashProductCheck> smash_product_checks(int max_q);

// dim Ext^n_{A#kZ}(k,k) for n <= max_n.
std::vector<int> smash_hilbert(int max_n);

struct SmashK2Report {
  bool k2 = true;       // expected: false
  std::string witness;  // a degree-3 class outside the low-degree products
};
SmashK2Report smash_k2_report();

}  // namespace sjp
