#pragma once
// Independent Hochschild (co)homology dimensions from the bar complex,
// avoiding the minimal resolution entirely.
//
// Exact routes: coefficients in k (the weight cell is spanned by tuples of
// one fixed total degree); homology with coefficients in A (weight bounds
// the tuple degrees); n = 0 (center) and n = 1 (derivations modulo inner,
// via Leibniz expansion on the defining relations).
//
// For cohomology with coefficients in A at n >= 2 the weight cell is
// infinite-dimensional, so the complex is truncated above an internal tuple
// degree; the reported dimension must be stable under raising the cutoff by
// one, otherwise the computation aborts.

#include <cstddef>
#include <stdexcept>

namespace sjp {

struct ResourceGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OracleUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dim of the weight-w cell of H^n(A, k).
int bar_dim_cohomology_k(int n, int w);

// dim of the weight-w cell of H_n(A, A).
int bar_dim_homology_A(int n, int w);

// dim of the weight-w cell of H^n(A, A); n = 0,1 exact, n >= 2 truncated.
int bar_dim_cohomology_A(int n, int w);

// Number of (tuple, value-monomial) pairs in the largest truncated layer
// touched by bar_dim_cohomology_A(n, w); the guard refuses past the budget.
std::size_t bar_cohomology_cost(int n, int w);
std::size_t bar_cohomology_budget();

}  // namespace sjp
