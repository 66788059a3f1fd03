// Hochschild homology: the induced chain differential against the
// transcribed formulas, the degreewise cycle description, and the
// bar-complex dimension oracle.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "sjp/bar_oracle.hpp"
#include "sjp/bases.hpp"
#include "sjp/cohomology.hpp"

using namespace sjp;

namespace {

AlgebraElement random_homogeneous(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  AlgebraElement out;
  for (const auto& m : graded_basis(degree)) out.add(m, coeff(rng));
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("chain differential matches the transcribed formulas") {
  std::mt19937 rng(201);
  for (int deg = 0; deg <= 4; ++deg)
    for (int trial = 0; trial < 3; ++trial) {
      AlgebraElement a = random_homogeneous(rng, deg);
      AlgebraElement b = random_homogeneous(rng, deg);
      Chain c1{1, a, b};
      Chain d1 = chain_differential(c1);
      CHECK(d1.hdeg == 0);
      CHECK(d1.vx == h_d0(a, b));
      CHECK(d1.vy.is_zero());
      Chain c2{2, a, b};
      CHECK(chain_differential(c2) == h_delta_bar(a) + h_d1(b));
    }
}

TEST_CASE("chain differential matches the homology columns") {
  std::mt19937 rng(202);
  for (int N = 3; N <= 6; ++N)
    for (int deg = 0; deg <= 3; ++deg) {
      AlgebraElement a = random_homogeneous(rng, deg);
      AlgebraElement b = random_homogeneous(rng, deg);
      Chain dc = chain_differential(Chain{N, a, b});
      CHECK(dc.hdeg == N - 1);
      AlgebraElement from_a =
          (N - 1) % 2 == 0 ? hcol_partial(a) : hcol_delta(a);
      AlgebraElement primed =
          (N - 1) % 2 == 0 ? hcol_delta(b) : hcol_partial(b);
      CHECK(dc.vx == from_a + hcol_d(b));
      CHECK(dc.vy == Rat(-1) * primed);
    }
}

TEST_CASE("cell dimensions follow the degreewise description") {
  for (int N = 0; N <= 6; ++N)
    for (int w = 0; w <= 12; ++w) {
      CellDims cd = homology_cell(N, w);
      CHECK(cd.h == expected_hh_dim(N, w));
      CHECK(cd.h == cd.cocycles - cd.coboundaries);
    }
}

TEST_CASE("a few dimension literals") {
  CHECK(expected_hh_dim(0, 0) == 1);
  CHECK(expected_hh_dim(0, 3) == 2);
  CHECK(expected_hh_dim(1, 1) == 2);
  CHECK(expected_hh_dim(1, 4) == 2);
  CHECK(expected_hh_dim(1, 5) == 3);
  CHECK(expected_hh_dim(2, 3) == 2);
  CHECK(expected_hh_dim(2, 4) == 0);
  CHECK(expected_hh_dim(3, 3) == 1);
  CHECK(expected_hh_dim(3, 5) == 2);
  CHECK(expected_hh_dim(4, 5) == 2);
  CHECK(expected_hh_dim(4, 6) == 0);
}

TEST_CASE("named cycles represent a basis modulo boundaries") {
  for (int N = 0; N <= 6; ++N)
    for (int w = 0; w <= 12; ++w) {
      auto named = named_cycles_in_cell(N, w);
      CHECK(static_cast<int>(named.size()) == expected_hh_dim(N, w));
      if (named.empty()) continue;
      if (N >= 1)
        for (const auto& nc : named) {
          CAPTURE(nc.name);
          CHECK(chain_differential(nc.rep).is_zero());
          CHECK(chain_weight(nc.rep) == w);
        }
      QMatrix bnd = chain_differential_matrix(N + 1, w);
      std::size_t cell_dim = chain_cell_basis(N, w).size();
      QMatrix span(0, cell_dim);
      for (std::size_t c = 0; c < bnd.cols(); ++c) {
        std::vector<Rat> row(cell_dim);
        for (std::size_t r = 0; r < cell_dim; ++r) row[r] = bnd.at(r, c);
        span.append_row(row);
      }
      std::size_t boundary_rank = span.rank();
      for (const auto& nc : named)
        span.append_row(chain_coordinates(nc.rep, w));
      CHECK(span.rank() == boundary_rank + named.size());
    }
}

TEST_CASE("cycle family names follow the degree") {
  for (int N = 0; N <= 6; ++N)
    for (int w = 0; w <= 12; ++w)
      for (const auto& nc : named_cycles_in_cell(N, w)) {
        CAPTURE(nc.name);
        bool ok = false;
        if (N == 0)
          ok = starts_with(nc.name, "h0x_") || starts_with(nc.name, "h0y_");
        else if (N == 1)
          ok = starts_with(nc.name, "h1a_") || starts_with(nc.name, "h1b_") ||
               starts_with(nc.name, "h1c_") || starts_with(nc.name, "h1d_");
        else if (N == 2)
          ok = starts_with(nc.name, "h2a_") || starts_with(nc.name, "h2b_");
        else if (N % 2 == 1)
          ok = starts_with(nc.name, "hoa_") || starts_with(nc.name, "hob_");
        else
          ok = starts_with(nc.name, "hea_") || starts_with(nc.name, "heb_");
        CHECK(ok);
      }
}

TEST_CASE("degree-two cycles need their column partner") {
  // The value on the second generator alone closes only the column, not the
  // total complex; its partner on the first generator repairs it.
  Chain naive{2, {}, AlgebraElement::one()};
  Chain expect{1, Rat(-1) * (elem(1, 0, 1) + elem(0, 1, 0)), {}};
  CHECK(chain_differential(naive) == expect);
  Chain repaired{2, AlgebraElement(kY), AlgebraElement::one()};
  CHECK(chain_differential(repaired).is_zero());
}

TEST_CASE("column image bases") {
  for (const auto& bc : verify_kernel_image_bases(BasisLemma::Images4, 12)) {
    CAPTURE(bc.part);
    CAPTURE(bc.weight);
    CHECK(bc.ok());
  }
}

TEST_CASE("bar oracle agrees with the resolution") {
  for (int n = 0; n <= 3; ++n)
    for (int w = 0; w <= 8; ++w)
      CHECK(bar_dim_homology_A(n, w) == homology_cell(n, w).h);
}
