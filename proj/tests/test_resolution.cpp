// The minimal bimodule resolution: differentials, bicomplex decomposition,
// minimality, and the comparison maps to and from the bar resolution.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sjp/bar.hpp"
#include "sjp/resolution.hpp"
#include "sjp/yoneda.hpp"

using namespace sjp;

namespace {

const PBWMonomial kYX = mono(0, 1, 0);
const PBWMonomial kY2 = mono(0, 0, 2);
const PBWMonomial kXY = mono(1, 0, 1);

}  // namespace

TEST_CASE("level generators") {
  CHECK(level_generators(-1) == std::vector<GeneratorTag>{tag_unit()});
  CHECK(level_generators(0) == std::vector<GeneratorTag>{tag_x(), tag_y()});
  for (int n = 1; n <= 8; ++n) {
    auto gens = level_generators(n);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == tag_xpow(n));
    CHECK(gens[1] == tag_y2x(n));
    CHECK(gens[0].degree() == n + 1);
    CHECK(gens[1].degree() == n + 2);
  }
}

TEST_CASE("first differentials match their hand transcription") {
  BimoduleElement d0x(-1);
  d0x.add(kX, tag_unit(), kOne, 1);
  d0x.add(kOne, tag_unit(), kX, -1);
  CHECK(differential_gen(tag_x()) == d0x);

  BimoduleElement d0y(-1);
  d0y.add(kY, tag_unit(), kOne, 1);
  d0y.add(kOne, tag_unit(), kY, -1);
  CHECK(differential_gen(tag_y()) == d0y);

  BimoduleElement d1x(0);
  d1x.add(kX, tag_x(), kOne, 1);
  d1x.add(kOne, tag_x(), kX, 1);
  CHECK(differential_gen(tag_xpow(1)) == d1x);

  BimoduleElement d1y(0);
  d1y.add(kY2, tag_x(), kOne, 1);
  d1y.add(kY, tag_y(), kX, 1);
  d1y.add(kOne, tag_y(), kYX, 1);
  d1y.add(kXY, tag_y(), kOne, -1);
  d1y.add(kX, tag_y(), kY, -1);
  d1y.add(kOne, tag_x(), kY2, -1);
  d1y.add(kXY, tag_x(), kOne, -1);
  d1y.add(kX, tag_y(), kX, -1);
  d1y.add(kOne, tag_x(), kYX, -1);
  CHECK(differential_gen(tag_y2x(1)) == d1y);

  BimoduleElement d2x(1);
  d2x.add(kX, tag_xpow(1), kOne, 1);
  d2x.add(kOne, tag_xpow(1), kX, -1);
  CHECK(differential_gen(tag_xpow(2)) == d2x);

  BimoduleElement d2y(1);
  d2y.add(kY2, tag_xpow(1), kOne, 1);
  d2y.add(kOne, tag_y2x(1), kX, -1);
  d2y.add(kX, tag_y2x(1), kOne, -1);
  d2y.add(kXY, tag_xpow(1), kOne, -1);
  d2y.add(kOne, tag_xpow(1), kY2, -1);
  d2y.add(kOne, tag_xpow(1), kYX, -1);
  CHECK(differential_gen(tag_y2x(2)) == d2y);
}

TEST_CASE("the composite of consecutive differentials vanishes") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& g : level_generators(n)) {
      BimoduleElement dg = differential_gen(g);
      if (n == 0)
        CHECK(multiply_out(dg).is_zero());
      else
        CHECK(differential(n - 1, dg).is_zero());
    }
}

TEST_CASE("differentials are homogeneous and land in the radical") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& g : level_generators(n)) {
      auto w = differential_gen(g).homogeneous_weight();
      REQUIRE(w.has_value());
      CHECK(*w == g.degree());
    }
    CHECK(differential_is_radical(n));
  }
}

TEST_CASE("the differential reassembles from the bicomplex columns") {
  for (int n = 2; n <= 8; ++n) {
    GeneratorTag xp = tag_xpow(n), yy = tag_y2x(n);
    BimoduleElement expect_x = bicomplex_map(
        n % 2 == 0 ? BicomplexMap::PARTIAL : BicomplexMap::DELTA, xp);
    BimoduleElement expect_y = bicomplex_map(BicomplexMap::D, yy);
    expect_y += bicomplex_map(
        n % 2 == 0 ? BicomplexMap::DELTA_PRIME : BicomplexMap::PARTIAL_PRIME,
        yy);
    CHECK(differential_gen(xp) == expect_x);
    CHECK(differential_gen(yy) == expect_y);
  }
}

TEST_CASE("bimodule elements multiply through the algebra") {
  BimoduleElement e(0);
  e.add(kX, tag_x(), kY, 2);
  // x annihilates the left outer x.
  CHECK(e.left_mul(AlgebraElement(kX)).is_zero());
  BimoduleElement f = e.right_mul(AlgebraElement(kY));
  BimoduleElement expect(0);
  expect.add(kX, tag_x(), kY2, 2);
  CHECK(f == expect);

  BimoduleElement u(-1);
  u.add(kX, tag_unit(), kY, 2);
  CHECK(multiply_out(u) == elem(1, 0, 1, 2));
  u.add(kOne, tag_unit(), kXY, -2);
  CHECK(multiply_out(u).is_zero());
}

TEST_CASE("bar differential in low degrees") {
  BarElement e1(1);
  e1.add(kOne, {kXY}, kOne, 1);
  BarElement d1 = bar_differential(e1);
  BarElement expect0(0);
  expect0.add(kXY, {}, kOne, 1);
  expect0.add(kOne, {}, kXY, -1);
  CHECK(d1 == expect0);

  BarElement e2(2);
  e2.add(kOne, {kX, kX}, kOne, 1);
  BarElement d2 = bar_differential(e2);
  BarElement expect1(1);  // the middle x*x merges to zero and drops
  expect1.add(kX, {kX}, kOne, 1);
  expect1.add(kOne, {kX}, kX, 1);
  CHECK(d2 == expect1);

  // A merge that splits into two normal words keeps both.
  BarElement e2b(2);
  e2b.add(kOne, {kY2, kX}, kOne, 1);
  BarElement expect1b(1);
  expect1b.add(kY2, {kX}, kOne, 1);
  expect1b.add(kOne, {mono(1, 0, 2)}, kOne, -1);
  expect1b.add(kOne, {mono(1, 1, 0)}, kOne, -1);
  expect1b.add(kOne, {kY2}, kX, 1);
  CHECK(bar_differential(e2b) == expect1b);

  // b.b = 0 on a sample.
  BarElement e3(3);
  e3.add(kY, {kY, kYX, kX}, kXY, 1);
  CHECK(bar_differential(bar_differential(e3)).is_zero());
}

TEST_CASE("comparison f in low degrees") {
  BarElement f0(0);
  f0.add(kOne, {}, kOne, 1);
  CHECK(comparison_f(0, tag_unit()) == f0);

  BarElement f1(1);
  f1.add(kOne, {kX}, kOne, 1);
  CHECK(comparison_f(1, tag_x()) == f1);

  BarElement f2x(2);
  f2x.add(kOne, {kX, kX}, kOne, 1);
  CHECK(comparison_f(2, tag_xpow(1)) == f2x);

  BarElement f2y(2);
  f2y.add(kY, {kY, kX}, kOne, 1);
  f2y.add(kOne, {kY, kYX}, kOne, 1);
  f2y.add(kX, {kY, kY}, kOne, -1);
  f2y.add(kOne, {kX, kY2}, kOne, -1);
  f2y.add(kX, {kY, kX}, kOne, -1);
  f2y.add(kOne, {kX, kYX}, kOne, -1);
  CHECK(comparison_f(2, tag_y2x(1)) == f2y);
}

TEST_CASE("comparison g on published patterns") {
  CHECK(comparison_g_tuple({kX}) == gen_elem(tag_x()));
  CHECK(comparison_g_tuple({kY}) == gen_elem(tag_y()));

  BimoduleElement g_xy(0);
  g_xy.add(kOne, tag_x(), kY, 1);
  g_xy.add(kX, tag_y(), kOne, 1);
  CHECK(comparison_g_tuple({kXY}) == g_xy);

  CHECK(comparison_g_tuple({kX, kX}) == gen_elem(tag_xpow(1)));
  CHECK(comparison_g_tuple({kY, kX}).is_zero());
  CHECK(comparison_g_tuple({kY2, kX}) == gen_elem(tag_y2x(1)));
  CHECK(comparison_g_tuple({kX, kY2}).is_zero());

  BimoduleElement g_yx_x(1);
  g_yx_x.add(kY, tag_xpow(1), kOne, 1);
  CHECK(comparison_g_tuple({kYX, kX}) == g_yx_x);

  BimoduleElement g_x_xy2(1);
  g_x_xy2.add(kOne, tag_xpow(1), kY2, 1);
  CHECK(comparison_g_tuple({kX, mono(1, 0, 2)}) == g_x_xy2);

  BimoduleElement g_xy2_x(1);
  g_xy2_x.add(kX, tag_y2x(1), kOne, 1);
  g_xy2_x.add(kOne, tag_xpow(1), kYX, 1);
  g_xy2_x.add(kOne, tag_xpow(1), kY2, 1);
  CHECK(comparison_g_tuple({mono(1, 0, 2), kX}) == g_xy2_x);

  BimoduleElement g_xyx_x(1);
  g_xyx_x.add(kXY, tag_xpow(1), kOne, 1);
  CHECK(comparison_g_tuple({mono(1, 1, 0), kX}) == g_xyx_x);

  BimoduleElement g_x_xyx(1);
  g_x_xyx.add(kOne, tag_xpow(1), kYX, 1);
  CHECK(comparison_g_tuple({kX, mono(1, 1, 0)}) == g_x_xyx);

  CHECK_THROWS_AS(comparison_g_tuple({kX, kY}), PatternUnsupported);
  CHECK_THROWS_AS(comparison_g_tuple({kYX, kYX}), PatternUnsupported);
}

TEST_CASE("f is a chain map") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : level_generators(n - 1)) {
      BarElement lhs = bar_differential(comparison_f(n, g));
      BarElement rhs = comparison_f_elem(n - 1, differential_gen(g));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("g is a chain map on its pattern domain") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mids : g_domain_tuples(n)) {
      BarElement e(n);
      e.add(kOne, mids, kOne, 1);
      CHECK(differential(n - 1, comparison_g_tuple(mids)) ==
            comparison_g(bar_differential(e)));
    }
}

TEST_CASE("g splits f") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& g : level_generators(n - 1))
      CHECK(comparison_g(comparison_f(n, g)) == gen_elem(g));
}

TEST_CASE("f extends bilinearly") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : level_generators(n - 1)) {
      CHECK(comparison_f_elem(n, gen_elem(g)) == comparison_f(n, g));
      BimoduleElement e(n - 1);
      e.add(kY, g, kXY, 3);
      BarElement f = comparison_f(n, g);
      BarElement expect(n);
      for (const auto& [k, c] : f.terms())
        expect.add_outer(multiply(AlgebraElement(kY), AlgebraElement(k.left)),
                         k.mids,
                         multiply(AlgebraElement(k.right), AlgebraElement(kXY)),
                         c * 3);
      CHECK(comparison_f_elem(n, e) == expect);
    }
}
