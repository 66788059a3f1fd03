// Arithmetic layer: the word-rewriting oracle, the closed commutation
// forms, PBW dimensions, and the automorphism action.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "sjp/algebra.hpp"
#include "sjp/rewrite.hpp"

using namespace sjp;

namespace {

std::vector<Word> all_words(int len) {
  std::vector<Word> out{Word()};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * 2);
    for (const Word& w : out) {
      next.push_back(w + 'x');
      next.push_back(w + 'y');
    }
    out = std::move(next);
  }
  return out;
}

// Fully reduce, resolving every choice of redex with `pick`.
template <typename Pick>
WordPoly normal_form_with_strategy(const Word& w0, Pick pick) {
  using namespace rewrite_detail;
  WordPoly done, cur{{w0, Rat(1)}};
  while (!cur.empty()) {
    WordPoly next;
    for (const auto& [w, c] : cur) {
      auto redexes = redex_positions(w);
      if (redexes.empty()) {
        poly_add(done, w, c);
        continue;
      }
      for (const Word& u : rewrite_at(w, pick(redexes)))
        poly_add(next, u, c);
    }
    cur = std::move(next);
  }
  return done;
}

}  // namespace

TEST_CASE("closed commutation forms agree with word rewriting") {
  for (int n = 0; n <= 8; ++n) {
    Word even(static_cast<std::size_t>(2 * n), 'y');
    Word odd(static_cast<std::size_t>(2 * n + 1), 'y');
    CHECK(commutation_closed_form(1, n) == reduce_word(even + "x"));
    CHECK(commutation_closed_form(2, n) == reduce_word(odd + "x"));
    for (int b = 1; b <= 8; ++b) {
      Word loops;
      for (int i = 0; i < b; ++i) loops += "yx";
      CHECK(commutation_closed_form(3, n, b) == reduce_word(even + loops));
      CHECK(commutation_closed_form(4, n, b) == reduce_word(odd + loops));
    }
  }
}

TEST_CASE("closed forms match hand expansions in low degree") {
  // y^2 x = x(yx) + xy^2 is the defining relation itself.
  CHECK(commutation_closed_form(1, 1) == elem(1, 1, 0) + elem(1, 0, 2));
  // yx is already normal.
  CHECK(commutation_closed_form(2, 0) == elem(0, 1, 0));
  // y^3 x = (yx)^2 + (yx)y^2.
  CHECK(commutation_closed_form(2, 1) == elem(0, 2, 0) + elem(0, 1, 2));
  // y (yx)^b = b x(yx)^b + x(yx)^{b-1} y^2.
  for (int b = 1; b <= 6; ++b)
    CHECK(commutation_closed_form(4, 0, b) ==
          elem(1, b, 0, Rat(b)) + elem(1, b - 1, 2));
}

TEST_CASE("rewriting is locally confluent on all short words") {
  using namespace rewrite_detail;
  for (int len = 0; len <= 7; ++len) {
    for (const Word& w : all_words(len)) {
      WordPoly nf = normal_form_word(w);
      for (std::size_t pos : redex_positions(w)) {
        WordPoly step;
        for (const Word& u : rewrite_at(w, pos)) poly_add(step, u, Rat(1));
        CHECK(normal_form(step) == nf);
      }
    }
  }
}

TEST_CASE("random reduction strategies reach the same normal form") {
  std::mt19937 rng(20240817);
  std::bernoulli_distribution letter(0.7);  // y-heavy words hit y^2x often
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> len(10, 14);
    Word w;
    for (int i = 0, l = len(rng); i < l; ++i) w += letter(rng) ? 'y' : 'x';
    WordPoly leftmost = normal_form_word(w);
    WordPoly random_picks = normal_form_with_strategy(
        w, [&rng](const std::vector<std::size_t>& redexes) {
          std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
          return redexes[pick(rng)];
        });
    WordPoly rightmost = normal_form_with_strategy(
        w, [](const std::vector<std::size_t>& redexes) {
          return redexes.back();
        });
    CHECK(random_picks == leftmost);
    CHECK(rightmost == leftmost);
  }
}

TEST_CASE("graded dimensions") {
  for (int d = 0; d <= 40; ++d) {
    CHECK(graded_dimension(d) == d + 1);
    auto basis = graded_basis(d);
    CHECK(static_cast<int>(basis.size()) == d + 1);
    for (const auto& m : basis) CHECK(m.degree() == d);
    for (std::size_t i = 1; i < basis.size(); ++i)
      CHECK(basis[i - 1] < basis[i]);
  }
  for (int d = 0; d <= 6; ++d) CHECK(word_quotient_dimension(d) == d + 1);
}

TEST_CASE("multiplication agrees with rewriting of concatenated words") {
  for (int du = 0; du <= 5; ++du)
    for (int dv = 0; dv <= 5; ++dv)
      for (const auto& u : graded_basis(du))
        for (const auto& v : graded_basis(dv))
          CHECK(multiply(u, v) == reduce_word(u.word() + v.word()));
}

TEST_CASE("multiplication is associative") {
  for (int du = 1; du <= 3; ++du)
    for (int dv = 1; dv <= 3; ++dv)
      for (int dw = 1; dw <= 3; ++dw)
        for (const auto& u : graded_basis(du))
          for (const auto& v : graded_basis(dv))
            for (const auto& w : graded_basis(dw)) {
              AlgebraElement a(u), b(v), c(w);
              CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            }
}

TEST_CASE("structural vanishing products") {
  AlgebraElement x(kX);
  CHECK(multiply(x, x).is_zero());
  for (int b = 1; b <= 6; ++b)
    CHECK(multiply(elem(0, b, 0), x).is_zero());  // (yx)^b x = 0
}

TEST_CASE("powers") {
  AlgebraElement xy = AlgebraElement(kX) + AlgebraElement(kY);
  CHECK(power(xy, 0) == AlgebraElement::one());
  CHECK(power(xy, 1) == xy);
  CHECK(power(xy, 3) == multiply(multiply(xy, xy), xy));
}

TEST_CASE("automorphism action") {
  AlgebraElement x(kX), y(kY);
  CHECK(act_t(x) == Rat(-1) * x);
  CHECK(act_t(y) == Rat(-1) * y + x);
  CHECK(act_t_inv(x) == Rat(-1) * x);
  CHECK(act_t_inv(y) == Rat(-1) * y - x);
  // (yx) and y^2 + yx + xy are t^{-1}-stable combinations.
  CHECK(act_t_inv(elem(0, 1, 0)) == elem(0, 1, 0));
  CHECK(act_t_inv(elem(0, 0, 2)) == elem(0, 0, 2) + elem(0, 1, 0) + elem(1, 0, 1));

  for (int d = 1; d <= 6; ++d)
    for (const auto& m : graded_basis(d)) {
      AlgebraElement e(m);
      CHECK(act_t(act_t_inv(e)) == e);
      CHECK(act_t_inv(act_t(e)) == e);
      CHECK(act_power(3, e) == act_t(act_t(act_t(e))));
      CHECK(act_power(-2, act_power(2, e)) == e);
    }
  // The action is multiplicative.
  for (int du = 1; du <= 3; ++du)
    for (int dv = 1; dv <= 3; ++dv)
      for (const auto& u : graded_basis(du))
        for (const auto& v : graded_basis(dv))
          CHECK(act_t(multiply(AlgebraElement(u), AlgebraElement(v))) ==
                multiply(act_t(AlgebraElement(u)), act_t(AlgebraElement(v))));
}

TEST_CASE("augmentation") {
  CHECK(augmentation(AlgebraElement::one()) == 1);
  CHECK(augmentation(AlgebraElement(kX)) == 0);
  CHECK(augmentation(Rat(3) * AlgebraElement::one() + elem(0, 2, 1)) == 3);
}
