#include "sjp/algebra.hpp"

#include <stdexcept>

#include "sjp/linalg.hpp"
#include "sjp/word.hpp"

namespace sjp {

AlgebraElement commutation_closed_form(int eq, int n, int b) {
  if (n < 0) throw std::invalid_argument("closed form: n < 0");
  AlgebraElement out;
  switch (eq) {
    case 1:  // y^{2n} x
      for (int i = 0; i <= n; ++i)
        out.add(mono(1, n - i, 2 * i), Rat(falling_ratio(n, i)));
      break;
    case 2:  // y^{2n+1} x
      for (int i = 0; i <= n; ++i)
        out.add(mono(0, n - i + 1, 2 * i), Rat(falling_ratio(n, i)));
      break;
    case 3:  // y^{2n} (yx)^b, b >= 1
      if (b < 1) throw std::invalid_argument("eq3: b < 1");
      for (int i = 0; i <= n; ++i)
        out.add(mono(0, b + n - i, 2 * i),
                Rat(binomial(n, i) * falling_ratio(b + n - i - 1, b - 1)));
      break;
    case 4:  // y^{2n+1} (yx)^b, b >= 1
      if (b < 1) throw std::invalid_argument("eq4: b < 1");
      for (int i = 0; i <= n + 1; ++i)
        out.add(mono(1, b + n - i, 2 * i),
                Rat(binomial(n + 1, i) * falling_ratio(b + n - i, b - 1)));
      break;
    default:
      throw std::invalid_argument("closed form: eq must be 1..4");
  }
  return out;
}

namespace {

// m * x for a PBW monomial m.
AlgebraElement times_x(const PBWMonomial& m) {
  AlgebraElement out;
  if (m.c == 0) {
    if (m.b >= 1) return out;          // (yx)x contains xx
    if (m.a == 1) return out;          // x*x
    out.add(kX, 1);
    return out;
  }
  if (m.c % 2 == 0) {
    // y^{2n}x starts with x: survives only with empty prefix.
    if (m.a == 1 || m.b >= 1) return out;
    return commutation_closed_form(1, m.c / 2);
  }
  // y^{2n+1}x starts with yx: prefix concatenates.
  AlgebraElement cf = commutation_closed_form(2, (m.c - 1) / 2);
  for (const auto& [t, coeff] : cf.terms())
    out.add(mono(m.a, m.b + t.b, t.c), coeff);
  return out;
}

// m * (yx)^b2 for b2 >= 1.
AlgebraElement times_yx_pow(const PBWMonomial& m, int b2) {
  AlgebraElement out;
  if (m.c == 0) {
    out.add(mono(m.a, m.b + b2, 0), 1);
    return out;
  }
  if (m.c % 2 == 0) {
    AlgebraElement cf = commutation_closed_form(3, m.c / 2, b2);
    for (const auto& [t, coeff] : cf.terms())
      out.add(mono(m.a, m.b + t.b, t.c), coeff);
    return out;
  }
  // eq4 terms start with x: survive only with empty prefix.
  if (m.a == 1 || m.b >= 1) return out;
  return commutation_closed_form(4, (m.c - 1) / 2, b2);
}

}  // namespace

AlgebraElement multiply(const PBWMonomial& m1, const PBWMonomial& m2) {
  AlgebraElement acc(m1);
  if (m2.a == 1) {
    AlgebraElement next;
    for (const auto& [t, coeff] : acc.terms()) {
      AlgebraElement tx = times_x(t);
      tx *= coeff;
      next += tx;
    }
    acc = std::move(next);
  }
  if (m2.b >= 1) {
    AlgebraElement next;
    for (const auto& [t, coeff] : acc.terms()) {
      AlgebraElement ty = times_yx_pow(t, m2.b);
      ty *= coeff;
      next += ty;
    }
    acc = std::move(next);
  }
  if (m2.c >= 1) {
    AlgebraElement next;
    for (const auto& [t, coeff] : acc.terms())
      next.add(mono(t.a, t.b, t.c + m2.c), coeff);
    acc = std::move(next);
  }
  return acc;
}

AlgebraElement multiply(const AlgebraElement& e1, const AlgebraElement& e2) {
  AlgebraElement out;
  for (const auto& [m1, c1] : e1.terms())
    for (const auto& [m2, c2] : e2.terms()) {
      AlgebraElement p = multiply(m1, m2);
      p *= c1 * c2;
      out += p;
    }
  return out;
}

AlgebraElement power(const AlgebraElement& e, int k) {
  AlgebraElement acc = AlgebraElement::one();
  for (int i = 0; i < k; ++i) acc = multiply(acc, e);
  return acc;
}

std::vector<PBWMonomial> graded_basis(int d) {
  std::vector<PBWMonomial> out;
  if (d < 0) return out;
  for (int a = 0; a <= 1 && a <= d; ++a)
    for (int b = 0; 2 * b + a <= d; ++b) out.push_back(mono(a, b, d - a - 2 * b));
  return out;
}

namespace {

AlgebraElement act_gen(const AlgebraElement& e, const AlgebraElement& img_x,
                       const AlgebraElement& img_y) {
  // Algebra endomorphism determined by x,y images, evaluated on PBW words.
  AlgebraElement out;
  AlgebraElement img_yx = multiply(img_y, img_x);
  for (const auto& [m, c] : e.terms()) {
    AlgebraElement term = AlgebraElement::one();
    if (m.a) term = img_x;
    for (int i = 0; i < m.b; ++i) term = multiply(term, img_yx);
    for (int i = 0; i < m.c; ++i) term = multiply(term, img_y);
    term *= c;
    out += term;
  }
  return out;
}

}  // namespace

AlgebraElement act_t(const AlgebraElement& e) {
  return act_gen(e, -elem(1, 0, 0), elem(1, 0, 0) - elem(0, 0, 1));
}

AlgebraElement act_t_inv(const AlgebraElement& e) {
  return act_gen(e, -elem(1, 0, 0), -elem(1, 0, 0) - elem(0, 0, 1));
}

AlgebraElement act_power(int k, const AlgebraElement& e) {
  AlgebraElement out = e;
  for (int i = 0; i < (k >= 0 ? k : -k); ++i)
    out = k >= 0 ? act_t(out) : act_t_inv(out);
  return out;
}

Rat augmentation(const AlgebraElement& e) { return e.coeff(kOne); }

int word_quotient_dimension(int d) {
  if (d < 0) return 0;
  if (d == 0) return 1;
  // Enumerate all words of degree d; index them.
  std::vector<Word> words;
  words.reserve(1u << d);
  for (unsigned code = 0; code < (1u << d); ++code) {
    Word w(static_cast<std::size_t>(d), 'x');
    for (int i = 0; i < d; ++i)
      if (code & (1u << i)) w[static_cast<std::size_t>(i)] = 'y';
    words.push_back(std::move(w));
  }
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

  // Rows: u * r * v over the word basis for both relators.
  const std::vector<std::vector<std::pair<Word, Rat>>> relators = {
      {{"xx", Rat(1)}},
      {{"yyx", Rat(1)}, {"xyy", Rat(-1)}, {"xyx", Rat(-1)}}};
  std::vector<std::map<std::size_t, Rat>> rows;
  for (const auto& rel : relators) {
    int rdeg = word_degree(rel.front().first);
    if (rdeg > d) continue;
    for (int du = 0; du + rdeg <= d; ++du) {
      int dv = d - rdeg - du;
      for (unsigned cu = 0; cu < (1u << du); ++cu) {
        Word u(static_cast<std::size_t>(du), 'x');
        for (int i = 0; i < du; ++i)
          if (cu & (1u << i)) u[static_cast<std::size_t>(i)] = 'y';
        for (unsigned cv = 0; cv < (1u << dv); ++cv) {
          Word v(static_cast<std::size_t>(dv), 'x');
          for (int i = 0; i < dv; ++i)
            if (cv & (1u << i)) v[static_cast<std::size_t>(i)] = 'y';
          std::map<std::size_t, Rat> row;
          for (const auto& [rw, rc] : rel) row[index.at(u + rw + v)] = rc;
          rows.push_back(std::move(row));
        }
      }
    }
  }
  std::size_t rank = sparse_rank(std::move(rows), words.size());
  return static_cast<int>(words.size() - rank);
}

}  // namespace sjp
