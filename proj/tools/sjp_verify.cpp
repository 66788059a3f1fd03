// Command-line verification suite: each task recomputes one layer of the
// artifact and reports every check with expected and computed values.
#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "sjp/algebra.hpp"
#include "sjp/bar.hpp"
#include "sjp/bar_oracle.hpp"
#include "sjp/bases.hpp"
#include "sjp/cohomology.hpp"
#include "sjp/report.hpp"
#include "sjp/resolution.hpp"
#include "sjp/rewrite.hpp"
#include "sjp/structure.hpp"
#include "sjp/yoneda.hpp"

namespace {

using namespace sjp;

struct Options {
  int max_hdeg = 6;
  int max_weight = 12;
  int max_index = 3;
  int max_pq = 2;
  int max_m = 6;
  int oracle_hdeg = 3;
  int oracle_weight = 8;
  bool oracle_weight_explicit = false;
  std::string coeff = "A";
  std::string format = "json";
  int jobs = 1;
  bool corrupt_fixture = false;
};

class Checks {
 public:
  void add(const std::string& name, const std::string& expected,
           const std::string& computed) {
    bool ok = expected == computed;
    entries_.push_back(Json{{"check", name},
                            {"expected", expected},
                            {"computed", computed},
                            {"status", ok ? "PASS" : "FAIL"}});
    failed_ += ok ? 0 : 1;
  }
  void add(const std::string& name, long expected, long computed) {
    add(name, std::to_string(expected), std::to_string(computed));
  }
  void add_bool(const std::string& name, bool ok) {
    add(name, "true", ok ? "true" : "false");
  }

  Json document(const std::string& task, Json parameters) const {
    Json doc;
    doc["schema"] = 1;
    doc["task"] = task;
    doc["parameters"] = std::move(parameters);
    doc["checks"] = entries_;
    doc["summary"] = Json{{"total", entries_.size()},
                          {"failed", failed_},
                          {"status", failed_ == 0 ? "PASS" : "FAIL"}};
    return doc;
  }

  int failed() const { return failed_; }

 private:
  std::vector<Json> entries_;
  int failed_ = 0;
};

std::string coords_str(const std::map<std::string, Rat>& coords) {
  std::map<std::string, Rat> pruned;
  for (const auto& [name, c] : coords)
    if (c != 0) pruned.emplace(name, c);
  if (pruned.empty()) return "0";
  std::string s;
  for (const auto& [name, c] : pruned) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*" + name;
  }
  return s;
}

std::string matrix_str(const QMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ", ";
    s += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ", ";
      s += rat_str(m.at(r, c));
    }
    s += "]";
  }
  return s + "]";
}

std::string dims_str(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string cell_label(int hdeg, int w) {
  return "(hdeg=" + std::to_string(hdeg) + ", w=" + std::to_string(w) + ")";
}

// --- verify-rewriting --------------------------------------------------------

Json run_verify_rewriting(const Options& o) {
  Checks ck;
  int nb = o.max_index;
  for (int n = 0; n <= nb; ++n) {
    Word even(static_cast<std::size_t>(2 * n), 'y');
    Word odd(static_cast<std::size_t>(2 * n + 1), 'y');
    ck.add("closed form (1) n=" + std::to_string(n),
           commutation_closed_form(1, n, 0).str(), reduce_word(even + "x").str());
    ck.add("closed form (2) n=" + std::to_string(n),
           commutation_closed_form(2, n, 0).str(), reduce_word(odd + "x").str());
    for (int b = 1; b <= nb; ++b) {
      Word loops;
      for (int i = 0; i < b; ++i) loops += "yx";
      std::string suffix = " n=" + std::to_string(n) + " b=" + std::to_string(b);
      ck.add("closed form (3)" + suffix,
             commutation_closed_form(3, n, b).str(), reduce_word(even + loops).str());
      ck.add("closed form (4)" + suffix,
             commutation_closed_form(4, n, b).str(), reduce_word(odd + loops).str());
    }
  }
  std::cerr << "[verify-rewriting] closed forms done\n";
  for (int d = 0; d <= 40; ++d)
    ck.add("dim A_" + std::to_string(d), d + 1, graded_dimension(d));
  for (int d = 0; d <= 6; ++d)
    ck.add("word quotient dimension, degree " + std::to_string(d), d + 1,
           word_quotient_dimension(d));
  bool assoc = true;
  for (int du = 1; du <= 2; ++du)
    for (int dv = 1; dv <= 2; ++dv)
      for (int dw = 1; dw <= 2; ++dw)
        for (const auto& u : graded_basis(du))
          for (const auto& v : graded_basis(dv))
            for (const auto& w : graded_basis(dw)) {
              AlgebraElement uv = multiply(AlgebraElement(u), AlgebraElement(v));
              AlgebraElement vw = multiply(AlgebraElement(v), AlgebraElement(w));
              if (multiply(uv, AlgebraElement(w)) != multiply(AlgebraElement(u), vw))
                assoc = false;
            }
  ck.add_bool("multiplication associative on basis words of degree <= 2", assoc);
  return ck.document("verify-rewriting",
                     Json{{"max_index", nb}, {"jobs", o.jobs}});
}

// --- verify-resolution -------------------------------------------------------

Json run_verify_resolution(const Options& o) {
  Checks ck;
  for (int n = 0; n <= o.max_hdeg; ++n) {
    for (const auto& g : level_generators(n)) {
      BimoduleElement dg = differential_gen(g);
      bool zero = n == 0 ? multiply_out(dg).is_zero()
                         : differential(n - 1, dg).is_zero();
      ck.add_bool("d.d = 0 on " + g.str(), zero);
    }
    ck.add_bool("radical differential at level " + std::to_string(n),
                differential_is_radical(n));
  }
  std::cerr << "[verify-resolution] differentials done\n";
  for (int n = 2; n <= o.max_hdeg; ++n) {
    GeneratorTag xp = tag_xpow(n), yy = tag_y2x(n);
    BimoduleElement expect_x =
        bicomplex_map(n % 2 == 0 ? BicomplexMap::PARTIAL : BicomplexMap::DELTA, xp);
    BimoduleElement expect_y = bicomplex_map(BicomplexMap::D, yy);
    expect_y += bicomplex_map(
        n % 2 == 0 ? BicomplexMap::DELTA_PRIME : BicomplexMap::PARTIAL_PRIME, yy);
    ck.add_bool("bicomplex reassembly on " + xp.str(),
                differential_gen(xp) == expect_x);
    ck.add_bool("bicomplex reassembly on " + yy.str(),
                differential_gen(yy) == expect_y);
  }
  int fmax = std::min(o.max_hdeg, 5);
  for (int n = 1; n <= fmax; ++n) {
    for (const auto& g : level_generators(n - 1)) {
      BarElement lhs = bar_differential(comparison_f(n, g));
      BarElement rhs = comparison_f_elem(n - 1, differential_gen(g));
      ck.add_bool("f chain map on " + g.str() + " (bar degree " +
                      std::to_string(n) + ")",
                  lhs == rhs);
    }
    bool g_ok = true;
    for (const auto& mids : g_domain_tuples(n)) {
      BarElement e(n);
      e.add(kOne, mids, kOne, 1);
      BimoduleElement lhs = differential(n - 1, comparison_g_tuple(mids));
      if (!(lhs == comparison_g(bar_differential(e)))) g_ok = false;
    }
    ck.add_bool("g chain map on domain tuples, bar degree " + std::to_string(n),
                g_ok);
    std::cerr << "[verify-resolution] chain maps at bar degree " << n << "\n";
  }
  for (int n = 0; n <= o.max_hdeg + 1; ++n)
    for (const auto& g : level_generators(n - 1))
      ck.add_bool("g.f = id on " + g.str(),
                  comparison_g(comparison_f(n, g)) == gen_elem(g));
  return ck.document("verify-resolution",
                     Json{{"max_hdeg", o.max_hdeg}, {"jobs", o.jobs}});
}

// --- cohomology --------------------------------------------------------------

// Default window of the truncated A-coefficient oracle per cohomological
// degree, sized to the cost budget (measured); an explicit --oracle-max-weight
// requests the full rectangle and may trip the resource guard.
int oracle_a_floor(const Options& o, int n) {
  if (o.oracle_weight_explicit || n <= 1) return -o.oracle_weight;
  int cap = n == 2 ? 4 : 0;
  return std::max(-cap, -o.oracle_weight);
}

int oracle_a_ceiling(const Options& o, int n) {
  if (o.oracle_weight_explicit || n <= 2) return o.oracle_weight;
  return std::min(6, o.oracle_weight);
}

Json run_cohomology(const Options& o) {
  Checks ck;
  if (o.coeff == "k") {
    std::vector<int> expected_dims, computed_dims;
    for (int q = 0; q <= o.max_hdeg; ++q) {
      int total = 0;
      for (int w = -o.max_weight; w <= o.max_weight; ++w) {
        CellDims cd = cohomology_cell_k(q, w);
        int expect = 0;
        if (q == 0 && w == 0) expect = 1;
        if (q == 1 && w == -1) expect = 2;
        if (q >= 2 && (w == -q || w == -q - 1)) expect = 1;
        ck.add("Ext_A(k,k) cell " + cell_label(q, w), expect, cd.h);
        total += cd.h;
      }
      expected_dims.push_back(q == 0 ? 1 : 2);
      computed_dims.push_back(total);
      std::cerr << "[cohomology] k-coefficients degree " << q << "\n";
    }
    ck.add("Ext_A(k,k) dimension series", dims_str(expected_dims),
           dims_str(computed_dims));
    for (int n = 0; n <= o.oracle_hdeg; ++n)
      for (int w = -o.oracle_weight; w <= o.oracle_weight; ++w)
        ck.add("bar oracle " + cell_label(n, w),
               cohomology_cell_k(n, w).h, bar_dim_cohomology_k(n, w));
    return ck.document("cohomology", Json{{"coeff", "k"},
                                          {"max_hdeg", o.max_hdeg},
                                          {"max_weight", o.max_weight},
                                          {"oracle_hdeg", o.oracle_hdeg},
                                          {"oracle_weight", o.oracle_weight},
                                          {"jobs", o.jobs}});
  }

  std::map<std::pair<int, int>, int> h;
  for (int N = 0; N <= o.max_hdeg; ++N) {
    for (int w = -o.max_weight; w <= o.max_weight; ++w) {
      CellDims cd = cohomology_cell(N, w);
      h[{N, w}] = cd.h;
      ck.add("dim HH^* cell " + cell_label(N, w), expected_h_dim(N, w), cd.h);
      auto named = named_classes_in_cell(N, w);
      ck.add("named basis size " + cell_label(N, w),
             static_cast<long>(expected_h_dim(N, w)),
             static_cast<long>(named.size()));
      bool reduce_ok = true;
      for (const auto& nc : named) {
        std::map<std::string, Rat> expect{{nc.name, Rat(1)}};
        if (reduce_to_basis(nc.rep) != expect) reduce_ok = false;
      }
      if (!named.empty())
        ck.add_bool("named classes reduce to unit coordinates " +
                        cell_label(N, w),
                    reduce_ok);
    }
    std::cerr << "[cohomology] degree " << N << " done\n";
  }
  for (int N = 2; N + 2 <= o.max_hdeg; ++N)
    for (int w = -o.max_weight + 2; w <= o.max_weight; ++w)
      ck.add("periodicity " + cell_label(N, w) + " vs " + cell_label(N + 2, w - 2),
             h[{N, w}], h[{N + 2, w - 2}]);
  for (BasisLemma which :
       {BasisLemma::ImDelta3, BasisLemma::ImPartial3, BasisLemma::KerDelta3})
    for (const auto& bc : verify_kernel_image_bases(which, o.max_weight))
      ck.add_bool(basis_lemma_name(which) + " [" + bc.part +
                      "] weight " + std::to_string(bc.weight),
                  bc.ok());
  std::cerr << "[cohomology] column bases done\n";
  for (int n = 0; n <= o.oracle_hdeg; ++n)
    for (int w = oracle_a_floor(o, n); w <= oracle_a_ceiling(o, n); ++w) {
      ck.add("bar oracle " + cell_label(n, w), cohomology_cell(n, w).h,
             bar_dim_cohomology_A(n, w));
      std::cerr << "[cohomology] oracle " << n << "," << w << "\n";
    }
  return ck.document("cohomology", Json{{"coeff", "A"},
                                        {"max_hdeg", o.max_hdeg},
                                        {"max_weight", o.max_weight},
                                        {"oracle_hdeg", o.oracle_hdeg},
                                        {"oracle_weight", o.oracle_weight},
                                        {"jobs", o.jobs}});
}

// --- homology ----------------------------------------------------------------

Json run_homology(const Options& o) {
  Checks ck;
  for (int N = 0; N <= o.max_hdeg; ++N) {
    for (int w = 0; w <= o.max_weight; ++w) {
      CellDims cd = homology_cell(N, w);
      ck.add("dim HH_* cell " + cell_label(N, w), expected_hh_dim(N, w), cd.h);
      auto named = named_cycles_in_cell(N, w);
      ck.add("named cycle count " + cell_label(N, w),
             static_cast<long>(expected_hh_dim(N, w)),
             static_cast<long>(named.size()));
      if (named.empty()) continue;
      if (N >= 1) {
        bool cycles = true;
        for (const auto& nc : named)
          if (!chain_differential(nc.rep).is_zero()) cycles = false;
        ck.add_bool("named chains are cycles " + cell_label(N, w), cycles);
      }
      // Independence modulo boundaries: stack boundary columns and the named
      // cycle coordinates as rows, then compare ranks.
      QMatrix bnd = chain_differential_matrix(N + 1, w);
      std::size_t cell_dim = chain_cell_basis(N, w).size();
      QMatrix span(0, cell_dim);
      for (std::size_t c = 0; c < bnd.cols(); ++c) {
        std::vector<Rat> row(cell_dim);
        for (std::size_t r = 0; r < cell_dim; ++r) row[r] = bnd.at(r, c);
        span.append_row(row);
      }
      std::size_t boundary_rank = span.rank();
      for (const auto& nc : named) span.append_row(chain_coordinates(nc.rep, w));
      ck.add("cycles independent modulo boundaries " + cell_label(N, w),
             static_cast<long>(boundary_rank + named.size()),
             static_cast<long>(span.rank()));
    }
    std::cerr << "[homology] degree " << N << " done\n";
  }
  for (const auto& bc : verify_kernel_image_bases(BasisLemma::Images4, o.max_weight))
    ck.add_bool(basis_lemma_name(BasisLemma::Images4) + " [" + bc.part +
                    "] weight " + std::to_string(bc.weight),
                bc.ok());
  for (int n = 0; n <= o.oracle_hdeg; ++n)
    for (int w = 0; w <= o.oracle_weight; ++w) {
      ck.add("bar oracle " + cell_label(n, w), homology_cell(n, w).h,
             bar_dim_homology_A(n, w));
      std::cerr << "[homology] oracle " << n << "," << w << "\n";
    }
  return ck.document("homology", Json{{"max_hdeg", o.max_hdeg},
                                      {"max_weight", o.max_weight},
                                      {"oracle_hdeg", o.oracle_hdeg},
                                      {"oracle_weight", o.oracle_weight},
                                      {"jobs", o.jobs}});
}

// --- cup-table ---------------------------------------------------------------

struct NamedCochain {
  std::string family;
  int n = 0;
  Cochain rep;
};

std::string cls_t_name(int n, int p) {
  return "t(" + std::to_string(n) + "," + std::to_string(2 * p) + ")";
}
std::string cls_u_name(int n, int p) {
  return "u(" + std::to_string(n) + "," + std::to_string(2 * p) + ")";
}
std::string cls_v_name(int n, int p) {
  return "v(" + std::to_string(n) + "," + std::to_string(2 * p + 1) + ")";
}
std::string cls_w_name(int n, int p) {
  return "w(" + std::to_string(n) + "," + std::to_string(2 * p + 1) + ")";
}

Json run_cup_table(const Options& o) {
  Checks ck;
  int mi = o.max_index, pq = o.max_pq;
  auto expect_zero = std::map<std::string, Rat>{};
  auto entry = [&ck](const std::string& a, const std::string& b,
                     const Cochain& ca, const Cochain& cb,
                     const std::map<std::string, Rat>& expected) {
    std::map<std::string, Rat> pruned;
    for (const auto& [k, c] : expected)
      if (c != 0) pruned.emplace(k, c);
    ck.add(a + " cup " + b, coords_str(pruned),
           coords_str(reduce_to_basis(cup(ca, cb))));
  };

  std::vector<NamedCochain> all;
  all.push_back({"c", 0, cls_c()});
  for (int n = 0; n <= mi; ++n) all.push_back({"s" + std::to_string(n), n, cls_s(n)});
  for (int p = 1; p <= pq; ++p)
    for (int n = 0; n <= mi; ++n) {
      all.push_back({cls_t_name(n, p), n, cls_t(n, p)});
      all.push_back({cls_u_name(n, p), n, cls_u(n, p)});
      all.push_back({cls_v_name(n, p), n, cls_v(n, p)});
      all.push_back({cls_w_name(n, p), n, cls_w(n, p)});
    }
  // c annihilates every named class in both orders.
  for (const auto& nc : all) {
    entry("c", nc.family, cls_c(), nc.rep, expect_zero);
    if (nc.family != "c") entry(nc.family, "c", nc.rep, cls_c(), expect_zero);
  }
  std::cerr << "[cup-table] c row done\n";
  for (int m = 0; m <= mi; ++m)
    for (int n = 0; n <= mi; ++n) {
      entry("s" + std::to_string(m), "s" + std::to_string(n), cls_s(m), cls_s(n),
            {{cls_t_name(m + n + 1, 1), Rat(4 * (n - m))}});
      for (int p = 1; p <= pq; ++p) {
        entry(cls_t_name(m, p), "s" + std::to_string(n), cls_t(m, p), cls_s(n),
              expect_zero);
        entry("s" + std::to_string(n), cls_t_name(m, p), cls_s(n), cls_t(m, p),
              expect_zero);
        entry(cls_u_name(m, p), "s" + std::to_string(n), cls_u(m, p), cls_s(n),
              {{cls_w_name(n + m, p), Rat(2 * n + 1)},
               {cls_v_name(n + m + 1, p), Rat(2)}});
        entry("s" + std::to_string(m), cls_u_name(n, p), cls_s(m), cls_u(n, p),
              {{cls_v_name(n + m + 1, p), Rat(2)},
               {cls_w_name(n + m, p), Rat(2 * m + 1)}});
        entry(cls_v_name(m, p), "s" + std::to_string(n), cls_v(m, p), cls_s(n),
              {{cls_t_name(n + m, p + 1), Rat(2 * n + 1)}});
        entry("s" + std::to_string(m), cls_v_name(n, p), cls_s(m), cls_v(n, p),
              {{cls_t_name(n + m, p + 1), Rat(-(2 * m + 1))}});
        entry(cls_w_name(m, p), "s" + std::to_string(n), cls_w(m, p), cls_s(n),
              {{cls_t_name(n + m + 1, p + 1), Rat(-2)}});
        entry("s" + std::to_string(m), cls_w_name(n, p), cls_s(m), cls_w(n, p),
              {{cls_t_name(n + m + 1, p + 1), Rat(2)}});
      }
    }
  std::cerr << "[cup-table] s rows done\n";
  for (int m = 0; m <= mi; ++m)
    for (int n = 0; n <= mi; ++n)
      for (int p = 1; p <= pq; ++p)
        for (int q = 1; q <= pq; ++q) {
          entry(cls_t_name(m, p), cls_t_name(n, q), cls_t(m, p), cls_t(n, q),
                expect_zero);
          entry(cls_u_name(m, p), cls_t_name(n, q), cls_u(m, p), cls_t(n, q),
                {{cls_t_name(m + n, p + q), Rat(1)}});
          entry(cls_t_name(n, q), cls_u_name(m, p), cls_t(n, q), cls_u(m, p),
                {{cls_t_name(m + n, p + q), Rat(1)}});
          entry(cls_t_name(m, p), cls_v_name(n, q), cls_t(m, p), cls_v(n, q),
                expect_zero);
          entry(cls_v_name(n, q), cls_t_name(m, p), cls_v(n, q), cls_t(m, p),
                expect_zero);
          entry(cls_t_name(m, p), cls_w_name(n, q), cls_t(m, p), cls_w(n, q),
                expect_zero);
          entry(cls_w_name(n, q), cls_t_name(m, p), cls_w(n, q), cls_t(m, p),
                expect_zero);
          entry(cls_u_name(m, p), cls_u_name(n, q), cls_u(m, p), cls_u(n, q),
                {{cls_u_name(m + n, p + q), Rat(1)}});
          entry(cls_u_name(m, p), cls_v_name(n, q), cls_u(m, p), cls_v(n, q),
                {{cls_v_name(m + n, p + q), Rat(1)}});
          entry(cls_v_name(n, q), cls_u_name(m, p), cls_v(n, q), cls_u(m, p),
                {{cls_v_name(m + n, p + q), Rat(1)}});
          entry(cls_u_name(m, p), cls_w_name(n, q), cls_u(m, p), cls_w(n, q),
                {{cls_w_name(m + n, p + q), Rat(1)}});
          entry(cls_w_name(n, q), cls_u_name(m, p), cls_w(n, q), cls_u(m, p),
                {{cls_w_name(m + n, p + q), Rat(1)}});
          entry(cls_v_name(m, p), cls_v_name(n, q), cls_v(m, p), cls_v(n, q),
                expect_zero);
          entry(cls_w_name(m, p), cls_w_name(n, q), cls_w(m, p), cls_w(n, q),
                expect_zero);
          entry(cls_v_name(m, p), cls_w_name(n, q), cls_v(m, p), cls_w(n, q),
                {{cls_t_name(m + n, p + q + 1), Rat(1)}});
          entry(cls_w_name(n, q), cls_v_name(m, p), cls_w(n, q), cls_v(m, p),
                {{cls_t_name(m + n, p + q + 1), Rat(-1)}});
          std::cerr << "[cup-table] block m=" << m << " n=" << n << " p=" << p
                    << " q=" << q << "\n";
        }
  // Periodicity: cupping with u(0,2) is a bijection cell-by-cell from
  // degree 2 up (degree 1 contains c, which u(0,2) annihilates).
  Cochain u02 = cls_u(0, 1);
  for (int N = 2; N <= 2 * pq; ++N)
    for (int w = -o.max_weight + 2; w <= o.max_weight; ++w) {
      auto src = named_classes_in_cell(N, w);
      auto dst = named_classes_in_cell(N + 2, w - 2);
      if (src.empty() && dst.empty()) continue;
      bool bijective = src.size() == dst.size();
      if (bijective) {
        QMatrix mat(0, dst.size());
        for (const auto& nc : src) {
          auto coords = reduce_to_basis(cup(nc.rep, u02));
          std::vector<Rat> row(dst.size(), Rat(0));
          for (std::size_t j = 0; j < dst.size(); ++j) {
            auto it = coords.find(dst[j].name);
            if (it != coords.end()) row[j] = it->second;
          }
          mat.append_row(row);
        }
        bijective = mat.rank() == dst.size();
      }
      ck.add_bool("cup with u(0,2) bijective " + cell_label(N, w) + " -> " +
                      cell_label(N + 2, w - 2),
                  bijective);
    }
  return ck.document("cup-table", Json{{"max_index", mi},
                                       {"max_pq", pq},
                                       {"max_weight", o.max_weight},
                                       {"jobs", o.jobs}});
}

// --- virasoro ----------------------------------------------------------------

Json run_virasoro(const Options& o) {
  Checks ck;
  for (int n = 0; n <= o.max_m; ++n)
    ck.add("[c, s" + std::to_string(n) + "]", "0",
           coords_str(reduce_to_basis(bracket_h1(cls_c(), cls_s(n)))));
  bool corrupted = false;
  for (int m = 0; m <= o.max_m; ++m)
    for (int n = m; n <= o.max_m; ++n) {
      Rat coeff = 2 * (n - m);
      if (o.corrupt_fixture && !corrupted && m == 1 && n == 2) {
        coeff += 1;
        corrupted = true;
      }
      std::map<std::string, Rat> expect;
      if (coeff != 0) expect.emplace("s" + std::to_string(m + n), coeff);
      ck.add("[s" + std::to_string(m) + ", s" + std::to_string(n) + "]",
             coords_str(expect),
             coords_str(reduce_to_basis(bracket_h1(cls_s(m), cls_s(n)))));
      std::cerr << "[virasoro] bracket " << m << "," << n << "\n";
    }
  // Composition fixtures in degree one.
  int fix_max = std::min(o.max_m, 4);
  for (int n = 1; n <= fix_max; ++n) {
    Cochain lhs = bracket_h1(cls_c(), cls_s(n));
    Cochain rhs;
    rhs.hdeg = 1;
    for (int l = 0; l <= n - 1; ++l) {
      Rat zc = falling_ratio(n, l) / (n - l);
      rhs = rhs - zc * fam_zeta(n - l - 1, l);
      Rat xc = 2 * falling_ratio(n + 1, l) / ((n - l + 1) * (n - l));
      rhs = rhs + xc * fam_xi(n - l - 1, l);
    }
    rhs = rhs + Rat(2 * (n + 1)) * fam_rho(n);
    ck.add_bool(
        "[c, s" + std::to_string(n) + "] matches its coboundary resolution",
        lhs == rhs);
  }
  // Transport to the Witt relations.
  for (int m = 0; m <= o.max_m; ++m)
    for (int n = m; n <= o.max_m; ++n) {
      VirasoroElement lhs = vir_bracket(transport_s(m), transport_s(n));
      VirasoroElement rhs = transport_s(m + n, Rat(2 * (n - m)));
      ck.add("Virasoro transport [s" + std::to_string(m) + ", s" +
                 std::to_string(n) + "]",
             rhs.str(), lhs.str());
    }
  for (int n = 0; n <= o.max_m; ++n)
    ck.add("Virasoro transport [c, s" + std::to_string(n) + "]",
           VirasoroElement{}.str(),
           vir_bracket(transport_c(), transport_s(n)).str());
  return ck.document("virasoro", Json{{"max_m", o.max_m},
                                      {"corrupt_fixture", o.corrupt_fixture},
                                      {"jobs", o.jobs}});
}

// --- brackets ----------------------------------------------------------------

Json run_brackets(const Options& o) {
  Checks ck;
  int mm = std::min(o.max_m, 2), ni = o.max_index, pp = o.max_pq;
  int max_level = 2 * pp + 1;

  std::map<int, Lifting> lifts;
  lifts.emplace(0, make_euler_lifting(max_level));
  for (int m = 1; m <= mm; ++m) lifts.emplace(m, Lifting(cls_s(m)));
  Lifting lift_c = make_c_lifting(max_level);

  auto bracket = [&lifts](int m, const Cochain& psi) {
    return bracket_with_lifting(lifts.at(m), psi);
  };
  auto coeff_t = [](int m, int n, int p) {
    return Rat(2 * (n - (2 * p - 1) * m - p));
  };

  for (int p = 1; p <= pp; ++p)
    for (int n = 0; n <= ni; ++n) {
      ck.add("[c, " + cls_t_name(n, p) + "]", "0",
             coords_str(reduce_to_basis(bracket_with_lifting(lift_c, cls_t(n, p)))));
      ck.add("[c, " + cls_u_name(n, p) + "]", "0",
             coords_str(reduce_to_basis(bracket_with_lifting(lift_c, cls_u(n, p)))));
      for (int m = 0; m <= mm; ++m) {
        std::map<std::string, Rat> expect_t;
        if (coeff_t(m, n, p) != 0)
          expect_t.emplace(cls_t_name(n + m, p), coeff_t(m, n, p));
        ck.add("[s" + std::to_string(m) + ", " + cls_t_name(n, p) + "]",
               coords_str(expect_t),
               coords_str(reduce_to_basis(bracket(m, cls_t(n, p)))));
        std::map<std::string, Rat> expect_u;
        Rat uc = 2 * (n - 2 * p * m - p);
        Rat tc = 2 * p * m * (2 * m + 1);
        if (uc != 0) expect_u.emplace(cls_u_name(n + m, p), uc);
        if (tc != 0) expect_u.emplace(cls_t_name(n + m, p), tc);
        ck.add("[s" + std::to_string(m) + ", " + cls_u_name(n, p) + "]",
               coords_str(expect_u),
               coords_str(reduce_to_basis(bracket(m, cls_u(n, p)))));
        std::cerr << "[brackets] even families m=" << m << " n=" << n
                  << " p=" << p << "\n";
      }
    }

  // Jacobi extension to m = 3, 4 on the even families: brackets of cocycle
  // representatives agree with the class-level bracket up to coboundary, so
  // nested applications reduce to the right coordinates.
  auto jacobi3 = [&bracket](const Cochain& phi) {
    Cochain a = bracket(1, bracket(2, phi));
    Cochain b = bracket(2, bracket(1, phi));
    return Rat(1, 2) * (a - b);
  };
  auto jacobi4 = [&bracket, &jacobi3](const Cochain& phi) {
    Cochain a = bracket(1, jacobi3(phi));
    Cochain b = jacobi3(bracket(1, phi));
    return Rat(1, 4) * (a - b);
  };
  for (int p = 1; p <= pp; ++p)
    for (int n = 0; n <= std::min(ni, 2); ++n)
      for (int m : {3, 4}) {
        Cochain t = cls_t(n, p), u = cls_u(n, p);
        std::map<std::string, Rat> et, eu;
        if (coeff_t(m, n, p) != 0) et.emplace(cls_t_name(n + m, p), coeff_t(m, n, p));
        Rat uc = 2 * (n - 2 * p * m - p), tc = 2 * p * m * (2 * m + 1);
        if (uc != 0) eu.emplace(cls_u_name(n + m, p), uc);
        if (tc != 0) eu.emplace(cls_t_name(n + m, p), tc);
        Cochain bt = m == 3 ? jacobi3(t) : jacobi4(t);
        Cochain bu = m == 3 ? jacobi3(u) : jacobi4(u);
        ck.add("[s" + std::to_string(m) + ", " + cls_t_name(n, p) + "] via Jacobi",
               coords_str(et), coords_str(reduce_to_basis(bt)));
        ck.add("[s" + std::to_string(m) + ", " + cls_u_name(n, p) + "] via Jacobi",
               coords_str(eu), coords_str(reduce_to_basis(bu)));
        std::cerr << "[brackets] Jacobi m=" << m << " n=" << n << " p=" << p
                  << "\n";
      }

  // Odd families: support constraints are asserted; the linear eigenvalue
  // fits are computed and reported without pinning the coefficients.
  auto support_in = [](const std::map<std::string, Rat>& red,
                       const std::vector<std::string>& allowed) {
    for (const auto& [name, c] : red) {
      if (c == 0) continue;
      bool found = false;
      for (const auto& a : allowed)
        if (name == a) found = true;
      if (!found) return false;
    }
    return true;
  };
  for (int p = 1; p <= pp; ++p) {
    std::vector<std::tuple<int, int, Rat>> w_samples, v_samples;
    for (int n = 0; n <= ni; ++n)
      for (int m = 0; m <= mm; ++m) {
        auto wred = reduce_to_basis(bracket(m, cls_w(n, p)));
        auto vred = reduce_to_basis(bracket(m, cls_v(n, p)));
        ck.add_bool("[s" + std::to_string(m) + ", " + cls_w_name(n, p) +
                        "] stays in the w-ideal",
                    support_in(wred, {cls_w_name(n + m, p)}));
        ck.add_bool("[s" + std::to_string(m) + ", " + cls_v_name(n, p) +
                        "] lands on v(" + std::to_string(n + m) + ") and w(" +
                        std::to_string(n + m - 1) + ")",
                    support_in(vred, {cls_v_name(n + m, p),
                                      cls_w_name(n + m - 1, p)}));
        auto it = wred.find(cls_w_name(n + m, p));
        w_samples.emplace_back(m, n, it == wred.end() ? Rat(0) : it->second / 2);
        auto iv = vred.find(cls_v_name(n + m, p));
        v_samples.emplace_back(m, n, iv == vred.end() ? Rat(0) : iv->second / 2);
        std::cerr << "[brackets] odd families m=" << m << " n=" << n
                  << " p=" << p << "\n";
      }
    SeriesFit wfit = fit_series(w_samples);
    SeriesFit vfit = fit_series(v_samples);
    std::string deg = std::to_string(2 * p + 1);
    ck.add("w-family eigenvalue fit at degree " + deg + ": (a,b)=(" +
               rat_str(wfit.a) + "," + rat_str(wfit.b) + ")",
           "consistent", wfit.consistent ? "consistent" : "inconsistent");
    ck.add("v-family eigenvalue fit at degree " + deg + ": (a,b)=(" +
               rat_str(vfit.a) + "," + rat_str(vfit.b) + ")",
           "consistent", vfit.consistent ? "consistent" : "inconsistent");
  }
  // Even-family fits re-derived from the asserted coordinates double as a
  // readable summary: lambda = n + a*m + b with (a,b) = (-(2p-1), -p).
  for (int p = 1; p <= pp; ++p) {
    std::vector<std::tuple<int, int, Rat>> t_samples;
    for (int n = 0; n <= ni; ++n)
      for (int m = 0; m <= mm; ++m) {
        auto red = reduce_to_basis(bracket(m, cls_t(n, p)));
        auto it = red.find(cls_t_name(n + m, p));
        t_samples.emplace_back(m, n, it == red.end() ? Rat(0) : it->second / 2);
      }
    SeriesFit tfit = fit_series(t_samples);
    std::string expect = "(" + rat_str(Rat(-(2 * p - 1))) + "," +
                         rat_str(Rat(-p)) + ")";
    ck.add("t-family eigenvalue fit at degree " + std::to_string(2 * p), expect,
           tfit.consistent
               ? "(" + rat_str(tfit.a) + "," + rat_str(tfit.b) + ")"
               : "inconsistent");
  }

  // Leibniz for the bracket against cup with u(0,2).
  Cochain u02 = cls_u(0, 1);
  for (int m = 0; m <= mm; ++m)
    for (const Cochain& phi : {cls_t(1, 1), cls_v(1, 1)}) {
      auto lhs = reduce_to_basis(bracket(m, cup(u02, phi)));
      Cochain rhs_a = cup(bracket(m, u02), phi);
      Cochain rhs_b = cup(u02, bracket(m, phi));
      auto rhs = reduce_to_basis(rhs_a + rhs_b);
      ck.add("Leibniz [s" + std::to_string(m) + ", u(0,2) cup phi]",
             coords_str(rhs), coords_str(lhs));
    }
  return ck.document("brackets", Json{{"max_m", mm},
                                      {"max_index", ni},
                                      {"max_pq", pp},
                                      {"jobs", o.jobs}});
}

// --- yoneda ------------------------------------------------------------------

std::string kc_str(const KCochain& c) { return c.str(); }

Json run_yoneda(const Options& o) {
  Checks ck;
  int top = std::max(10, o.max_hdeg);
  for (int level = 0; level <= top; ++level)
    ck.add_bool("k-differential vanishes at level " + std::to_string(level),
                differential_is_radical(level));
  std::vector<int> expect_hilb{1};
  for (int q = 1; q <= 20; ++q) expect_hilb.push_back(2);
  ck.add("Ext_A(k,k) Hilbert series to degree 20", dims_str(expect_hilb),
         dims_str(yoneda_hilbert(20)));
  std::cerr << "[yoneda] hilbert done\n";
  for (int p = 1; p + 1 <= top; ++p)
    for (int q = 1; p + q <= top; ++q) {
      ck.add("eta^" + std::to_string(p) + " cup eta^" + std::to_string(q),
             kc_str(k_eta(p + q)), kc_str(cup_k(k_eta(p), k_eta(q))));
      ck.add("omega^" + std::to_string(p) + " cup omega^" + std::to_string(q),
             kc_str(KCochain{p + q, 0, 0}), kc_str(cup_k(k_omega(p), k_omega(q))));
      KCochain zero{p + q, 0, 0};
      if (p == 1) {
        ck.add("omega^1 cup eta^" + std::to_string(q), kc_str(zero),
               kc_str(cup_k(k_omega(1), k_eta(q))));
        ck.add("eta^" + std::to_string(q) + " cup omega^1", kc_str(zero),
               kc_str(cup_k(k_eta(q), k_omega(1))));
        if (q >= 2) {
          ck.add("eta^1 cup omega^" + std::to_string(q),
                 kc_str(Rat(-1) * k_omega(q + 1)),
                 kc_str(cup_k(k_eta(1), k_omega(q))));
          ck.add("omega^" + std::to_string(q) + " cup eta^1",
                 kc_str(k_omega(q + 1)), kc_str(cup_k(k_omega(q), k_eta(1))));
        }
      }
      if (p >= 2) {
        Rat sign = q % 2 == 0 ? 1 : -1;
        ck.add("omega^" + std::to_string(p) + " cup eta^" + std::to_string(q),
               kc_str(k_omega(p + q)), kc_str(cup_k(k_omega(p), k_eta(q))));
        ck.add("eta^" + std::to_string(q) + " cup omega^" + std::to_string(p),
               kc_str(sign * k_omega(p + q)), kc_str(cup_k(k_eta(q), k_omega(p))));
      }
    }
  std::cerr << "[yoneda] products done\n";
  ck.add_bool("eta^1 and omega^2 anticommute (algebra is not graded-commutative)",
              cup_k(k_eta(1), k_omega(2)) ==
                  Rat(-1) * cup_k(k_omega(2), k_eta(1)));
  KTwoReport k2 = yoneda_k2_report(10);
  ck.add_bool("presentation relations hold", k2.relations_hold);
  ck.add_bool("generated by eta^1, omega^1, omega^2", k2.generated_in_low_degrees);
  ck.add_bool("Yoneda algebra of A is K2", k2.k2);
  return ck.document("yoneda", Json{{"max_hdeg", top}, {"jobs", o.jobs}});
}

// --- bosonization ------------------------------------------------------------

Json run_bosonization(const Options& o) {
  Checks ck;
  int top = std::max(6, o.max_hdeg);
  QMatrix q1 = yoneda_action_matrix(1);
  QMatrix printed(2, 2);
  printed.at(0, 0) = -1;
  printed.at(0, 1) = 0;
  printed.at(1, 0) = -1;
  printed.at(1, 1) = -1;
  QMatrix transposed(2, 2);
  transposed.at(0, 0) = -1;
  transposed.at(0, 1) = -1;
  transposed.at(1, 0) = 0;
  transposed.at(1, 1) = -1;
  ck.add_bool("action block q=1 matches the stated table up to transpose",
              q1 == printed || q1 == transposed);
  ck.add("action block q=1", matrix_str(printed), matrix_str(q1));
  for (int q = 2; q <= 12; ++q) {
    QMatrix expect(2, 2);
    expect.at(0, 0) = q % 2 == 0 ? 1 : -1;
    expect.at(1, 1) = q % 2 == 0 ? -1 : 1;
    ck.add("action block q=" + std::to_string(q), matrix_str(expect),
           matrix_str(yoneda_action_matrix(q)));
  }
  std::cerr << "[bosonization] action blocks done\n";
  auto page = e2_page(top);
  for (const auto& cell : page) {
    int dim = 0;
    std::string basis;
    if (cell.p == 0 && cell.q == 0) dim = 1, basis = "e";
    if (cell.p == 1 && cell.q == 0) dim = 1, basis = "ebar";
    if (cell.q >= 2 && cell.q % 2 == 0) {
      dim = 1;
      basis = (cell.p == 0 ? "eta^" : "etabar^") + std::to_string(cell.q);
    }
    if (cell.q >= 3 && cell.q % 2 == 1) {
      dim = 1;
      basis = (cell.p == 0 ? "omega^" : "omegabar^") + std::to_string(cell.q);
    }
    ck.add("E2 cell (p=" + std::to_string(cell.p) + ", q=" + std::to_string(cell.q) +
               ")",
           std::to_string(dim) + (basis.empty() ? "" : " <" + basis + ">"),
           std::to_string(cell.dim) +
               (cell.basis.empty() ? "" : " <" + cell.basis + ">"));
  }
  ck.add("dim Ext^1 over the bosonization", 1, smash_ext1_dimension());
  ck.add_bool("d2 differential vanishes", smash_d2_vanishes());
  for (const auto& pc : smash_product_checks(top)) ck.add_bool(pc.label, pc.ok);
  std::vector<int> expect_hilb;
  for (int n = 0; n <= 12; ++n) expect_hilb.push_back(n < 3 ? 1 : 2);
  ck.add("Hilbert series of the bosonization Yoneda algebra to degree 12",
         dims_str(expect_hilb), dims_str(smash_hilbert(12)));
  SmashK2Report k2 = smash_k2_report();
  ck.add_bool("bosonization Yoneda algebra is not K2", !k2.k2);
  ck.add("K2 failure witness", "omega^3", k2.witness);
  return ck.document("bosonization", Json{{"max_hdeg", top}, {"jobs", o.jobs}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homological verification suite for the super Jordan plane"};
  Options o;
  std::string task;
  app.add_option("task", task, "one of: verify-rewriting, verify-resolution, "
                               "cohomology, homology, cup-table, virasoro, "
                               "brackets, yoneda, bosonization")
      ->required()
      ->check(CLI::IsMember({"verify-rewriting", "verify-resolution", "cohomology",
                             "homology", "cup-table", "virasoro", "brackets",
                             "yoneda", "bosonization"}));
  app.add_option("--max-hdeg", o.max_hdeg, "homological degree bound")
      ->envname("SJP_MAX_HDEG");
  app.add_option("--max-weight", o.max_weight, "weight window |w| bound")
      ->envname("SJP_MAX_WEIGHT");
  app.add_option("--max-index", o.max_index, "family index bound for m, n");
  app.add_option("--max-pq", o.max_pq, "family index bound for p, q");
  app.add_option("--max-m", o.max_m, "Virasoro index bound");
  auto* ow = app.add_option("--oracle-max-weight", o.oracle_weight,
                            "bar-resolution oracle weight window");
  app.add_option("--oracle-max-hdeg", o.oracle_hdeg,
                 "bar-resolution oracle degree bound");
  app.add_option("--coeff", o.coeff, "coefficients for (co)homology tasks")
      ->check(CLI::IsMember({"A", "k"}));
  app.add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "md", "markdown"}));
  app.add_option("--jobs", o.jobs,
                 "worker count (accepted for compatibility; execution is "
                 "single-threaded)");
  app.add_flag("--corrupt-fixture", o.corrupt_fixture)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  o.oracle_weight_explicit = ow->count() > 0;

  try {
    Json doc;
    if (task == "verify-rewriting") doc = run_verify_rewriting(o);
    else if (task == "verify-resolution") doc = run_verify_resolution(o);
    else if (task == "cohomology") doc = run_cohomology(o);
    else if (task == "homology") doc = run_homology(o);
    else if (task == "cup-table") doc = run_cup_table(o);
    else if (task == "virasoro") doc = run_virasoro(o);
    else if (task == "brackets") doc = run_brackets(o);
    else if (task == "yoneda") doc = run_yoneda(o);
    else doc = run_bosonization(o);
    ReportFormat fmt = o.format == "json" ? ReportFormat::Json : ReportFormat::Markdown;
    std::cout << render_report(doc, fmt);
    return doc["summary"]["failed"].get<int>() == 0 ? 0 : 1;
  } catch (const ResourceGuard& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  }
}
