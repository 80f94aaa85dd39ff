#pragma once

#include <numeric>
#include <random>

#include "coxtrace/cells.hpp"
#include "coxtrace/hecke.hpp"
#include "coxtrace/tables.hpp"

namespace coxtrace {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace verify_detail {

inline void add(std::vector<SuiteCheck>& out, const std::string& name, bool pass,
                const std::string& detail = "") {
  out.push_back(SuiteCheck{name, pass, detail});
}

inline std::vector<CoxeterDatum> classical_range(unsigned max_rank) {
  std::vector<CoxeterDatum> data;
  for (unsigned r = 1; r <= std::min(max_rank, 10u); ++r)
    data.push_back(CoxeterDatum::make(Family::A, r));
  for (unsigned n = 2; n <= std::min(max_rank, 8u); ++n)
    data.push_back(CoxeterDatum::make(Family::B, n));
  for (unsigned n = 4; n <= std::min(max_rank, 8u); ++n)
    data.push_back(CoxeterDatum::make(Family::D, n));
  return data;
}

// integer determinant, cofactor expansion (oracle-sized matrices only)
inline long long int_det(const std::vector<std::vector<long long>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor[r - 1][cc++] = m[r][c];
    }
    det += (j % 2 == 0 ? 1 : -1) * m[0][j] * int_det(minor);
  }
  return det;
}

inline long long wedge_trace(const std::vector<std::vector<long long>>& m, unsigned i) {
  std::size_t n = m.size();
  std::vector<unsigned> subset;
  long long total = 0;
  std::function<void(unsigned)> rec = [&](unsigned start) {
    if (subset.size() == i) {
      std::vector<std::vector<long long>> sub(i, std::vector<long long>(i));
      for (unsigned r = 0; r < i; ++r)
        for (unsigned c = 0; c < i; ++c) sub[r][c] = m[subset[r]][subset[c]];
      total += int_det(sub);
      return;
    }
    for (unsigned k = start; k < n; ++k) {
      subset.push_back(k);
      rec(k + 1);
      subset.pop_back();
    }
  };
  rec(0);
  return total;
}

inline std::vector<std::vector<SignedPermutation>> conjugacy_classes(const CoxeterDatum& d) {
  auto group = enumerate_group(d);
  auto gens = generators(d);
  std::map<SignedPermutation, int> assigned;
  std::vector<std::vector<SignedPermutation>> classes;
  for (const auto& x : group) {
    if (assigned.count(x)) continue;
    std::vector<SignedPermutation> orbit{x};
    assigned[x] = static_cast<int>(classes.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : gens) {
        auto y = g * orbit[k] * g.inverse();
        if (!assigned.count(y)) {
          assigned[y] = static_cast<int>(classes.size());
          orbit.push_back(y);
        }
      }
    classes.push_back(std::move(orbit));
  }
  return classes;
}

}  // namespace verify_detail

// Trace-set laws for the computed families: every trace in {-1, 0, 1}, the
// nonzero count and the squared sum both equal h, and the two alternating
// ladders carry the signs.
inline std::vector<SuiteCheck> verify_trace_laws(unsigned max_rank) {
  using verify_detail::add;
  std::vector<SuiteCheck> out;
  for (const auto& d : verify_detail::classical_range(max_rank)) {
    auto rep = trace_report(d);
    unsigned h = d.coxeter_number();
    bool macdonald = true;
    for (const auto& e : rep.entries) macdonald = macdonald && std::abs(e.trace) <= 1;
    add(out, d.name() + " traces lie in {-1,0,1}", macdonald);
    add(out, d.name() + " nonzero count = h", rep.nonzero_count() == h,
        std::to_string(rep.nonzero_count()) + " vs " + std::to_string(h));
    add(out, d.name() + " sum of squares = h", rep.sum_of_squares() == h);
    if (d.family == Family::A) {
      unsigned n = d.rank + 1;
      bool hooks = true;
      for (unsigned i = 0; i < n; ++i)
        hooks = hooks &&
                mn_character(Partition::hook(n, i), {n}) == (i % 2 == 0 ? 1 : -1);
      add(out, d.name() + " hook ladder signs", hooks);
    }
  }
  return out;
}

// The two fixed rank-4/5 decompositions, symbol for symbol.
inline std::vector<SuiteCheck> verify_golden_cells() {
  using verify_detail::add;
  std::vector<SuiteCheck> out;
  struct Expect {
    int index;
    std::string gamma;
    long long p;
    std::vector<std::pair<std::string, int>> eps;
  };
  auto check = [&](const CoxeterDatum& d, const std::vector<Expect>& want) {
    auto got = cell_decomposition(d);
    bool ok = got.cells.size() == want.size();
    for (std::size_t k = 0; ok && k < want.size(); ++k) {
      const auto& g = got.cells[k];
      const auto& w = want[k];
      ok = g.index_twice == 2 * w.index && g.gamma == w.gamma && g.p && *g.p == w.p &&
           g.epsilon.size() == w.eps.size();
      for (std::size_t t = 0; ok && t < w.eps.size(); ++t)
        ok = g.epsilon[t].label == w.eps[t].first && g.epsilon[t].sign == w.eps[t].second;
    }
    add(out, d.name() + " golden cell table", ok);
  };
  check(CoxeterDatum::make(Family::B, 4),
        {{0, "S1", 1, {{"4/", 1}}},
         {1, "S2", -1, {{"0,1/4", -1}, {"1,4/0", -1}}},
         {2, "S2", 1, {{"0,1,2/1,4", 1}, {"1,2,4/0,1", 1}}},
         {3, "S2", -1, {{"0,1,2,3/1,2,4", -1}, {"1,2,3,4/0,1,2", -1}}},
         {4, "S1", 1, {{"0,1,2,3,4/1,2,3,4", 1}}}});
  check(CoxeterDatum::make(Family::D, 5),
        {{0, "S1", 1, {{"5/0", 1}}},
         {1, "S1", -1, {{"4/1", -1}}},
         {2, "S2", 0, {{"1,4/0,2", 1}, {"2,4/0,1", -1}}},
         {3, "S2", 0, {{"1,2,4/0,1,3", -1}, {"1,3,4/0,1,2", 1}}},
         {4, "S1", 1, {{"1,2,3,4/0,1,2,4", 1}}},
         {5, "S1", -1, {{"1,2,3,4,5/0,1,2,3,4", -1}}}});
  return out;
}

// Family structure of the computed types: gamma sequences, nonzero counts
// per cell, the p_i case patterns, and the special-membership case table.
inline std::vector<SuiteCheck> verify_cell_laws(unsigned max_rank) {
  using verify_detail::add;
  std::vector<SuiteCheck> out;
  for (const auto& d : verify_detail::classical_range(max_rank)) {
    auto dec = cell_decomposition(d);
    auto expect_gamma = expected_gamma_sequence(d);
    bool gamma_ok = dec.cells.size() == expect_gamma.size();
    bool counts_ok = true, p_ok = true, special_ok = true;
    for (std::size_t i = 0; gamma_ok && i < dec.cells.size(); ++i) {
      const auto& c = dec.cells[i];
      gamma_ok = c.gamma == expect_gamma[i];
      unsigned expect_count = c.gamma == "S1" ? 1 : 2;
      counts_ok = counts_ok && c.epsilon.size() == expect_count;
      long long expect_p;
      if (c.gamma == "S1") expect_p = i % 2 == 0 ? 1 : -1;
      else expect_p = d.simply_laced() ? 0 : (i % 2 == 0 ? 1 : -1);
      p_ok = p_ok && c.p && *c.p == expect_p;
      auto sm = special_membership(d, static_cast<unsigned>(i));
      bool expect_special_in, expect_lambda_in;
      if (c.gamma == "S1") expect_special_in = expect_lambda_in = true;
      else if (d.simply_laced()) expect_special_in = true, expect_lambda_in = false;
      else expect_special_in = expect_lambda_in = false;
      special_ok = special_ok && sm.special_in_x == expect_special_in &&
                   sm.lambda_in_x == expect_lambda_in;
    }
    add(out, d.name() + " gamma sequence", gamma_ok);
    add(out, d.name() + " cell counts (1 or 2 on the ladder, 0 elsewhere)", counts_ok);
    add(out, d.name() + " p_i case pattern", p_ok);
    add(out, d.name() + " special membership case pattern", special_ok);
  }
  return out;
}

// The Coxeter class is independent of the generator order: twenty shuffles
// per type land in the pinned signed cycle type with the pinned order h.
inline std::vector<SuiteCheck> verify_order_independence(unsigned max_rank,
                                                         unsigned long seed) {
  using verify_detail::add;
  std::vector<SuiteCheck> out;
  std::mt19937_64 rng(seed);
  for (const auto& d : verify_detail::classical_range(std::min(max_rank, 6u))) {
    auto pinned = coxeter_element(d).cycle_type();
    std::vector<unsigned> order(d.rank);
    std::iota(order.begin(), order.end(), 1);
    bool ok = true;
    for (int iter = 0; iter < 20; ++iter) {
      std::shuffle(order.begin(), order.end(), rng);
      auto w = coxeter_element(d, order);
      ok = ok && w.cycle_type() == pinned && w.order() == d.coxeter_number();
    }
    add(out, d.name() + " order-independence over 20 shuffles", ok);
  }
  return out;
}

// Stored exceptional data: the per-type identity suites plus the implied
// Hecke exponents.
inline std::vector<SuiteCheck> verify_stored_tables() {
  using verify_detail::add;
  std::vector<SuiteCheck> out;
  for (auto f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2}) {
    auto report = verify_exceptional(f);
    for (const auto& line : report.lines)
      add(out, report.table + ": " + line.clause, line.pass, line.detail);
    bool prop33_ok = true;
    for (const auto& line : prop33_cross_check(f))
      prop33_ok = prop33_ok && line.m >= 0 && (line.index_twice % 2 == 0) == (line.m % 2 == 0);
    add(out, family_name(f) + ": implied Hecke exponents 2r-2i", prop33_ok);
  }
  for (auto f : {Family::H3, Family::H4}) {
    auto report = verify_h_type(f);
    for (const auto& line : report.lines)
      add(out, report.table + ": " + line.clause, line.pass, line.detail);
  }
  return out;
}

// Dihedral closed forms: orthogonality, the vanishing 2_{p/2} coefficient,
// and the crystallographic coincidences at m = 3, 4, 6.
inline std::vector<SuiteCheck> verify_dihedral_suite(unsigned max_m) {
  using verify_detail::add;
  std::vector<SuiteCheck> out;
  bool orth = true, vanish = true, counts = true;
  for (unsigned m = 3; m <= max_m; ++m) {
    orth = orth && dihedral_orthogonality_holds(m);
    auto labels = dihedral_labels(m);
    counts = counts && labels.size() == (m % 2 == 0 ? (m + 6) / 2 : (m + 3) / 2);
    if (m % 2 == 0 && (m / 2) % 2 == 0) {
      DihedralLabel l{DihedralLabel::Kind::two_dim, m / 4};
      vanish = vanish && dihedral_coxeter_trace(m, l).is_zero();
    }
  }
  add(out, "I2(m) orthogonality for 3 <= m <= " + std::to_string(max_m), orth);
  add(out, "I2(m) label inventories", counts);
  add(out, "I2(2p) vanishing 2_{p/2} coefficient for even p", vanish);

  {
    // m = 3 against A2
    auto dec = dihedral_cell_decomposition(3);
    bool ok = dec.cells[1].terms.size() == 1 &&
              dec.cells[1].terms[0].coefficient == Cyclotomic(Rational(-1));
    ok = ok && mn_character(Partition(std::vector<unsigned>{2, 1}), {3}) == -1;
    add(out, "I2(3) coincides with the A2 engine", ok);
  }
  {
    // m = 4 against B2
    auto dec = dihedral_cell_decomposition(4);
    SignedCycleType cox;
    cox.negative = {2};
    bool ok = dec.cells[1].terms.size() == 2;
    for (const auto& t : dec.cells[1].terms)
      ok = ok && t.coefficient == Cyclotomic(Rational(-1));
    Bipartition e1{Partition(std::vector<unsigned>{1, 1}), Partition()};
    Bipartition chi{Partition(), Partition(std::vector<unsigned>{2})};
    ok = ok && hyperoctahedral_character(e1, cox) == -1 &&
         hyperoctahedral_character(chi, cox) == -1;
    add(out, "I2(4) coincides with the B2 engine", ok);
  }
  {
    // m = 6 against the stored G2 table: support size and orthogonality
    auto dec = dihedral_cell_decomposition(6);
    auto t = load_table(Family::G2);
    bool ok = dec.cells[1].terms.size() == t.cells[1].terms.size() &&
              dihedral_orthogonality_holds(6);
    unsigned stored = 0;
    for (const auto& cell : t.cells) stored += cell.terms.size();
    ok = ok && stored == 6;
    add(out, "I2(6) against the stored G2 table (support and orthogonality)", ok);
  }
  return out;
}

// Hecke laws for the symmetric-group models and the dihedral models.
inline std::vector<SuiteCheck> verify_hecke_suite(unsigned max_n, unsigned long seed) {
  using verify_detail::add;
  std::vector<SuiteCheck> out;
  std::mt19937_64 rng(seed);
  for (unsigned n = 2; n <= std::min(max_n, 6u); ++n) {
    unsigned r = n - 1;
    auto d = CoxeterDatum::make(Family::A, r);
    auto bw = balanced_coxeter_word(d);
    long nu = static_cast<long>(d.positive_roots());
    bool monomial_ok = true, special_ok = true, exponent_ok = true, power_ok = true;
    for (const auto& lam : partitions_of(n)) {
      auto model = seminormal_model(n, lam);
      auto rec = hecke_coxeter_trace(model, bw.word);
      long long ordinary = mn_character(lam, {n});
      special_ok = special_ok && rec.trace_at_one == ordinary;
      if (ordinary == 0) {
        monomial_ok = monomial_ok && rec.trace_poly.is_zero();
      } else {
        monomial_ok = monomial_ok && rec.m_exponent.has_value();
        unsigned i = n - lam.part(0);
        long a = a_value_a(lam), a_dual = a_value_a(lam.conjugate());
        exponent_ok = exponent_ok && rec.m_exponent &&
                      *rec.m_exponent == 2L * r - 2L * i &&
                      *rec.m_exponent == 2 * (nu - a + a_dual) / static_cast<long>(n);
      }
      power_ok = power_ok && power_identity_check(model, d);
    }
    add(out, "A" + std::to_string(r) + " Hecke monomial law", monomial_ok);
    add(out, "A" + std::to_string(r) + " Hecke specialization at v=1", special_ok);
    add(out, "A" + std::to_string(r) + " Hecke exponents (both routes)", exponent_ok);
    add(out, "A" + std::to_string(r) + " power identity T_w^h = T_w0^2", power_ok);
  }
  if (max_n >= 5) {
    // word independence: ten distinct Coxeter words on S_5
    std::vector<unsigned> order(4);
    std::iota(order.begin(), order.end(), 1);
    std::vector<std::vector<unsigned>> words{order};
    while (words.size() < 10) {
      std::shuffle(order.begin(), order.end(), rng);
      if (std::find(words.begin(), words.end(), order) == words.end()) words.push_back(order);
    }
    bool ok = true;
    for (const auto& lam : partitions_of(5)) {
      auto model = seminormal_model(5, lam);
      auto first = hecke_coxeter_trace(model, words[0]).trace_poly;
      for (std::size_t k = 1; k < words.size(); ++k)
        ok = ok && hecke_coxeter_trace(model, words[k]).trace_poly == first;
    }
    add(out, "A4 Hecke word independence over 10 words", ok);
  }
  {
    bool monomial_ok = true, power_ok = true;
    for (unsigned m = 3; m <= 12; ++m) {
      for (const auto& label : dihedral_labels(m)) {
        auto model = dihedral_hecke_model(m, label);
        auto rec = dihedral_hecke_trace(model);
        monomial_ok = monomial_ok &&
                      rec.trace_poly.evaluate_at_one() == dihedral_coxeter_trace(m, label);
        power_ok = power_ok && dihedral_power_identity_check(model);
      }
    }
    add(out, "I2(m) Hecke monomial law, m <= 12", monomial_ok);
    add(out, "I2(m) power identity, m <= 12", power_ok);
  }
  return out;
}

// The brute-force oracles: wedge-power matrices (rank <= 5), centralizer
// orders (rank <= 6), and full character tables against enumerated classes
// (n <= 4).
inline std::vector<SuiteCheck> verify_matrix_oracles() {
  using verify_detail::add;
  std::vector<SuiteCheck> out;

  {
    bool ok = true;
    for (auto fam : {Family::B, Family::D}) {
      for (unsigned n = fam == Family::B ? 2u : 4u; n <= 5; ++n) {
        auto d = CoxeterDatum::make(fam, n);
        auto w = coxeter_element(d);
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
        for (unsigned i = 1; i <= n; ++i) {
          int y = w.image(i);
          m[std::abs(y) - 1][i - 1] = y > 0 ? 1 : -1;
        }
        auto type = w.cycle_type();
        for (unsigned i = 0; i <= n; ++i) {
          long long lhs = verify_detail::wedge_trace(m, i);
          long long rhs;
          Partition pa = i < n ? Partition(std::vector<unsigned>{n - i}) : Partition();
          Partition pb = i > 0 ? Partition(std::vector<unsigned>(i, 1)) : Partition();
          if (fam == Family::B) {
            rhs = hyperoctahedral_character(Bipartition{pa, pb}, type);
          } else {
            Rational v = d_character(make_d_label(pa, pb), DClass{type, 0});
            rhs = to_long(v);
          }
          ok = ok && lhs == rhs;
        }
      }
    }
    for (unsigned r = 1; r <= 4; ++r) {
      unsigned n = r + 1;
      auto d = CoxeterDatum::make(Family::A, r);
      auto w = coxeter_element(d);
      std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
      for (unsigned i = 1; i <= n; ++i) m[w.image(i) - 1][i - 1] = 1;
      auto type = w.cycle_type().positive;
      long long prev = 1;
      for (unsigned i = 0; i <= r; ++i) {
        long long full = verify_detail::wedge_trace(m, i);
        long long refl = i == 0 ? 1 : full - prev;
        ok = ok && refl == mn_character(Partition::hook(n, i), type);
        prev = refl;
      }
    }
    add(out, "wedge-power matrix oracle agrees with the character engines", ok);
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& d : verify_detail::classical_range(6)) {
      if (d.rank > 6) continue;
      auto got = centralizer_order(d, coxeter_element(d));
      if (got != d.coxeter_number()) {
        ok = false;
        detail += d.name() + ": " + std::to_string(got) + "; ";
      }
    }
    add(out, "centralizer of the Coxeter element has order h (rank <= 6)", ok, detail);
  }

  {
    bool ok = true;
    for (unsigned n = 2; n <= 4; ++n) {
      auto d = CoxeterDatum::make(Family::B, n);
      auto classes = verify_detail::conjugacy_classes(d);
      auto labels = bipartitions_of(n);
      unsigned long order = 1;
      for (unsigned k = 2; k <= n; ++k) order *= k;
      order <<= n;
      for (std::size_t i = 0; ok && i < labels.size(); ++i) {
        for (std::size_t j = i; j < labels.size(); ++j) {
          long long inner = 0;
          for (const auto& cls : classes)
            inner += static_cast<long long>(cls.size()) *
                     hyperoctahedral_character(labels[i], cls.front().cycle_type()) *
                     hyperoctahedral_character(labels[j], cls.front().cycle_type());
          ok = ok && inner == (i == j ? static_cast<long long>(order) : 0);
        }
      }
    }
    add(out, "row orthogonality against enumerated classes (B_n, n <= 4)", ok);
  }

  return out;
}

inline std::vector<SuiteCheck> verify_all(unsigned max_rank, unsigned long seed) {
  std::vector<SuiteCheck> out;
  auto absorb = [&](std::vector<SuiteCheck> part) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  };
  absorb(verify_trace_laws(max_rank));
  absorb(verify_golden_cells());
  absorb(verify_cell_laws(max_rank));
  absorb(verify_order_independence(max_rank, seed));
  absorb(verify_stored_tables());
  absorb(verify_dihedral_suite(24));
  absorb(verify_hecke_suite(6, seed));
  absorb(verify_matrix_oracles());
  return out;
}

}  // namespace coxtrace
