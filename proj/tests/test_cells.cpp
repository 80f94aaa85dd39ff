#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxtrace/cells.hpp"

using namespace coxtrace;

namespace {

struct ExpectedCell {
  int index;
  std::string gamma;
  long long p;
  std::vector<std::pair<std::string, int>> epsilon;  // sorted by symbol text
};

void check_cells(const CellDecomposition& got, const std::vector<ExpectedCell>& want) {
  REQUIRE(got.cells.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    const auto& g = got.cells[k];
    const auto& w = want[k];
    INFO("cell " << w.index);
    REQUIRE(g.index_twice == 2 * w.index);
    REQUIRE(g.gamma == w.gamma);
    REQUIRE(g.p.has_value());
    REQUIRE(*g.p == w.p);
    REQUIRE(g.epsilon.size() == w.epsilon.size());
    for (std::size_t t = 0; t < w.epsilon.size(); ++t) {
      REQUIRE(g.epsilon[t].label == w.epsilon[t].first);
      REQUIRE(g.epsilon[t].sign == w.epsilon[t].second);
    }
  }
}

}  // namespace

TEST_CASE("B4 cell decomposition matches the displayed table") {
  auto cells = cell_decomposition(CoxeterDatum::make(Family::B, 4));
  std::vector<ExpectedCell> want = {
      {0, "S1", 1, {{"4/", 1}}},
      {1, "S2", -1, {{"0,1/4", -1}, {"1,4/0", -1}}},
      {2, "S2", 1, {{"0,1,2/1,4", 1}, {"1,2,4/0,1", 1}}},
      {3, "S2", -1, {{"0,1,2,3/1,2,4", -1}, {"1,2,3,4/0,1,2", -1}}},
      {4, "S1", 1, {{"0,1,2,3,4/1,2,3,4", 1}}},
  };
  check_cells(cells, want);

  SECTION("specials per cell") {
    REQUIRE(cells.cells[0].special == "4/");
    REQUIRE(cells.cells[1].special == "0,4/1");            // the wedge, outside X
    REQUIRE(cells.cells[2].special == "0,1,4/1,2");
    REQUIRE(cells.cells[3].special == "0,1,2,4/1,2,3");
    REQUIRE(cells.cells[4].special == "0,1,2,3,4/1,2,3,4");
  }
}

TEST_CASE("D5 cell decomposition matches the displayed table") {
  auto cells = cell_decomposition(CoxeterDatum::make(Family::D, 5));
  std::vector<ExpectedCell> want = {
      {0, "S1", 1, {{"5/0", 1}}},
      {1, "S1", -1, {{"4/1", -1}}},
      {2, "S2", 0, {{"1,4/0,2", 1}, {"2,4/0,1", -1}}},
      {3, "S2", 0, {{"1,2,4/0,1,3", -1}, {"1,3,4/0,1,2", 1}}},
      {4, "S1", 1, {{"1,2,3,4/0,1,2,4", 1}}},
      {5, "S1", -1, {{"1,2,3,4,5/0,1,2,3,4", -1}}},
  };
  check_cells(cells, want);

  SECTION("the two-term cells carry the special inside X") {
    REQUIRE(cells.cells[2].special == "1,4/0,2");
    REQUIRE(cells.cells[3].special == "1,2,4/0,1,3");
  }
}

TEST_CASE("type A cells: all singletons, alternating signs") {
  for (unsigned r = 1; r <= 7; ++r) {
    unsigned n = r + 1;
    auto cells = cell_decomposition(CoxeterDatum::make(Family::A, r));
    REQUIRE(cells.cells.size() == n);
    for (unsigned i = 0; i <= r; ++i) {
      const auto& c = cells.cells[i];
      REQUIRE(c.index_twice == static_cast<int>(2 * i));
      REQUIRE(c.gamma == "S1");
      REQUIRE(c.epsilon.size() == 1);
      REQUIRE(c.epsilon[0].sign == (i % 2 == 0 ? 1 : -1));
      REQUIRE(c.epsilon[0].label == Partition::hook(n, i).str());
      REQUIRE(*c.p == (i % 2 == 0 ? 1 : -1));
      REQUIRE(c.special == c.epsilon[0].label);  // rho_i = Lambda^i in X
      REQUIRE(c.members.size() == 1);
    }
  }
}

TEST_CASE("trace reports: Macdonald, counts, orthogonality") {
  SECTION("type A, n <= 11") {
    for (unsigned r = 1; r <= 10; ++r) {
      auto rep = trace_report(CoxeterDatum::make(Family::A, r));
      unsigned h = r + 1;
      REQUIRE(rep.h == h);
      for (const auto& e : rep.entries) REQUIRE(std::abs(e.trace) <= 1);
      REQUIRE(rep.nonzero_count() == h);
      REQUIRE(rep.sum_of_squares() == h);
    }
  }
  SECTION("type B, n <= 8") {
    for (unsigned n = 2; n <= 8; ++n) {
      auto rep = trace_report(CoxeterDatum::make(Family::B, n));
      unsigned h = 2 * n;
      for (const auto& e : rep.entries) REQUIRE(std::abs(e.trace) <= 1);
      REQUIRE(rep.nonzero_count() == h);
      REQUIRE(rep.sum_of_squares() == h);
    }
  }
  SECTION("type D, 4 <= n <= 8") {
    for (unsigned n = 4; n <= 8; ++n) {
      auto rep = trace_report(CoxeterDatum::make(Family::D, n));
      unsigned h = 2 * n - 2;
      for (const auto& e : rep.entries) REQUIRE(std::abs(e.trace) <= 1);
      REQUIRE(rep.nonzero_count() == h);
      REQUIRE(rep.sum_of_squares() == h);
    }
  }
  SECTION("A1 has traces (1, -1)") {
    auto rep = trace_report(CoxeterDatum::make(Family::A, 1));
    REQUIRE(rep.entries.size() == 2);
    REQUIRE(rep.entries[0].trace + rep.entries[1].trace == 0);
    REQUIRE(rep.entries[0].trace * rep.entries[1].trace == -1);
  }
  SECTION("regular character vanishes at the Coxeter class") {
    // sum over Irr of dim(E) * tr(w, E) = 0; dimensions from tableau counts
    for (unsigned n = 2; n <= 6; ++n) {
      SignedCycleType cox;
      cox.negative = {n};
      Int total(0);
      for (const auto& bp : bipartitions_of(n)) {
        Int dim = binomial(n, bp.alpha.total()) * standard_tableau_count(bp.alpha) *
                  standard_tableau_count(bp.beta);
        total += dim * static_cast<long>(hyperoctahedral_character(bp, cox));
      }
      REQUIRE(total == 0);
    }
  }
}

TEST_CASE("ladder signs inside the reports") {
  SECTION("B_n: 2n nonzero entries in two alternating ladders") {
    for (unsigned n = 2; n <= 8; ++n) {
      auto d = CoxeterDatum::make(Family::B, n);
      auto cells = cell_decomposition(d);
      REQUIRE(cells.cells.size() == n + 1);
      for (unsigned i = 0; i <= n; ++i) {
        const auto& c = cells.cells[i];
        unsigned expected_terms = (i == 0 || i == n) ? 1 : 2;
        REQUIRE(c.epsilon.size() == expected_terms);
        for (const auto& term : c.epsilon)
          REQUIRE(term.sign == (i % 2 == 0 ? 1 : -1));  // epsilon_{c_i} = (-1)^i (...)
        REQUIRE(*c.p == (i % 2 == 0 ? 1 : -1));
      }
    }
  }
  SECTION("D_n: middle cells p = 0 with opposite signs") {
    for (unsigned n = 4; n <= 8; ++n) {
      auto cells = cell_decomposition(CoxeterDatum::make(Family::D, n));
      REQUIRE(cells.cells.size() == n + 1);
      for (unsigned i = 0; i <= n; ++i) {
        const auto& c = cells.cells[i];
        if (i >= 2 && i + 2 <= n) {
          REQUIRE(c.gamma == "S2");
          REQUIRE(c.epsilon.size() == 2);
          REQUIRE(c.epsilon[0].sign + c.epsilon[1].sign == 0);
          REQUIRE(*c.p == 0);
        } else {
          REQUIRE(c.gamma == "S1");
          REQUIRE(c.epsilon.size() == 1);
          REQUIRE(*c.p == (i % 2 == 0 ? 1 : -1));
        }
      }
    }
  }
}

TEST_CASE("gamma sequences match the catalogued patterns") {
  for (unsigned r = 1; r <= 8; ++r) {
    auto d = CoxeterDatum::make(Family::A, r);
    auto cells = cell_decomposition(d);
    auto expect = expected_gamma_sequence(d);
    REQUIRE(cells.cells.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) REQUIRE(cells.cells[i].gamma == expect[i]);
  }
  for (unsigned n = 2; n <= 8; ++n) {
    auto d = CoxeterDatum::make(Family::B, n);
    auto cells = cell_decomposition(d);
    auto expect = expected_gamma_sequence(d);
    for (std::size_t i = 0; i < expect.size(); ++i) REQUIRE(cells.cells[i].gamma == expect[i]);
  }
  for (unsigned n = 4; n <= 8; ++n) {
    auto d = CoxeterDatum::make(Family::D, n);
    auto cells = cell_decomposition(d);
    auto expect = expected_gamma_sequence(d);
    for (std::size_t i = 0; i < expect.size(); ++i) REQUIRE(cells.cells[i].gamma == expect[i]);
  }
}

TEST_CASE("special membership against the case table") {
  SECTION("S1 cells: rho_i = Lambda^i in X") {
    for (unsigned r = 1; r <= 6; ++r) {
      auto d = CoxeterDatum::make(Family::A, r);
      for (unsigned i = 0; i <= r; ++i) {
        auto sm = special_membership(d, i);
        REQUIRE(sm.special_in_x);
        REQUIRE(sm.lambda_in_x);
      }
    }
  }
  SECTION("S2 cells, type B: neither the special nor the wedge meets X") {
    for (unsigned n = 2; n <= 8; ++n) {
      auto d = CoxeterDatum::make(Family::B, n);
      for (unsigned i = 1; i < n; ++i) {
        auto sm = special_membership(d, i);
        REQUIRE_FALSE(sm.special_in_x);
        REQUIRE_FALSE(sm.lambda_in_x);
      }
      auto sm0 = special_membership(d, 0);
      REQUIRE(sm0.special_in_x);
      REQUIRE(sm0.lambda_in_x);
    }
  }
  SECTION("S2 cells, type D: the special is in X, the wedge is not") {
    for (unsigned n = 4; n <= 8; ++n) {
      auto d = CoxeterDatum::make(Family::D, n);
      for (unsigned i = 2; i + 2 <= n; ++i) {
        auto sm = special_membership(d, i);
        REQUIRE(sm.special_in_x);
        REQUIRE_FALSE(sm.lambda_in_x);
      }
    }
  }
  SECTION("unknown cells are rejected") {
    REQUIRE_THROWS_AS(special_membership(CoxeterDatum::make(Family::A, 2), 9), invalid_input);
  }
}

TEST_CASE("exponent law ties a-values to cell indices") {
  // nonzero trace at cell c_i forces 2(nu - a_E + a_{E!}) = h (2r - 2i)
  SECTION("type A") {
    for (unsigned r = 1; r <= 7; ++r) {
      unsigned n = r + 1;
      auto d = CoxeterDatum::make(Family::A, r);
      long nu = static_cast<long>(d.positive_roots());
      long h = static_cast<long>(d.coxeter_number());
      for (unsigned i = 0; i <= r; ++i) {
        Partition lam = Partition::hook(n, i);
        long a = a_value_a(lam);
        long a_dual = a_value_a(lam.conjugate());
        REQUIRE(2 * (nu - a + a_dual) == h * (2L * r - 2L * i));
      }
    }
  }
  SECTION("type B") {
    for (unsigned n = 2; n <= 8; ++n) {
      auto d = CoxeterDatum::make(Family::B, n);
      long nu = static_cast<long>(d.positive_roots());
      long h = static_cast<long>(d.coxeter_number());
      SignedCycleType cox;
      cox.negative = {n};
      for (const auto& bp : bipartitions_of(n)) {
        if (hyperoctahedral_character(bp, cox) == 0) continue;
        long a = a_value(symbol_of_b(bp));
        Bipartition dual{bp.beta.conjugate(), bp.alpha.conjugate()};
        long a_dual = a_value(symbol_of_b(dual));
        long two_m = 2 * (nu - a + a_dual) / h;
        REQUIRE(2 * (nu - a + a_dual) % h == 0);
        // identify the cell index from the symbol key
        auto key = symbol_of_b(bp).family_key();
        bool found = false;
        for (unsigned i = 0; i <= n; ++i) {
          Bipartition wedge{i < n ? Partition(std::vector<unsigned>{n - i}) : Partition(),
                            i > 0 ? Partition(std::vector<unsigned>(i, 1)) : Partition()};
          if (symbol_of_b(wedge).family_key() == key) {
            REQUIRE(two_m == 2L * n - 2L * i);
            found = true;
          }
        }
        REQUIRE(found);
      }
    }
  }
  SECTION("type D") {
    for (unsigned n = 4; n <= 8; ++n) {
      auto d = CoxeterDatum::make(Family::D, n);
      long nu = static_cast<long>(d.positive_roots());
      long h = static_cast<long>(d.coxeter_number());
      for (const auto& label : d_labels_of(n)) {
        if (d_coxeter_trace(n, label) == 0) continue;
        long a = a_value(symbol_of_d(label));
        auto dual = make_d_label(label.alpha.conjugate(), label.beta.conjugate());
        long a_dual = a_value(symbol_of_d(dual));
        REQUIRE(2 * (nu - a + a_dual) % h == 0);
        long two_m = 2 * (nu - a + a_dual) / h;
        auto key = symbol_of_d(label).family_key();
        bool found = false;
        for (unsigned i = 0; i <= n; ++i) {
          Partition pa = i < n ? Partition(std::vector<unsigned>{n - i}) : Partition();
          Partition pb = i > 0 ? Partition(std::vector<unsigned>(i, 1)) : Partition();
          if (symbol_of_d(make_d_label(pa, pb)).family_key() == key) {
            REQUIRE(two_m == 2L * n - 2L * i);
            found = true;
          }
        }
        REQUIRE(found);
      }
    }
  }
}

TEST_CASE("order independence: twenty random generator orders per type") {
  std::mt19937_64 rng(20240811);
  std::vector<CoxeterDatum> data;
  for (unsigned r = 1; r <= 6; ++r) data.push_back(CoxeterDatum::make(Family::A, r));
  for (unsigned n = 2; n <= 6; ++n) data.push_back(CoxeterDatum::make(Family::B, n));
  for (unsigned n = 4; n <= 6; ++n) data.push_back(CoxeterDatum::make(Family::D, n));
  for (const auto& d : data) {
    auto pinned = coxeter_element(d).cycle_type();
    std::vector<unsigned> order(d.rank);
    std::iota(order.begin(), order.end(), 1);
    for (int iter = 0; iter < 20; ++iter) {
      std::shuffle(order.begin(), order.end(), rng);
      // traces only depend on the signed cycle type, so agreeing types mean
      // agreeing reports
      REQUIRE(coxeter_element(d, order).cycle_type() == pinned);
    }
  }
}

TEST_CASE("m-exponents recorded in the report match 2r - 2i") {
  for (auto d : {CoxeterDatum::make(Family::B, 5), CoxeterDatum::make(Family::D, 6),
                 CoxeterDatum::make(Family::A, 4)}) {
    auto rep = trace_report(d);
    for (const auto& e : rep.entries) {
      if (e.trace == 0) continue;
      REQUIRE(e.cell_twice.has_value());
      REQUIRE(e.m_exponent.has_value());
      REQUIRE(*e.m_exponent == 2L * d.rank - *e.cell_twice);
    }
  }
}
