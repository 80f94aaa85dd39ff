#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "coxtrace/cells.hpp"
#include "coxtrace/characters.hpp"
#include "coxtrace/partition.hpp"
#include "coxtrace/symbol.hpp"

using namespace coxtrace;

namespace {

Partition pt(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

// --- symmetric-power oracle --------------------------------------------------
// b(lambda) as the smallest k with <Sym^k(reflection), chi_lambda> > 0,
// computed by character inner products over the full class list.

struct SymOracleA {
  unsigned n;
  std::vector<Partition> classes;
  std::vector<Int> class_sizes;

  explicit SymOracleA(unsigned n_) : n(n_) {
    for (const auto& mu : partitions_of(n)) {
      classes.push_back(mu);
      class_sizes.push_back(class_size(mu));
    }
  }

  static Int class_size(const Partition& mu) {
    unsigned n = mu.total();
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    std::map<unsigned, unsigned> mult;
    for (unsigned p : mu.parts()) ++mult[p];
    Int z(1);
    for (auto [l, m] : mult) {
      for (unsigned i = 0; i < m; ++i) z *= l;
      Int mf;
      mpz_fac_ui(mf.get_mpz_t(), m);
      z *= mf;
    }
    return fact / z;
  }

  // power sums of reflection-representation eigenvalues: tr(g^j) = fix(g^j) - 1
  Rational power_sum(const Partition& mu, unsigned j) const {
    long fixed = 0;
    for (unsigned l : mu.parts())
      if (j % l == 0) fixed += l;
    return Rational(fixed - 1);
  }

  Rational sym_power_trace(const Partition& mu, unsigned k) const {
    std::vector<Rational> h(k + 1, Rational(0));
    h[0] = 1;
    for (unsigned d = 1; d <= k; ++d) {
      Rational acc(0);
      for (unsigned j = 1; j <= d; ++j) acc += power_sum(mu, j) * h[d - j];
      h[d] = acc / d;
    }
    return h[k];
  }

  long b_value(const Partition& lambda) const {
    Int order;
    mpz_fac_ui(order.get_mpz_t(), n);
    for (unsigned k = 0; k <= n * (n - 1) / 2 + 1; ++k) {
      Rational inner(0);
      for (std::size_t c = 0; c < classes.size(); ++c)
        inner += Rational(class_sizes[c]) * sym_power_trace(classes[c], k) *
                 Rational(static_cast<long>(mn_character(lambda, classes[c].parts())));
      inner /= Rational(order);
      REQUIRE(is_integer(inner));
      if (inner > 0) return static_cast<long>(k);
    }
    FAIL("symmetric-power oracle ran past the top degree");
    return -1;
  }
};

struct SymOracleB {
  unsigned n;
  std::vector<SignedCycleType> classes;
  std::vector<Int> class_sizes;

  explicit SymOracleB(unsigned n_) : n(n_) {
    for (unsigned k = 0; k <= n; ++k) {
      for (const auto& pos : partitions_of(n - k)) {
        for (const auto& neg : partitions_of(k)) {
          SignedCycleType t;
          t.positive = pos.parts();
          t.negative = neg.parts();
          classes.push_back(t);
          class_sizes.push_back(class_size(t));
        }
      }
    }
  }

  Int group_order() const {
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    Int two_n(1);
    for (unsigned i = 0; i < n; ++i) two_n *= 2;
    return fact * two_n;
  }

  Int class_size(const SignedCycleType& t) const {
    std::map<unsigned, unsigned> mp, mn;
    for (unsigned l : t.positive) ++mp[l];
    for (unsigned l : t.negative) ++mn[l];
    Int z(1);
    auto accumulate = [&z](const std::map<unsigned, unsigned>& m) {
      for (auto [l, mult] : m) {
        for (unsigned i = 0; i < mult; ++i) z *= 2 * l;
        Int mf;
        mpz_fac_ui(mf.get_mpz_t(), mult);
        z *= mf;
      }
    };
    accumulate(mp);
    accumulate(mn);
    return group_order() / z;
  }

  // tr(g^j) on the n-dimensional signed-permutation representation
  Rational power_sum(const SignedCycleType& t, unsigned j) const {
    long tr = 0;
    for (unsigned l : t.positive)
      if (j % l == 0) tr += l;
    for (unsigned l : t.negative)
      if (j % l == 0) tr += (j / l) % 2 == 0 ? l : -static_cast<long>(l);
    return Rational(tr);
  }

  Rational sym_power_trace(const SignedCycleType& t, unsigned k) const {
    std::vector<Rational> h(k + 1, Rational(0));
    h[0] = 1;
    for (unsigned d = 1; d <= k; ++d) {
      Rational acc(0);
      for (unsigned j = 1; j <= d; ++j) acc += power_sum(t, j) * h[d - j];
      h[d] = acc / d;
    }
    return h[k];
  }

  long b_value(const Bipartition& bp) const {
    for (unsigned k = 0; k <= n * n + 1; ++k) {
      Rational inner(0);
      for (std::size_t c = 0; c < classes.size(); ++c)
        inner += Rational(class_sizes[c]) * sym_power_trace(classes[c], k) *
                 Rational(static_cast<long>(hyperoctahedral_character(bp, classes[c])));
      inner /= Rational(group_order());
      REQUIRE(is_integer(inner));
      if (inner > 0) return static_cast<long>(k);
    }
    FAIL("symmetric-power oracle ran past the top degree");
    return -1;
  }
};

}  // namespace

TEST_CASE("hook partitions") {
  SECTION("n = 3") {
    auto hooks = hook_partitions(3);
    REQUIRE(hooks == std::vector<Partition>{pt({3}), pt({2, 1}), pt({1, 1, 1})});
  }
  SECTION("n = 1") { REQUIRE(hook_partitions(1) == std::vector<Partition>{pt({1})}); }
  SECTION("n = 0 is an error") { REQUIRE_THROWS_AS(hook_partitions(0), invalid_input); }
  SECTION("n = 5 matches enumeration filtered to hooks") {
    auto hooks = hook_partitions(5);
    REQUIRE(hooks.size() == 5);
    for (unsigned i = 0; i < 5; ++i) REQUIRE(hooks[i].part(0) == 5 - i);
    std::vector<Partition> filtered;
    for (const auto& lam : partitions_of(5))
      if (lam.rows() <= 1 || lam.parts()[1] <= 1) filtered.push_back(lam);
    REQUIRE(filtered.size() == hooks.size());
    for (const auto& h : hooks)
      REQUIRE(std::find(filtered.begin(), filtered.end(), h) != filtered.end());
  }
}

TEST_CASE("symbols reproduce the displayed parametrizations") {
  SECTION("type B: E~_i ladder (top row 1..i,n over 0..i-1)") {
    unsigned n = 4;
    for (unsigned i = 0; i < n; ++i) {
      Bipartition bp{Partition::hook(n, i), Partition()};
      Symbol s = symbol_of_b(bp);
      std::vector<unsigned> top, bottom;
      for (unsigned k = 1; k <= i; ++k) top.push_back(k);
      top.push_back(n);
      for (unsigned k = 0; k < i; ++k) bottom.push_back(k);
      REQUIRE(s.top == top);
      REQUIRE(s.bottom == bottom);
    }
  }
  SECTION("type B: E~_i (x) chi ladder (top row 0..i+1 over 1..i,n)") {
    unsigned n = 4;
    for (unsigned i = 0; i < n; ++i) {
      Bipartition bp{Partition(), Partition::hook(n, i)};
      Symbol s = symbol_of_b(bp);
      std::vector<unsigned> top, bottom;
      for (unsigned k = 0; k <= i + 1; ++k) top.push_back(k);
      for (unsigned k = 1; k <= i; ++k) bottom.push_back(k);
      bottom.push_back(n);
      REQUIRE(s.top == top);
      REQUIRE(s.bottom == bottom);
    }
  }
  SECTION("type B wedge ladder Lambda^i (top 0..i-1,n over 1..i)") {
    unsigned n = 4;
    for (unsigned i = 1; i < n; ++i) {
      Bipartition bp{Partition(std::vector<unsigned>{n - i}),
                     Partition(std::vector<unsigned>(i, 1))};
      Symbol s = symbol_of_b(bp);
      std::vector<unsigned> top, bottom;
      for (unsigned k = 0; k < i; ++k) top.push_back(k);
      top.push_back(n);
      for (unsigned k = 1; k <= i; ++k) bottom.push_back(k);
      REQUIRE(s.top == top);
      REQUIRE(s.bottom == bottom);
    }
  }
  SECTION("type B trivial degenerates to a single-entry top row") {
    Symbol s = symbol_of_b(Bipartition{pt({4}), Partition()});
    REQUIRE(s.str() == "4/");
  }
  SECTION("type D: Lambda^0 and Lambda^j") {
    unsigned n = 5;
    REQUIRE(make_d_label(pt({5}), Partition()).str() == "5/0");
    for (unsigned j = 1; j <= n; ++j) {
      Partition pa = j < n ? pt({n - j}) : Partition();
      Symbol s = symbol_of_d(make_d_label(pa, Partition(std::vector<unsigned>(j, 1))));
      std::vector<unsigned> row1, row2;
      for (unsigned k = 1; k <= j; ++k) row1.push_back(k);
      for (unsigned k = 0; k + 2 <= j; ++k) row2.push_back(k);
      row2.push_back(n - 1);
      if (row1 < row2) std::swap(row1, row2);  // rows are unordered in type D
      REQUIRE(s.top == row1);
      REQUIRE(s.bottom == row2);
    }
  }
  SECTION("type D: M_i and 'M_i rows") {
    unsigned n = 5;
    for (unsigned i = 0; i + 2 <= n; ++i) {
      // M_i = {(n-1-i, 1^i), (1)}
      std::vector<unsigned> parts{n - 1 - i};
      parts.insert(parts.end(), i, 1);
      Symbol s = symbol_of_d(make_d_label(pt(parts), pt({1})));
      std::vector<unsigned> top, bottom;
      for (unsigned k = 1; k <= i; ++k) top.push_back(k);
      top.push_back(n - 1);
      for (unsigned k = 0; k < i; ++k) bottom.push_back(k);
      bottom.push_back(i + 1);
      REQUIRE(s.top == top);
      REQUIRE(s.bottom == bottom);
    }
    for (unsigned i = 1; i + 3 <= n; ++i) {
      // 'M_i = {(n-i-1, 2, 1^{i-1}), -}
      std::vector<unsigned> parts{n - i - 1, 2};
      parts.insert(parts.end(), i - 1, 1);
      Symbol s = symbol_of_d(make_d_label(pt(parts), Partition()));
      std::vector<unsigned> top, bottom;
      for (unsigned k = 1; k < i; ++k) top.push_back(k);
      top.push_back(i + 1);
      top.push_back(n - 1);
      for (unsigned k = 0; k <= i; ++k) bottom.push_back(k);
      REQUIRE(s.top == top);
      REQUIRE(s.bottom == bottom);
    }
  }
}

TEST_CASE("symbol normalization") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned> len(1, 4), gap(0, 2);
  auto random_symbol = [&](bool defect_one) {
    Symbol s;
    unsigned lt = len(rng);
    unsigned lb = defect_one ? lt - 1 : lt;
    unsigned cur = gap(rng);
    for (unsigned i = 0; i < lt; ++i) {
      s.top.push_back(cur);
      cur += 1 + gap(rng);
    }
    cur = gap(rng);
    for (unsigned i = 0; i < lb; ++i) {
      s.bottom.push_back(cur);
      cur += 1 + gap(rng);
    }
    return s;
  };
  for (int iter = 0; iter < 500; ++iter) {
    Symbol s = random_symbol(iter % 2 == 0);
    Symbol n1 = normalized(s);
    REQUIRE(normalized(n1) == n1);          // idempotent
    REQUIRE(normalized(shifted(s)) == n1);  // shift invariance
    REQUIRE(shifted(s).family_key().size() == s.family_key().size() + 2);
    if (!n1.top.empty() && !n1.bottom.empty())
      REQUIRE((n1.top.front() != 0 || n1.bottom.front() != 0));
    REQUIRE(a_value(s) == a_value(shifted(s)));
  }
}

TEST_CASE("a-values") {
  SECTION("trivial representation has a = 0") {
    for (unsigned n = 2; n <= 8; ++n) {
      REQUIRE(a_value(symbol_of_b(Bipartition{pt({n}), Partition()})) == 0);
      if (n >= 4) REQUIRE(a_value(symbol_of_d(make_d_label(pt({n}), Partition()))) == 0);
    }
    REQUIRE(a_value_a(pt({5})) == 0);
  }
  SECTION("sign representation has a = nu") {
    for (unsigned n = 2; n <= 8; ++n) {
      Bipartition sign_b{Partition(), Partition(std::vector<unsigned>(n, 1))};
      REQUIRE(a_value(symbol_of_b(sign_b)) == static_cast<long>(n * n));
      if (n >= 4) {
        auto sign_d = make_d_label(Partition(), Partition(std::vector<unsigned>(n, 1)));
        REQUIRE(a_value(symbol_of_d(sign_d)) == static_cast<long>(n * n - n));
      }
    }
    REQUIRE(a_value_a(Partition(std::vector<unsigned>(5, 1))) == 10);
  }
  SECTION("constant across each familyKey class (checked inside the engine)") {
    for (unsigned n = 2; n <= 8; ++n)
      REQUIRE_NOTHROW(classical_analysis(CoxeterDatum::make(Family::B, n)));
    for (unsigned n = 4; n <= 8; ++n)
      REQUIRE_NOTHROW(classical_analysis(CoxeterDatum::make(Family::D, n)));
  }
}

TEST_CASE("b-values against the symmetric-power oracle") {
  SECTION("type A, n <= 5") {
    for (unsigned n = 2; n <= 5; ++n) {
      SymOracleA oracle(n);
      for (const auto& lam : partitions_of(n))
        REQUIRE(b_value_a(lam) == oracle.b_value(lam));
    }
  }
  SECTION("frozen: sign of S_n") {
    for (unsigned n = 2; n <= 5; ++n)
      REQUIRE(b_value_a(Partition(std::vector<unsigned>(n, 1))) ==
              static_cast<long>(n * (n - 1) / 2));
  }
  SECTION("type B, n <= 4") {
    for (unsigned n = 2; n <= 4; ++n) {
      SymOracleB oracle(n);
      for (const auto& bp : bipartitions_of(n)) REQUIRE(b_value_b(bp) == oracle.b_value(bp));
    }
  }
  SECTION("wedge b-values are partial exponent sums") {
    for (unsigned n = 2; n <= 8; ++n) {
      auto d = CoxeterDatum::make(Family::B, n);
      auto exps = d.exponents();
      long acc = 0;
      for (unsigned i = 1; i <= n; ++i) {
        acc += exps[i - 1];
        Bipartition wedge{i < n ? Partition(std::vector<unsigned>{n - i}) : Partition(),
                          Partition(std::vector<unsigned>(i, 1))};
        REQUIRE(b_value_b(wedge) == acc);
      }
    }
    for (unsigned n = 4; n <= 8; ++n) {
      auto d = CoxeterDatum::make(Family::D, n);
      auto exps = d.exponents();
      long acc = 0;
      for (unsigned i = 1; i <= n; ++i) {
        acc += exps[i - 1];
        Partition pa = i < n ? pt({n - i}) : Partition();
        REQUIRE(b_value_d(make_d_label(pa, Partition(std::vector<unsigned>(i, 1)))) == acc);
      }
    }
  }
}

TEST_CASE("f-values") {
  auto b4 = CoxeterDatum::make(Family::B, 4);
  SECTION("type A labels always give 1") {
    auto a3 = CoxeterDatum::make(Family::A, 3);
    for (const auto& lam : partitions_of(4)) REQUIRE(f_value(a3, lam.str()) == 1);
  }
  SECTION("two-term B_n cells give 2") {
    Bipartition e1{pt({3, 1}), Partition()};
    REQUIRE(f_value(b4, symbol_of_b(e1).str()) == 2);
    Bipartition chi{Partition(), pt({4})};
    REQUIRE(f_value(b4, symbol_of_b(chi).str()) == 2);
  }
  SECTION("two-term D_n cells give 2") {
    auto d5 = CoxeterDatum::make(Family::D, 5);
    REQUIRE(f_value(d5, make_d_label(pt({3, 1}), pt({1})).str()) == 2);
  }
  SECTION("singleton families give 1") {
    REQUIRE(f_value(b4, symbol_of_b(Bipartition{pt({4}), Partition()}).str()) == 1);
  }
}

TEST_CASE("degenerate D symbols carry split tags") {
  auto labels = d_labels_of(4);
  unsigned split_count = 0;
  for (const auto& l : labels) split_count += l.is_split();
  REQUIRE(split_count == 4);  // {(2),(2)}+- and {(1,1),(1,1)}+-
  REQUIRE_THROWS_AS(make_d_label(pt({2}), pt({2})), invalid_input);
  REQUIRE_THROWS_AS(make_d_label(pt({3}), pt({1}), SplitTag::plus), invalid_input);
  REQUIRE(labels.size() == 13);  // |Irr(D_4)|
}
