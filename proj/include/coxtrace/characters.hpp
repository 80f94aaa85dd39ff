#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "coxtrace/partition.hpp"
#include "coxtrace/signed_perm.hpp"
#include "coxtrace/symbol.hpp"

namespace coxtrace {

namespace detail {

struct StripRemoval {
  Partition shape;  // what remains
  int sign;         // (-1)^{height of the removed strip}
};

// All ways to remove a border strip of size l, via the beta-set trick:
// replace some beta value b by b - l (if absent), sign from the number of
// beta values jumped over.
inline std::vector<StripRemoval> border_strips(const Partition& lambda, unsigned l) {
  std::vector<StripRemoval> out;
  if (l == 0 || lambda.total() < l) return out;
  std::size_t rows = lambda.rows();
  std::vector<long> beta(rows);
  for (std::size_t i = 0; i < rows; ++i)
    beta[i] = static_cast<long>(lambda.parts()[i]) + static_cast<long>(rows - 1 - i);
  // beta is strictly decreasing
  for (std::size_t i = 0; i < rows; ++i) {
    long target = beta[i] - static_cast<long>(l);
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    unsigned jumped = 0;
    std::vector<long> nb = beta;
    nb[i] = target;
    for (std::size_t j = i + 1; j < rows; ++j)
      if (beta[j] > target) ++jumped;
    std::sort(nb.begin(), nb.end(), std::greater<long>());
    std::vector<unsigned> parts;
    for (std::size_t j = 0; j < rows; ++j) {
      long p = nb[j] - static_cast<long>(rows - 1 - j);
      if (p < 0) throw consistency_error("border_strips: bad beta set");
      if (p > 0) parts.push_back(static_cast<unsigned>(p));
    }
    // rows of size zero may appear interleaved; re-sort to partition form
    std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
    out.push_back(StripRemoval{Partition(parts), jumped % 2 == 0 ? 1 : -1});
  }
  return out;
}

}  // namespace detail

// Murnaghan-Nakayama: character of the S_n irreducible lambda at cycle type mu.
inline long long mn_character(const Partition& lambda, const std::vector<unsigned>& mu) {
  unsigned weight = 0;
  for (unsigned c : mu) weight += c;
  if (weight != lambda.total()) throw invalid_input("mn_character: |lambda| != |mu|");
  std::function<long long(const Partition&, std::size_t)> rec =
      [&](const Partition& shape, std::size_t k) -> long long {
    if (k == mu.size()) return shape.empty() ? 1 : 0;
    long long value = 0;
    for (const auto& removal : detail::border_strips(shape, mu[k]))
      value += removal.sign * rec(removal.shape, k + 1);
    return value;
  };
  return rec(lambda, 0);
}

// Character of S_n at an (n-1, 1) class; the ladder of §-shaped hooks with a
// double step.  Values are (-1)^i on the ladder and 0 elsewhere.
inline long long n_minus_one_cycle_trace(unsigned n, const Partition& lambda) {
  if (n < 3) throw invalid_input("n_minus_one_cycle_trace: n >= 3 required");
  if (lambda.total() != n) throw invalid_input("n_minus_one_cycle_trace: size mismatch");
  return mn_character(lambda, {n - 1, 1});
}

// Wreath-product Murnaghan-Nakayama for W_n = Z/2 wr S_n.  The label (alpha,
// beta) has alpha carrying the pullback of Irr(S_n): a positive cycle removes
// a strip from either coordinate; a negative cycle removes from either but
// picks up a factor -1 on the beta side.  With this convention
// (lambda, -) is the pullback E~ of lambda and (-, lambda) is E~ (x) chi.
inline long long hyperoctahedral_character(const Bipartition& bp, const SignedCycleType& cls) {
  if (bp.total() != cls.weight())
    throw invalid_input("hyperoctahedral_character: size mismatch");
  // flatten class into (length, isNegative) cycles
  std::vector<std::pair<unsigned, bool>> cycles;
  for (unsigned c : cls.positive) cycles.emplace_back(c, false);
  for (unsigned c : cls.negative) cycles.emplace_back(c, true);
  std::function<long long(const Partition&, const Partition&, std::size_t)> rec =
      [&](const Partition& a, const Partition& b, std::size_t k) -> long long {
    if (k == cycles.size()) return (a.empty() && b.empty()) ? 1 : 0;
    auto [len, negative] = cycles[k];
    long long value = 0;
    for (const auto& removal : detail::border_strips(a, len))
      value += removal.sign * rec(removal.shape, b, k + 1);
    for (const auto& removal : detail::border_strips(b, len)) {
      long long term = removal.sign * rec(a, removal.shape, k + 1);
      value += negative ? -term : term;
    }
    return value;
  };
  return rec(bp.alpha, bp.beta, 0);
}

// A conjugacy class of D_n = ker(chi) < W_n.  Classes with all cycles
// positive and even split into two D_n-classes, tagged +/-; all other tags
// are zero.
struct DClass {
  SignedCycleType type;
  int split_tag = 0;

  bool in_d() const { return type.negative.size() % 2 == 0; }
  bool very_even() const {
    if (!type.negative.empty()) return false;
    return std::all_of(type.positive.begin(), type.positive.end(),
                       [](unsigned c) { return c % 2 == 0; });
  }
};

// Character of the D_n irreducible at a D_n class.  Non-split labels are
// restrictions of W_n irreducibles.  A split pair {alpha, alpha}^± takes the
// value (chi_B ± delta)/2, where delta is supported on the very even classes
// 2mu and equals 2^{l(mu)} chi_alpha(mu) there, with the (+,+) pairing fixed
// by the canonical class representatives.
inline Rational d_character(const DLabel& label, const DClass& cls) {
  if (!cls.in_d()) throw invalid_input("d_character: class not in D_n");
  Bipartition bp{label.alpha, label.beta};
  long base = static_cast<long>(hyperoctahedral_character(bp, cls.type));
  if (!label.is_split()) return Rational(base);
  Rational value = make_rational(base, 2);
  if (cls.very_even() && cls.split_tag != 0) {
    std::vector<unsigned> halves;
    for (unsigned c : cls.type.positive) halves.push_back(c / 2);
    long delta = static_cast<long>(mn_character(label.alpha, halves));
    long scale = 1L << halves.size();
    int label_sign = label.split == SplitTag::plus ? 1 : -1;
    value += make_rational(scale * delta * label_sign * cls.split_tag, 2);
  }
  return value;
}

// Trace of the D_n Coxeter class (negative (n-1)-cycle times a negative
// 1-cycle).  The class has negative cycles, so split labels take half the
// restricted value, which vanishes.
inline long long d_coxeter_trace(unsigned n, const DLabel& label) {
  if (n < 4) throw invalid_input("d_coxeter_trace: n >= 4 required");
  DClass cls;
  cls.type.negative = {n - 1, 1};
  Rational v = d_character(label, cls);
  if (!is_integer(v)) throw consistency_error("d_coxeter_trace: non-integral value");
  return to_long(v);
}

}  // namespace coxtrace
