#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxtrace/signed_perm.hpp"

namespace coxtrace {

enum class Family { A, B, D, E6, E7, E8, F4, G2, H3, H4, I2 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2";
  }
  return "?";
}

inline constexpr unsigned kRankCap = 12;  // main engines stop here

// Numerical data of an irreducible finite Coxeter group: rank r, Coxeter
// number h, number of positive roots nu = l(w0), exponents.
struct CoxeterDatum {
  Family family;
  unsigned rank = 0;
  unsigned m = 0;  // dihedral I2(m) only

  static CoxeterDatum make(Family f, unsigned rank, unsigned m = 0) {
    CoxeterDatum d{f, rank, m};
    d.validate();
    return d;
  }

  void validate() const {
    switch (family) {
      case Family::A:
        if (rank < 1) throw invalid_input("A: rank >= 1 required");
        break;
      case Family::B:
        if (rank < 2) throw invalid_input("B: rank >= 2 required");
        break;
      case Family::D:
        if (rank < 4) throw invalid_input("D: rank >= 4 required");
        break;
      case Family::I2:
        if (rank != 2 || m < 3) throw invalid_input("I2: rank 2 and m >= 3 required");
        break;
      case Family::E6:
        if (rank != 6) throw invalid_input("E6 has rank 6");
        break;
      case Family::E7:
        if (rank != 7) throw invalid_input("E7 has rank 7");
        break;
      case Family::E8:
        if (rank != 8) throw invalid_input("E8 has rank 8");
        break;
      case Family::F4:
        if (rank != 4) throw invalid_input("F4 has rank 4");
        break;
      case Family::G2:
        if (rank != 2) throw invalid_input("G2 has rank 2");
        break;
      case Family::H3:
        if (rank != 3) throw invalid_input("H3 has rank 3");
        break;
      case Family::H4:
        if (rank != 4) throw invalid_input("H4 has rank 4");
        break;
    }
    if (rank > kRankCap) throw capability_error("rank cap exceeded");
  }

  unsigned coxeter_number() const {
    switch (family) {
      case Family::A: return rank + 1;
      case Family::B: return 2 * rank;
      case Family::D: return 2 * rank - 2;
      case Family::I2: return m;
      case Family::E6: return 12;
      case Family::E7: return 18;
      case Family::E8: return 30;
      case Family::F4: return 12;
      case Family::G2: return 6;
      case Family::H3: return 10;
      case Family::H4: return 30;
    }
    return 0;
  }

  // nu = l(w0) = number of positive roots = h * r / 2.
  unsigned positive_roots() const { return coxeter_number() * rank / 2; }

  std::vector<unsigned> exponents() const {
    std::vector<unsigned> e;
    switch (family) {
      case Family::A:
        for (unsigned i = 1; i <= rank; ++i) e.push_back(i);
        break;
      case Family::B:
        for (unsigned i = 1; i <= rank; ++i) e.push_back(2 * i - 1);
        break;
      case Family::D:
        for (unsigned i = 1; i < rank; ++i) e.push_back(2 * i - 1);
        e.push_back(rank - 1);
        std::sort(e.begin(), e.end());
        break;
      case Family::I2: e = {1, m - 1}; break;
      case Family::E6: e = {1, 4, 5, 7, 8, 11}; break;
      case Family::E7: e = {1, 5, 7, 9, 11, 13, 17}; break;
      case Family::E8: e = {1, 7, 11, 13, 17, 19, 23, 29}; break;
      case Family::F4: e = {1, 5, 7, 11}; break;
      case Family::G2: e = {1, 5}; break;
      case Family::H3: e = {1, 5, 9}; break;
      case Family::H4: e = {1, 11, 19, 29}; break;
    }
    return e;
  }

  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E6 ||
           family == Family::E7 || family == Family::E8;
  }

  bool crystallographic() const {
    return family != Family::H3 && family != Family::H4 &&
           (family != Family::I2 || m == 3 || m == 4 || m == 6);
  }

  std::string name() const {
    if (family == Family::I2) return "I2(" + std::to_string(m) + ")";
    if (family == Family::A || family == Family::B || family == Family::D)
      return family_name(family) + std::to_string(rank);
    return family_name(family);
  }

  // Coxeter matrix entry m(i, j) for the permutation families and I2.
  unsigned coxeter_matrix(unsigned i, unsigned j) const {
    if (i == j) return 1;
    if (i > j) std::swap(i, j);
    switch (family) {
      case Family::A:
        return j == i + 1 ? 3 : 2;
      case Family::B:
        if (j == i + 1) return j == rank ? 4 : 3;
        return 2;
      case Family::D:
        if (j == rank) return i == rank - 2 ? 3 : 2;  // fork: node n hangs off n-2
        return j == i + 1 ? 3 : 2;
      case Family::I2:
        return m;
      default:
        throw capability_error("coxeter_matrix: permutation families and I2 only");
    }
  }
};

// --- signed permutation models for the classical families --------------------

namespace detail {

inline SignedPermutation transposition(unsigned n, unsigned i) {
  auto g = SignedPermutation::identity(n);
  std::vector<int> img = g.images();
  std::swap(img[i - 1], img[i]);
  return SignedPermutation(std::move(img));
}

}  // namespace detail

// Number of points the signed-permutation model acts on.
inline unsigned model_points(const CoxeterDatum& d) {
  return d.family == Family::A ? d.rank + 1 : d.rank;
}

// Simple reflections.  A: adjacent transpositions; B: transpositions plus the
// sign change at n; D: transpositions plus the negative transposition of
// {n-1, n} (the element s_n s_{n-1} s_n of B_n).
inline std::vector<SignedPermutation> generators(const CoxeterDatum& d) {
  unsigned n = model_points(d);
  std::vector<SignedPermutation> gens;
  switch (d.family) {
    case Family::A:
      for (unsigned i = 1; i < n; ++i) gens.push_back(detail::transposition(n, i));
      break;
    case Family::B: {
      for (unsigned i = 1; i < n; ++i) gens.push_back(detail::transposition(n, i));
      auto img = SignedPermutation::identity(n).images();
      img[n - 1] = -static_cast<int>(n);
      gens.emplace_back(std::move(img));
      break;
    }
    case Family::D: {
      for (unsigned i = 1; i < n; ++i) gens.push_back(detail::transposition(n, i));
      auto img = SignedPermutation::identity(n).images();
      img[n - 2] = -static_cast<int>(n);
      img[n - 1] = -static_cast<int>(n - 1);
      gens.emplace_back(std::move(img));
      break;
    }
    default:
      throw capability_error("generators: permutation models exist for A, B, D only");
  }
  return gens;
}

// Product of all generators in the given order (a permutation of 1..r).
inline SignedPermutation coxeter_element(const CoxeterDatum& d,
                                         const std::vector<unsigned>& order) {
  auto gens = generators(d);
  if (order.size() != gens.size()) throw invalid_input("coxeter_element: order must list each generator once");
  std::vector<bool> seen(gens.size(), false);
  for (unsigned idx : order) {
    if (idx < 1 || idx > gens.size() || seen[idx - 1])
      throw invalid_input("coxeter_element: order must be a permutation of 1..r");
    seen[idx - 1] = true;
  }
  auto w = SignedPermutation::identity(model_points(d));
  for (unsigned idx : order) w = w * gens[idx - 1];
  return w;
}

inline SignedPermutation coxeter_element(const CoxeterDatum& d) {
  std::vector<unsigned> order(d.rank);
  std::iota(order.begin(), order.end(), 1);
  return coxeter_element(d, order);
}

// Coxeter length by counting positive roots sent negative.
inline unsigned length(const CoxeterDatum& d, const SignedPermutation& w) {
  unsigned n = model_points(d);
  unsigned count = 0;
  auto sign_of = [&](int v) { return v > 0 ? 1 : -1; };
  for (unsigned i = 1; i <= n; ++i) {
    int wi = w.image(i);
    if (d.family == Family::B && wi < 0) ++count;  // root e_i
    for (unsigned j = i + 1; j <= n; ++j) {
      int wj = w.image(j);
      int si = sign_of(wi), sj = sign_of(wj);
      unsigned a = std::abs(wi), b = std::abs(wj);
      // root e_i - e_j
      if (si > 0 && sj > 0) {
        if (a > b) ++count;
      } else if (si < 0 && sj > 0) {
        ++count;
      } else if (si < 0 && sj < 0) {
        if (b > a) ++count;
      }
      if (d.family == Family::A) continue;
      // root e_i + e_j
      if (si > 0 && sj < 0) {
        if (a > b) ++count;
      } else if (si < 0 && sj > 0) {
        if (b > a) ++count;
      } else if (si < 0 && sj < 0) {
        ++count;
      }
    }
  }
  return count;
}

// Longest element w0.
inline SignedPermutation longest_element(const CoxeterDatum& d) {
  unsigned n = model_points(d);
  std::vector<int> img(n);
  switch (d.family) {
    case Family::A:
      for (unsigned i = 0; i < n; ++i) img[i] = static_cast<int>(n - i);
      break;
    case Family::B:
      for (unsigned i = 0; i < n; ++i) img[i] = -static_cast<int>(i + 1);
      break;
    case Family::D:
      for (unsigned i = 0; i < n; ++i) img[i] = -static_cast<int>(i + 1);
      if (n % 2 == 1) img[n - 1] = static_cast<int>(n);
      break;
    default:
      throw capability_error("longest_element: A, B, D only");
  }
  return SignedPermutation(std::move(img));
}

// Reduced word by right-descent stripping; verified against the inversion
// count (the word length always equals length(w)).
inline std::vector<unsigned> reduced_word(const CoxeterDatum& d, SignedPermutation w) {
  auto gens = generators(d);
  std::vector<unsigned> rev;
  unsigned l = length(d, w);
  while (l > 0) {
    bool found = false;
    for (unsigned s = 1; s <= gens.size(); ++s) {
      SignedPermutation ws = w * gens[s - 1];
      unsigned lw = length(d, ws);
      if (lw < l) {
        rev.push_back(s);
        w = std::move(ws);
        l = lw;
        found = true;
        break;
      }
    }
    if (!found) throw consistency_error("reduced_word: no descent found");
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

inline SignedPermutation word_to_element(const CoxeterDatum& d, const std::vector<unsigned>& word) {
  auto gens = generators(d);
  auto w = SignedPermutation::identity(model_points(d));
  for (unsigned s : word) {
    if (s < 1 || s > gens.size()) throw invalid_input("word_to_element: bad generator index");
    w = w * gens[s - 1];
  }
  return w;
}

// Bipartite Coxeter word: the generator set splits into two blocks of
// pairwise-commuting reflections (2-coloring of the Coxeter graph); the word
// lists the first block then the second.
struct BalancedWord {
  std::vector<unsigned> word;
  std::vector<unsigned> block_a;
  std::vector<unsigned> block_b;
};

inline BalancedWord balanced_coxeter_word(const CoxeterDatum& d) {
  unsigned r = d.rank;
  std::vector<int> color(r + 1, -1);
  // BFS 2-coloring of the Coxeter graph (edges where m(i,j) >= 3)
  for (unsigned start = 1; start <= r; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<unsigned> queue{start};
    while (!queue.empty()) {
      unsigned u = queue.back();
      queue.pop_back();
      for (unsigned v = 1; v <= r; ++v) {
        if (v == u || d.coxeter_matrix(u, v) < 3) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          throw consistency_error("balanced_coxeter_word: Coxeter graph not bipartite");
        }
      }
    }
  }
  BalancedWord bw;
  for (unsigned s = 1; s <= r; ++s) (color[s] == 0 ? bw.block_a : bw.block_b).push_back(s);
  bw.word = bw.block_a;
  bw.word.insert(bw.word.end(), bw.block_b.begin(), bw.block_b.end());
  return bw;
}

// Full group enumeration by closure under the generators.
inline std::vector<SignedPermutation> enumerate_group(const CoxeterDatum& d) {
  if (d.rank > 6) throw capability_error("enumerate_group: rank 6 guard");
  auto gens = generators(d);
  std::set<SignedPermutation> seen;
  std::vector<SignedPermutation> frontier{SignedPermutation::identity(model_points(d))};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        auto x = w * g;
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  return std::vector<SignedPermutation>(seen.begin(), seen.end());
}

// |{x in W : xg = gx}| by brute-force enumeration.
inline unsigned long centralizer_order(const CoxeterDatum& d, const SignedPermutation& g) {
  auto group = enumerate_group(d);
  unsigned long count = 0;
  for (const auto& x : group)
    if (x * g == g * x) ++count;
  return count;
}

}  // namespace coxtrace
