#pragma once

#include <string>
#include <vector>

#include "coxtrace/cyclotomic.hpp"
#include "coxtrace/errors.hpp"

namespace coxtrace {

// Irreducibles of the dihedral group I2(m), named d_b by dimension and
// fake-degree valuation: 1_0, the sign 1_m, the two-dimensional 2_j for
// 1 <= j < m/2, and for even m the pair 1_p, 1'_p.
struct DihedralLabel {
  enum class Kind { trivial, sign, one_p, one_p_prime, two_dim };
  Kind kind = Kind::trivial;
  unsigned j = 0;  // rotation multiplier for two_dim

  unsigned dimension() const { return kind == Kind::two_dim ? 2 : 1; }

  std::string name(unsigned m) const {
    switch (kind) {
      case Kind::trivial: return "1_0";
      case Kind::sign: return "1_" + std::to_string(m);
      case Kind::one_p: return "1_" + std::to_string(m / 2);
      case Kind::one_p_prime: return "1'_" + std::to_string(m / 2);
      case Kind::two_dim: return "2_" + std::to_string(j);
    }
    return "?";
  }

  long b_value(unsigned m) const {
    switch (kind) {
      case Kind::trivial: return 0;
      case Kind::sign: return static_cast<long>(m);
      case Kind::one_p:
      case Kind::one_p_prime: return static_cast<long>(m / 2);
      case Kind::two_dim: return static_cast<long>(j);
    }
    return 0;
  }
};

inline std::vector<DihedralLabel> dihedral_labels(unsigned m) {
  if (m < 3) throw invalid_input("dihedral_labels: m >= 3 required");
  std::vector<DihedralLabel> out;
  out.push_back({DihedralLabel::Kind::trivial, 0});
  for (unsigned j = 1; 2 * j < m; ++j) out.push_back({DihedralLabel::Kind::two_dim, j});
  if (m % 2 == 0) {
    out.push_back({DihedralLabel::Kind::one_p, 0});
    out.push_back({DihedralLabel::Kind::one_p_prime, 0});
  }
  out.push_back({DihedralLabel::Kind::sign, 0});
  return out;
}

// Trace of the Coxeter element (the rotation by 2 pi / m) on the labeled
// irreducible.  The rotation is a product of two reflections, so every
// one-dimensional character takes value +1 except the two "mixed" characters
// 1_p, 1'_p of even m, which see one reflection of each class and take -1.
inline Cyclotomic dihedral_coxeter_trace(unsigned m, const DihedralLabel& label) {
  if (m < 3) throw invalid_input("dihedral_coxeter_trace: m >= 3 required");
  if ((label.kind == DihedralLabel::Kind::one_p ||
       label.kind == DihedralLabel::Kind::one_p_prime) &&
      m % 2 != 0)
    throw invalid_input("dihedral_coxeter_trace: 1_p labels need even m");
  switch (label.kind) {
    case DihedralLabel::Kind::trivial:
    case DihedralLabel::Kind::sign: return Cyclotomic(Rational(1));
    case DihedralLabel::Kind::one_p:
    case DihedralLabel::Kind::one_p_prime: return Cyclotomic(Rational(-1));
    case DihedralLabel::Kind::two_dim:
      return Cyclotomic::zeta(m, static_cast<long>(label.j)) +
             Cyclotomic::zeta(m, -static_cast<long>(label.j));
  }
  return Cyclotomic();
}

struct DihedralEpsilonTerm {
  std::string label;
  Cyclotomic coefficient;
};

struct DihedralCell {
  unsigned index = 0;  // 0, 1, 2
  std::vector<DihedralEpsilonTerm> terms;
  std::vector<std::string> members;
};

// The three-cell decomposition: c0 = {1_0}, c2 = {sign}, c1 = everything
// else.  Labels with vanishing trace (2_{p/2} when m = 2p, p even) stay in
// the member list but contribute no epsilon term.
struct DihedralDecomposition {
  unsigned m = 0;
  unsigned h = 0;
  std::vector<DihedralCell> cells;
};

inline DihedralDecomposition dihedral_cell_decomposition(unsigned m) {
  if (m < 3) throw invalid_input("dihedral_cell_decomposition: m >= 3 required");
  DihedralDecomposition out;
  out.m = m;
  out.h = m;
  DihedralCell c0{0, {}, {}}, c1{1, {}, {}}, c2{2, {}, {}};
  for (const auto& label : dihedral_labels(m)) {
    std::string name = label.name(m);
    Cyclotomic tr = dihedral_coxeter_trace(m, label);
    if (label.kind == DihedralLabel::Kind::trivial) {
      c0.members.push_back(name);
      c0.terms.push_back({name, tr});
    } else if (label.kind == DihedralLabel::Kind::sign) {
      c2.members.push_back(name);
      c2.terms.push_back({name, tr});
    } else {
      c1.members.push_back(name);
      if (!tr.is_zero()) c1.terms.push_back({name, tr});
    }
  }
  out.cells = {std::move(c0), std::move(c1), std::move(c2)};
  return out;
}

// Exact orthogonality: sum of squared traces over Irr(I2(m)) equals h = m.
inline bool dihedral_orthogonality_holds(unsigned m) {
  Cyclotomic total;
  for (const auto& label : dihedral_labels(m)) {
    Cyclotomic t = dihedral_coxeter_trace(m, label);
    total += t * t;
  }
  return total == Cyclotomic(Rational(static_cast<long>(m)));
}

}  // namespace coxtrace
