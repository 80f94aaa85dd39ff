#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "coxtrace/characters.hpp"
#include "coxtrace/coxeter.hpp"
#include "coxtrace/dihedral.hpp"
#include "coxtrace/ratfunc.hpp"

namespace coxtrace {

template <class Ring>
struct RingTraits;

template <>
struct RingTraits<RatFuncQ> {
  static RatFuncQ zero() { return RatFuncQ(); }
  static RatFuncQ one() { return RatFuncQ(Rational(1)); }
};

template <>
struct RingTraits<LaurentCyc> {
  static LaurentCyc zero() { return LaurentCyc(); }
  static LaurentCyc one() { return LaurentCyc(Cyclotomic(Rational(1))); }
};

// Dense square matrix over an exact coefficient ring.
template <class Ring>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n, std::vector<Ring>(n, RingTraits<Ring>::zero())) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i][i] = RingTraits<Ring>::one();
    return m;
  }
  static Matrix scalar(std::size_t n, const Ring& value) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i][i] = value;
    return m;
  }

  std::size_t size() const { return n_; }
  Ring& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  const Ring& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (x.a_[i][k] == RingTraits<Ring>::zero()) continue;
        for (std::size_t j = 0; j < x.n_; ++j)
          r.a_[i][j] += x.a_[i][k] * y.a_[k][j];
      }
    return r;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t j = 0; j < x.n_; ++j) r.a_[i][j] = x.a_[i][j] + y.a_[i][j];
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) { return x.a_ == y.a_; }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix pow(unsigned e) const {
    Matrix acc = identity(n_);
    Matrix base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  Ring trace() const {
    Ring t = RingTraits<Ring>::zero();
    for (std::size_t i = 0; i < n_; ++i) t = t + a_[i][i];
    return t;
  }

  Matrix scaled(const Ring& c) const {
    Matrix r = *this;
    for (auto& row : r.a_)
      for (auto& e : row) e = e * c;
    return r;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Ring>> a_;
};

namespace detail {

// Standard tableaux of a shape, stored as (row, col) per entry, in the order
// produced by always placing the next entry in the lowest admissible row.
struct Tableau {
  std::vector<std::pair<unsigned, unsigned>> pos;  // pos[k] = box of entry k+1

  long content(unsigned entry) const {
    return static_cast<long>(pos[entry - 1].second) - static_cast<long>(pos[entry - 1].first);
  }
};

inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
  unsigned n = shape.total();
  std::vector<Tableau> out;
  std::vector<unsigned> filled(shape.rows(), 0);
  Tableau current;
  current.pos.resize(n);
  std::function<void(unsigned)> rec = [&](unsigned next) {
    if (next == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t r = 0; r < shape.rows(); ++r) {
      if (filled[r] >= shape.parts()[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      current.pos[next] = {static_cast<unsigned>(r), filled[r]};
      ++filled[r];
      rec(next + 1);
      --filled[r];
    }
  };
  rec(0);
  return out;
}

inline std::optional<std::size_t> swapped_index(const std::vector<Tableau>& tableaux,
                                                std::size_t t, unsigned i) {
  Tableau swapped = tableaux[t];
  std::swap(swapped.pos[i - 1], swapped.pos[i]);
  for (std::size_t k = 0; k < tableaux.size(); ++k)
    if (tableaux[k].pos == swapped.pos) return k;
  return std::nullopt;
}

}  // namespace detail

// A matrix model of the Hecke algebra acting on an irreducible module,
// generators satisfying T^2 = (v^2 - 1) T + v^2 and the braid relations;
// both are checked symbolically at construction.
struct SeminormalModel {
  unsigned n = 0;  // Hecke algebra of S_n
  Partition shape;
  unsigned dimension = 0;
  std::vector<Matrix<RatFuncQ>> generators;
};

namespace detail {

template <class Ring>
void check_hecke_relations(const std::vector<Matrix<Ring>>& gens, const CoxeterDatum& datum,
                           const Ring& q, const std::string& what) {
  std::size_t dim = gens.front().size();
  auto id = Matrix<Ring>::identity(dim);
  Ring qm1 = q - RingTraits<Ring>::one();
  for (const auto& g : gens) {
    if (g * g != g.scaled(qm1) + id.scaled(q))
      throw consistency_error(what + ": quadratic relation failed");
  }
  for (unsigned i = 1; i <= gens.size(); ++i) {
    for (unsigned j = i + 1; j <= gens.size(); ++j) {
      unsigned m = datum.coxeter_matrix(i, j);
      Matrix<Ring> lhs = Matrix<Ring>::identity(dim), rhs = Matrix<Ring>::identity(dim);
      for (unsigned k = 0; k < m; ++k) {
        lhs = lhs * (k % 2 == 0 ? gens[i - 1] : gens[j - 1]);
        rhs = rhs * (k % 2 == 0 ? gens[j - 1] : gens[i - 1]);
      }
      if (lhs != rhs) throw consistency_error(what + ": braid relation failed");
    }
  }
}

}  // namespace detail

// Tableau-indexed model with the eigenvalue normalization {v^2, -1}: entries
// are rational functions of v built from the content distances.
inline SeminormalModel seminormal_model(unsigned n, const Partition& shape) {
  if (n > 7) throw capability_error("seminormal_model: n <= 7 guard");
  if (shape.total() != n) throw invalid_input("seminormal_model: |shape| != n");
  SeminormalModel model;
  model.n = n;
  model.shape = shape;
  auto tableaux = detail::standard_tableaux(shape);
  model.dimension = static_cast<unsigned>(tableaux.size());

  RatFuncQ v = RatFuncQ::variable();
  RatFuncQ q = v * v;
  RatFuncQ one = RingTraits<RatFuncQ>::one();

  auto q_pow = [&](long d) {
    RatFuncQ p = one;
    for (long k = 0; k < std::abs(d); ++k) p = p * q;
    if (d < 0) p = one / p;
    return p;
  };

  for (unsigned i = 1; i < n; ++i) {
    Matrix<RatFuncQ> m(model.dimension);
    for (std::size_t t = 0; t < tableaux.size(); ++t) {
      long d = tableaux[t].content(i + 1) - tableaux[t].content(i);
      RatFuncQ diag = (q - one) / (one - q_pow(-d));
      m.at(t, t) = diag;
      auto partner = detail::swapped_index(tableaux, t, i);
      if (partner && *partner > t) {
        RatFuncQ diag2 = (q - one) / (one - q_pow(d));
        m.at(t, *partner) = one;
        m.at(*partner, t) = diag * diag2 + q;
      }
    }
    model.generators.push_back(std::move(m));
  }

  detail::check_hecke_relations(model.generators, CoxeterDatum::make(Family::A, n - 1), q,
                                "seminormal model " + shape.str());
  return model;
}

// Trace data of T_w on one module: the polynomial, its monomial exponent
// when nonzero, and the specialization at v = 1.
struct HeckeTraceRecord {
  std::string label;
  LaurentQ trace_poly;
  std::optional<long> m_exponent;
  long trace_at_one = 0;
};

inline HeckeTraceRecord hecke_coxeter_trace(const SeminormalModel& model,
                                            const std::vector<unsigned>& word) {
  if (word.size() != model.n - 1)
    throw invalid_input("hecke_coxeter_trace: Coxeter words have length r");
  auto product = Matrix<RatFuncQ>::identity(model.dimension);
  for (unsigned s : word) {
    if (s < 1 || s >= model.n) throw invalid_input("hecke_coxeter_trace: bad generator");
    product = product * model.generators[s - 1];
  }
  auto as_laurent = product.trace().to_laurent();
  if (!as_laurent)
    throw consistency_error("hecke_coxeter_trace: trace did not reduce to a Laurent polynomial");
  HeckeTraceRecord record;
  record.label = model.shape.str();
  record.trace_poly = *as_laurent;
  auto mono = record.trace_poly.as_monomial();
  if (!mono)
    throw consistency_error("hecke_coxeter_trace: trace of " + model.shape.str() +
                            " is not a monomial");
  if (!coeff_is_zero(mono->first)) record.m_exponent = mono->second;
  Rational at_one = record.trace_poly.evaluate_at_one();
  if (!is_integer(at_one))
    throw consistency_error("hecke_coxeter_trace: non-integral specialization");
  record.trace_at_one = to_long(at_one);
  return record;
}

// T_w^h = T_{w0}^2 as matrices, and T_{w0}^2 is the scalar
// v^{2(nu - a + a!)}.  Returns false on any mismatch.
inline bool power_identity_check(const SeminormalModel& model, const CoxeterDatum& datum) {
  if (datum.family != Family::A || datum.rank + 1 != model.n)
    throw invalid_input("power_identity_check: datum must match the model");
  auto bw = balanced_coxeter_word(datum);
  auto t_of_word = [&](const std::vector<unsigned>& word) {
    auto p = Matrix<RatFuncQ>::identity(model.dimension);
    for (unsigned s : word) p = p * model.generators[s - 1];
    return p;
  };
  auto tw = t_of_word(bw.word);
  auto tw0 = t_of_word(reduced_word(datum, longest_element(datum)));
  auto lhs = tw.pow(datum.coxeter_number());
  auto rhs = tw0 * tw0;
  if (lhs != rhs) return false;

  long nu = static_cast<long>(datum.positive_roots());
  long a = a_value_a(model.shape);
  long a_dual = a_value_a(model.shape.conjugate());
  long exponent = 2 * (nu - a + a_dual);
  LaurentQ scalar_l = LaurentQ::monomial(exponent);
  auto scalar = Matrix<RatFuncQ>::scalar(model.dimension, RatFuncQ(scalar_l));
  return rhs == scalar;
}

// --- dihedral modules ---------------------------------------------------------

// Two-by-two (or one-by-one) models of the I2(m) Hecke algebra with
// coefficients in Q(zeta_m)[v]; relations checked at construction.
struct DihedralHeckeModel {
  unsigned m = 0;
  DihedralLabel label;
  unsigned dimension = 0;
  std::vector<Matrix<LaurentCyc>> generators;
};

inline DihedralHeckeModel dihedral_hecke_model(unsigned m, const DihedralLabel& label) {
  if (m < 3) throw invalid_input("dihedral_hecke_model: m >= 3 required");
  DihedralHeckeModel model;
  model.m = m;
  model.label = label;
  LaurentCyc one = RingTraits<LaurentCyc>::one();
  LaurentCyc v2 = LaurentCyc::term(Cyclotomic(Rational(1)), 2);
  LaurentCyc minus_one = LaurentCyc(Cyclotomic(Rational(-1)));

  auto scalar1 = [&](const LaurentCyc& x) {
    Matrix<LaurentCyc> g(1);
    g.at(0, 0) = x;
    return g;
  };

  switch (label.kind) {
    case DihedralLabel::Kind::trivial:
      model.dimension = 1;
      model.generators = {scalar1(v2), scalar1(v2)};
      break;
    case DihedralLabel::Kind::sign:
      model.dimension = 1;
      model.generators = {scalar1(minus_one), scalar1(minus_one)};
      break;
    case DihedralLabel::Kind::one_p:
      if (m % 2 != 0) throw invalid_input("1_p needs even m");
      model.dimension = 1;
      model.generators = {scalar1(v2), scalar1(minus_one)};
      break;
    case DihedralLabel::Kind::one_p_prime:
      if (m % 2 != 0) throw invalid_input("1'_p needs even m");
      model.dimension = 1;
      model.generators = {scalar1(minus_one), scalar1(v2)};
      break;
    case DihedralLabel::Kind::two_dim: {
      if (label.j == 0 || 2 * label.j >= m)
        throw invalid_input("two-dimensional labels need 1 <= j < m/2");
      model.dimension = 2;
      Cyclotomic c = Cyclotomic::zeta(m, static_cast<long>(label.j)) +
                     Cyclotomic::zeta(m, -static_cast<long>(label.j));
      Matrix<LaurentCyc> t1(2), t2(2);
      t1.at(0, 0) = minus_one;
      t1.at(1, 0) = LaurentCyc::term(c + Cyclotomic(Rational(2)), 2);
      t1.at(1, 1) = v2;
      t2.at(0, 0) = v2;
      t2.at(0, 1) = one;
      t2.at(1, 1) = minus_one;
      model.generators = {std::move(t1), std::move(t2)};
      break;
    }
  }

  detail::check_hecke_relations(model.generators, CoxeterDatum::make(Family::I2, 2, m),
                                LaurentCyc::term(Cyclotomic(Rational(1)), 2),
                                "dihedral model " + label.name(m));
  return model;
}

struct DihedralHeckeRecord {
  std::string label;
  LaurentCyc trace_poly;
  std::optional<long> m_exponent;
  Cyclotomic coefficient;
};

inline DihedralHeckeRecord dihedral_hecke_trace(const DihedralHeckeModel& model) {
  auto product = model.generators[0] * model.generators[1];
  DihedralHeckeRecord record;
  record.label = model.label.name(model.m);
  record.trace_poly = product.trace();
  auto mono = record.trace_poly.as_monomial();
  if (!mono)
    throw consistency_error("dihedral_hecke_trace: trace of " + record.label +
                            " is not a monomial");
  record.coefficient = mono->first;
  if (!mono->first.is_zero()) record.m_exponent = mono->second;
  return record;
}

// Dihedral power identity: T_w^m = T_{w0}^2 = v^{2(nu - a + a!)} with the
// middle-family a-values all equal to 1.
inline bool dihedral_power_identity_check(const DihedralHeckeModel& model) {
  unsigned m = model.m;
  auto tw = model.generators[0] * model.generators[1];
  auto lhs = tw.pow(m);
  auto alternating = [&](bool start_first) {
    auto p = Matrix<LaurentCyc>::identity(model.dimension);
    for (unsigned k = 0; k < m; ++k)
      p = p * model.generators[(k % 2 == 0) == start_first ? 0 : 1];
    return p;
  };
  auto tw0 = alternating(true);
  if (tw0 != alternating(false)) return false;
  auto rhs = tw0 * tw0;
  if (lhs != rhs) return false;

  long a = 0, a_dual = 0;
  switch (model.label.kind) {
    case DihedralLabel::Kind::trivial: a = 0; a_dual = static_cast<long>(m); break;
    case DihedralLabel::Kind::sign: a = static_cast<long>(m); a_dual = 0; break;
    default: a = 1; a_dual = 1; break;
  }
  long exponent = 2 * (static_cast<long>(m) - a + a_dual);
  auto scalar = Matrix<LaurentCyc>::scalar(model.dimension,
                                           LaurentCyc::term(Cyclotomic(Rational(1)), exponent));
  return rhs == scalar;
}

}  // namespace coxtrace
