#pragma once

#include <optional>
#include <vector>

#include "coxtrace/laurent.hpp"

namespace coxtrace {

namespace poly {

// Dense univariate polynomials over a field, low degree first, no trailing
// zeros (empty vector = 0).  Backing store for RationalFunction.
template <class C>
using Dense = std::vector<C>;

template <class C>
void trim(Dense<C>& p) {
  while (!p.empty() && coeff_is_zero(p.back())) p.pop_back();
}

template <class C>
Dense<C> add(const Dense<C>& a, const Dense<C>& b) {
  Dense<C> r(std::max(a.size(), b.size()), C(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  trim(r);
  return r;
}

template <class C>
Dense<C> sub(const Dense<C>& a, const Dense<C>& b) {
  Dense<C> r(std::max(a.size(), b.size()), C(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim(r);
  return r;
}

template <class C>
Dense<C> mul(const Dense<C>& a, const Dense<C>& b) {
  if (a.empty() || b.empty()) return {};
  Dense<C> r(a.size() + b.size() - 1, C(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (coeff_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class C>
Dense<C> scale(const Dense<C>& a, const C& s) {
  Dense<C> r = a;
  for (auto& c : r) c = c * s;
  trim(r);
  return r;
}

// Remainder of a modulo b (b nonzero).
template <class C>
Dense<C> rem(Dense<C> a, const Dense<C>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    C lead = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - lead * b[i];
    trim(a);
  }
  return a;
}

template <class C>
Dense<C> make_monic(Dense<C> p) {
  if (p.empty()) return p;
  C inv = C(1) / p.back();
  for (auto& c : p) c = c * inv;
  return p;
}

namespace detail {

// Primitive integer image of a rational polynomial (denominators cleared,
// content stripped).
inline std::vector<Int> primitive_int_poly(const Dense<Rational>& p) {
  Int scale(1);
  for (const auto& c : p) {
    Int den = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    scale = scale / g * den;
  }
  std::vector<Int> out(p.size());
  Int content(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational scaled = p[i] * Rational(scale);
    out[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1)
    for (auto& c : out) c /= content;
  return out;
}

inline void strip_int_content(std::vector<Int>& p) {
  Int content(0);
  for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : p) c /= content;
}

// Pseudo-remainder of primitive integer polynomials, content-stripped
// (primitive polynomial remainder sequence).
inline std::vector<Int> primitive_prem(std::vector<Int> a, const std::vector<Int>& b) {
  while (a.size() >= b.size()) {
    Int lead_a = a.back(), lead_b = b.back();
    Int g;
    mpz_gcd(g.get_mpz_t(), lead_a.get_mpz_t(), lead_b.get_mpz_t());
    Int ma = lead_b / g, mb = lead_a / g;
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= ma;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= mb * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  strip_int_content(a);
  return a;
}

}  // namespace detail

// Monic gcd.  Over the rationals the Euclid runs on primitive integer
// images; content growth stays bounded for the structured polynomials the
// Hecke matrices produce.
template <class C>
Dense<C> gcd(Dense<C> a, Dense<C> b) {
  if constexpr (std::is_same_v<C, Rational>) {
    if (a.empty()) return b.empty() ? b : make_monic(std::move(b));
    if (b.empty()) return make_monic(std::move(a));
    std::vector<Int> ia = detail::primitive_int_poly(a);
    std::vector<Int> ib = detail::primitive_int_poly(b);
    while (!ib.empty()) {
      auto r = detail::primitive_prem(std::move(ia), ib);
      ia = std::move(ib);
      ib = std::move(r);
    }
    Dense<Rational> out(ia.size());
    for (std::size_t i = 0; i < ia.size(); ++i) out[i] = Rational(ia[i]);
    return make_monic(std::move(out));
  } else {
    while (!b.empty()) {
      a = rem(std::move(a), b);
      std::swap(a, b);
      if (!b.empty()) b = make_monic(std::move(b));
    }
    return a.empty() ? a : make_monic(std::move(a));
  }
}

// Exact quotient; throws if the division leaves a remainder.
template <class C>
Dense<C> exact_div(Dense<C> a, const Dense<C>& b) {
  if (b.empty()) throw invalid_input("polynomial division by zero");
  Dense<C> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, C(0));
  while (a.size() >= b.size() && !a.empty()) {
    C lead = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - lead * b[i];
    trim(a);
  }
  if (!a.empty()) throw consistency_error("exact_div: nonzero remainder");
  trim(q);
  return q;
}

}  // namespace poly

// Quotient of two polynomials in v.  Kept cancellation-free with a monic
// denominator; Hecke traces are required to collapse back to Laurent form.
template <class C>
class RationalFunction {
 public:
  RationalFunction() : num_{}, den_{C(1)} {}
  /*implicit*/ RationalFunction(const C& c) : num_{}, den_{C(1)} {
    if (!coeff_is_zero(c)) num_ = {c};
  }
  RationalFunction(poly::Dense<C> num, poly::Dense<C> den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  /*implicit*/ RationalFunction(const Laurent<C>& f) : num_{}, den_{C(1)} {
    if (f.is_zero()) return;
    long val = std::min<long>(0, f.valuation());
    num_.assign(static_cast<std::size_t>(f.degree() - val) + 1, C(0));
    for (const auto& [e, c] : f.terms()) num_[static_cast<std::size_t>(e - val)] = c;
    if (val < 0) {
      den_.assign(static_cast<std::size_t>(-val) + 1, C(0));
      den_.back() = C(1);
    }
    normalize();
  }

  static RationalFunction variable() { return RationalFunction(poly::Dense<C>{C(0), C(1)}, {C(1)}); }

  bool is_zero() const { return num_.empty(); }
  const poly::Dense<C>& numerator() const { return num_; }
  const poly::Dense<C>& denominator() const { return den_; }

  // Sums and products keep the reduced invariant with gcds of the small
  // cofactors only (the classical cross-cancellation scheme); reduced inputs
  // give reduced outputs without a full-size Euclid pass.
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto g0 = poly::gcd(a.den_, b.den_);
    RationalFunction r;
    if (g0.size() <= 1) {
      r.num_ = poly::add(poly::mul(a.num_, b.den_), poly::mul(b.num_, a.den_));
      r.den_ = poly::mul(a.den_, b.den_);
    } else {
      auto da = poly::exact_div(a.den_, g0);
      auto db = poly::exact_div(b.den_, g0);
      auto t = poly::add(poly::mul(a.num_, db), poly::mul(b.num_, da));
      auto g1 = poly::gcd(t, g0);
      if (g1.size() > 1) {
        t = poly::exact_div(std::move(t), g1);
        r.den_ = poly::mul(da, poly::exact_div(b.den_, g1));
      } else {
        r.den_ = poly::mul(da, b.den_);
      }
      r.num_ = std::move(t);
    }
    r.finalize_reduced();
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    auto g1 = poly::gcd(a.num_, b.den_);
    auto g2 = poly::gcd(b.num_, a.den_);
    RationalFunction r;
    r.num_ = poly::mul(g1.size() > 1 ? poly::exact_div(a.num_, g1) : a.num_,
                       g2.size() > 1 ? poly::exact_div(b.num_, g2) : b.num_);
    r.den_ = poly::mul(g2.size() > 1 ? poly::exact_div(a.den_, g2) : a.den_,
                       g1.size() > 1 ? poly::exact_div(b.den_, g1) : b.den_);
    r.finalize_reduced();
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw invalid_input("division by zero rational function");
    RationalFunction flipped;
    flipped.num_ = b.den_;
    flipped.den_ = b.num_;
    return a * flipped;
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    for (auto& c : r.num_) c = C(0) - c;
    return r;
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  // Collapses to a Laurent polynomial when the reduced denominator is a pure
  // power of v; otherwise reports nothing.
  std::optional<Laurent<C>> to_laurent() const {
    for (std::size_t i = 0; i + 1 < den_.size(); ++i)
      if (!coeff_is_zero(den_[i])) return std::nullopt;
    long shift = -static_cast<long>(den_.size() - 1);
    Laurent<C> f;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (coeff_is_zero(num_[i])) continue;
      f += Laurent<C>::term(num_[i], static_cast<long>(i) + shift);
    }
    return f;
  }

  std::string str() const {
    Laurent<C> n;
    for (std::size_t i = 0; i < num_.size(); ++i)
      if (!coeff_is_zero(num_[i])) n += Laurent<C>::term(num_[i], static_cast<long>(i));
    Laurent<C> d;
    for (std::size_t i = 0; i < den_.size(); ++i)
      if (!coeff_is_zero(den_[i])) d += Laurent<C>::term(den_[i], static_cast<long>(i));
    if (den_.size() == 1 && coeff_is_one(den_[0])) return n.str();
    return "(" + n.str() + ")/(" + d.str() + ")";
  }

 private:
  void normalize() {
    if (den_.empty()) throw invalid_input("zero denominator");
    poly::trim(num_);
    if (num_.empty()) {
      den_ = {C(1)};
      return;
    }
    auto g = poly::gcd(num_, den_);
    if (g.size() > 1) {
      num_ = poly::exact_div(std::move(num_), g);
      den_ = poly::exact_div(std::move(den_), g);
    }
    make_den_monic();
  }

  // For results that are reduced by construction: only restore the
  // monic-denominator convention.
  void finalize_reduced() {
    poly::trim(num_);
    if (num_.empty()) {
      den_ = {C(1)};
      return;
    }
    make_den_monic();
  }

  void make_den_monic() {
    C lead = den_.back();
    if (!coeff_is_one(lead)) {
      C inv = C(1) / lead;
      for (auto& c : num_) c = c * inv;
      for (auto& c : den_) c = c * inv;
    }
  }

  poly::Dense<C> num_;
  poly::Dense<C> den_;
};

using RatFuncQ = RationalFunction<Rational>;

}  // namespace coxtrace
