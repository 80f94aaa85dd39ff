#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "coxtrace/cyclotomic.hpp"
#include "coxtrace/rational.hpp"

namespace coxtrace {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline bool coeff_is_one(const Rational& c) { return c == 1; }
inline bool coeff_is_one(const Cyclotomic& c) { return c == Cyclotomic(Rational(1)); }
inline std::string coeff_str(const Rational& c) { return to_string(c); }
inline std::string coeff_str(const Cyclotomic& c) { return c.str(); }

// Finitely supported map exponent -> coefficient in the Hecke parameter v.
// Zero coefficients are never stored.
template <class C>
class Laurent {
 public:
  Laurent() = default;
  /*implicit*/ Laurent(const C& constant) { set(0, constant); }

  static Laurent term(const C& coeff, long exponent) {
    Laurent f;
    f.set(exponent, coeff);
    return f;
  }
  static Laurent monomial(long exponent) { return term(C(1), exponent); }

  bool is_zero() const { return terms_.empty(); }

  const std::map<long, C>& terms() const { return terms_; }

  long valuation() const {
    if (is_zero()) throw invalid_input("valuation of zero Laurent polynomial");
    return terms_.begin()->first;
  }
  long degree() const {
    if (is_zero()) throw invalid_input("degree of zero Laurent polynomial");
    return terms_.rbegin()->first;
  }

  C coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? C(0) : it->second;
  }

  // Evaluation at v = 1: the coefficient sum.
  C evaluate_at_one() const {
    C s(0);
    for (const auto& [e, c] : terms_) s = s + c;
    return s;
  }

  // The unique (coefficient, exponent) if the support has at most one term;
  // zero reports as {0, 0}, support >= 2 reports nothing.
  std::optional<std::pair<C, long>> as_monomial() const {
    if (terms_.empty()) return std::make_pair(C(0), 0L);
    if (terms_.size() == 1)
      return std::make_pair(terms_.begin()->second, terms_.begin()->first);
    return std::nullopt;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, C(0) - c);
    return r;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.set(e, C(0) - c);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent shifted(long k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.set(e + k, c);
    return r;
  }

  Laurent pow(unsigned n) const {
    Laurent acc(C(1));
    Laurent base = *this;
    while (n) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // Descending exponents: "-v^2", "v^4 + 1", "(z5 + z5^4)*v^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string cs = coeff_str(it->second);
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      bool composite = mag.find(' ') != std::string::npos;
      if (first) {
        if (neg && !composite) out << "-";
        first = false;
      } else {
        out << ((neg && !composite) ? " - " : " + ");
      }
      if (composite) {
        // keep full cyclotomic sums parenthesized with their own sign
        out << "(" << cs << ")";
        if (it->first != 0) out << "*";
      } else if (mag != "1" || it->first == 0) {
        out << mag;
        if (it->first != 0) out << "*";
      }
      if (it->first != 0) {
        out << "v";
        if (it->first != 1) out << "^" << it->first;
      }
    }
    return out.str();
  }

 private:
  void set(long e, const C& c) {
    if (!coeff_is_zero(c)) terms_[e] = c;
  }
  void add_term(long e, const C& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      set(e, c);
    } else {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  std::map<long, C> terms_;
};

using LaurentQ = Laurent<Rational>;
using LaurentCyc = Laurent<Cyclotomic>;

}  // namespace coxtrace
