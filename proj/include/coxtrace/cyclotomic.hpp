#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

#include "coxtrace/errors.hpp"
#include "coxtrace/rational.hpp"

namespace coxtrace {

namespace detail {

inline unsigned euler_phi(unsigned m) {
  unsigned result = m, n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Dense monic polynomial division: returns quotient of a / b, requires exact.
inline std::vector<Rational> poly_exact_divide(std::vector<Rational> a,
                                               const std::vector<Rational>& b) {
  std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational lead = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  if (!a.empty()) throw consistency_error("poly_exact_divide: nonzero remainder");
  return q;
}

// Phi_m as a dense monic coefficient vector, low degree first.
inline const std::vector<Rational>& cyclotomic_polynomial(unsigned m) {
  static std::map<unsigned, std::vector<Rational>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::function<std::vector<Rational>(unsigned)> phi_poly = [&](unsigned k) -> std::vector<Rational> {
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    // x^k - 1 divided by all Phi_d for proper divisors d | k
    std::vector<Rational> num(k + 1, Rational(0));
    num[0] = -1;
    num[k] = 1;
    for (unsigned d = 1; d < k; ++d) {
      if (k % d == 0) num = poly_exact_divide(std::move(num), phi_poly(d));
    }
    cache[k] = num;
    return num;
  };
  phi_poly(m);
  return cache[m];
}

}  // namespace detail

// An element of the m-th cyclotomic field, stored on the power basis
// 1, z, ..., z^{phi(m)-1} after reduction modulo Phi_m.  Rationals embed with
// conductor 1.  Mixed-conductor arithmetic lifts both operands to the lcm.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
  /*implicit*/ Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}
  /*implicit*/ Cyclotomic(long n) : conductor_(1), coeffs_(1, Rational(n)) {}

  // zeta(m, k) = exp(2 pi i k / m).
  static Cyclotomic zeta(unsigned m, long k = 1) {
    if (m == 0) throw invalid_input("zeta: conductor must be positive");
    long kk = ((k % static_cast<long>(m)) + m) % m;
    std::vector<Rational> poly(static_cast<std::size_t>(kk) + 1, Rational(0));
    poly[static_cast<std::size_t>(kk)] = 1;
    return Cyclotomic(m, std::move(poly));
  }

  unsigned conductor() const { return conductor_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  // Only valid when is_rational().
  Rational rational_value() const {
    if (!is_rational()) throw invalid_input("rational_value: element is irrational");
    return coeffs_[0];
  }

  Cyclotomic lifted(unsigned target) const {
    if (target % conductor_ != 0)
      throw invalid_input("lifted: target conductor not a multiple");
    if (target == conductor_) return *this;
    unsigned scale = target / conductor_;
    std::vector<Rational> poly(static_cast<std::size_t>(coeffs_.size() - 1) * scale + 1,
                               Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * scale] = coeffs_[i];
    return Cyclotomic(target, std::move(poly));
  }

  Cyclotomic conjugate() const {
    // z -> z^{-1}
    std::vector<Rational> poly(conductor_ == 1 ? 1 : conductor_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      std::size_t e = (i == 0) ? 0 : conductor_ - i;
      poly[e] += coeffs_[i];
    }
    return Cyclotomic(conductor_, std::move(poly));
  }

  Cyclotomic pow(unsigned e) const {
    Cyclotomic acc(Rational(1));
    Cyclotomic base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    for (std::size_t i = 0; i < y.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    for (std::size_t i = 0; i < y.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
  }

  Cyclotomic operator-() const {
    Cyclotomic x = *this;
    for (auto& c : x.coeffs_) c = -c;
    return x;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
        prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return Cyclotomic(m, std::move(prod));
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Complex embedding z -> exp(2 pi i / m); diagnostic use only.
  double real_embedding() const {
    double re = 0.0;
    const double pi = 3.14159265358979323846;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      re += coeffs_[i].get_d() * std::cos(2.0 * pi * static_cast<double>(i) / conductor_);
    return re;
  }

  // "z5 + z5^4", "-1", "2*z12^3 - 1".  Conductor is carried in the variable
  // name, rationals print bare.
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      bool neg = c < 0;
      Rational mag = neg ? Rational(-c) : c;
      if (first) {
        if (neg) out << "-";
        first = false;
      } else {
        out << (neg ? " - " : " + ");
      }
      std::string var;
      if (i == 0) {
        out << to_string(mag);
      } else {
        if (mag != 1) out << to_string(mag) << "*";
        out << "z" << conductor_;
        if (i > 1) out << "^" << i;
      }
    }
    return out.str();
  }

 private:
  Cyclotomic(unsigned m, std::vector<Rational> poly) : conductor_(m), coeffs_(std::move(poly)) {
    reduce();
  }

  void reduce() {
    const auto& phi = detail::cyclotomic_polynomial(conductor_);
    std::size_t deg = phi.size() - 1;
    // long division by the monic Phi_m
    for (std::size_t i = coeffs_.size(); i-- > deg;) {
      Rational lead = coeffs_[i];
      if (lead == 0) continue;
      coeffs_[i] = 0;
      for (std::size_t j = 0; j < deg; ++j) coeffs_[i - deg + j] -= lead * phi[j];
    }
    coeffs_.resize(std::max<std::size_t>(deg, 1), Rational(0));
  }

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic conjugate(const Cyclotomic& x) { return x.conjugate(); }

}  // namespace coxtrace
