#pragma once

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "coxtrace/errors.hpp"

namespace coxtrace {

// Conjugacy-class data of a signed permutation: multisets of positive and
// negative cycle lengths, each sorted descending.
struct SignedCycleType {
  std::vector<unsigned> positive;
  std::vector<unsigned> negative;

  unsigned weight() const {
    unsigned s = 0;
    for (unsigned c : positive) s += c;
    for (unsigned c : negative) s += c;
    return s;
  }

  friend bool operator==(const SignedCycleType& a, const SignedCycleType& b) {
    return a.positive == b.positive && a.negative == b.negative;
  }
  friend bool operator<(const SignedCycleType& a, const SignedCycleType& b) {
    if (a.positive != b.positive) return a.positive < b.positive;
    return a.negative < b.negative;
  }

  std::string str() const {
    std::ostringstream out;
    out << "[+";
    for (unsigned c : positive) out << " " << c;
    out << " | -";
    for (unsigned c : negative) out << " " << c;
    out << "]";
    return out.str();
  }
};

// Permutation of {1..n, 1'..n'} commuting with the priming involution,
// stored through the images of 1..n (a negative value means a primed image).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      int a = std::abs(v);
      if (a < 1 || a > static_cast<int>(img_.size()) || seen[a - 1])
        throw invalid_input("signed permutation images must be a signed bijection");
      seen[a - 1] = true;
    }
  }

  static SignedPermutation identity(unsigned n) {
    std::vector<int> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = static_cast<int>(i + 1);
    return SignedPermutation(std::move(img));
  }

  unsigned size() const { return static_cast<unsigned>(img_.size()); }

  // Image of a signed point x in {±1..±n}.
  int apply(int x) const {
    int a = std::abs(x);
    int y = img_[a - 1];
    return x > 0 ? y : -y;
  }

  int image(unsigned i) const { return img_[i - 1]; }

  // (a * b)(x) = a(b(x))
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    std::vector<int> img(a.size());
    for (unsigned i = 1; i <= a.size(); ++i) img[i - 1] = a.apply(b.apply(static_cast<int>(i)));
    return SignedPermutation(std::move(img));
  }

  SignedPermutation inverse() const {
    std::vector<int> img(size());
    for (unsigned i = 1; i <= size(); ++i) {
      int y = img_[i - 1];
      img[std::abs(y) - 1] = y > 0 ? static_cast<int>(i) : -static_cast<int>(i);
    }
    return SignedPermutation(std::move(img));
  }

  bool is_identity() const {
    for (unsigned i = 1; i <= size(); ++i)
      if (img_[i - 1] != static_cast<int>(i)) return false;
    return true;
  }

  // Least k >= 1 with w^k = 1.
  unsigned order() const {
    SignedPermutation p = *this;
    unsigned k = 1;
    while (!p.is_identity()) {
      p = p * *this;
      ++k;
      if (k > 1u << 20) throw consistency_error("order: runaway iteration");
    }
    return k;
  }

  // Number of sign changes; the kernel of this parity is the D_n subgroup.
  unsigned negative_count() const {
    unsigned c = 0;
    for (int v : img_) c += (v < 0);
    return c;
  }

  SignedCycleType cycle_type() const {
    SignedCycleType t;
    std::vector<bool> seen(size(), false);
    for (unsigned i = 1; i <= size(); ++i) {
      if (seen[i - 1]) continue;
      unsigned len = 0;
      int x = static_cast<int>(i);
      do {
        seen[std::abs(x) - 1] = true;
        x = apply(x);
        ++len;
      } while (std::abs(x) != static_cast<int>(i));
      (x < 0 ? t.negative : t.positive).push_back(len);
    }
    std::sort(t.positive.begin(), t.positive.end(), std::greater<unsigned>());
    std::sort(t.negative.begin(), t.negative.end(), std::greater<unsigned>());
    return t;
  }

  // Cycle notation on the 2n signed symbols, primes marking negatives:
  // "(1 2 1' 2')(3)" — fixed points are omitted unless the element is trivial.
  std::string cycle_str() const {
    std::ostringstream out;
    std::vector<bool> seen(size(), false);
    bool wrote = false;
    auto sym = [](int x) {
      std::string s = std::to_string(std::abs(x));
      if (x < 0) s += "'";
      return s;
    };
    for (unsigned i = 1; i <= size(); ++i) {
      if (seen[i - 1] || img_[i - 1] == static_cast<int>(i)) {
        seen[i - 1] = true;
        continue;
      }
      out << "(";
      int x = static_cast<int>(i);
      bool first = true;
      do {
        seen[std::abs(x) - 1] = true;
        if (!first) out << " ";
        out << sym(x);
        first = false;
        x = apply(x);
      } while (x != static_cast<int>(i));
      out << ")";
      wrote = true;
    }
    if (!wrote) return "()";
    return out.str();
  }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
    return !(a == b);
  }
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    return a.img_ < b.img_;
  }

  const std::vector<int>& images() const { return img_; }

 private:
  std::vector<int> img_;
};

}  // namespace coxtrace
