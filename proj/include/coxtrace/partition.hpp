#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "coxtrace/errors.hpp"
#include "coxtrace/rational.hpp"

namespace coxtrace {

// Weakly decreasing list of positive parts; the empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw invalid_input("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw invalid_input("partition parts must be weakly decreasing");
    }
  }

  // The hook (n - i, 1^i).
  static Partition hook(unsigned n, unsigned i) {
    if (i >= n) throw invalid_input("hook: need 0 <= i < n");
    std::vector<unsigned> p;
    p.push_back(n - i);
    p.insert(p.end(), i, 1);
    return Partition(std::move(p));
  }

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t rows() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  unsigned total() const {
    unsigned s = 0;
    for (unsigned p : parts_) s += p;
    return s;
  }

  Partition conjugate() const {
    std::vector<unsigned> c;
    if (parts_.empty()) return Partition();
    c.resize(parts_[0], 0);
    for (unsigned p : parts_)
      for (unsigned j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
  }

  // n(lambda) = sum (i-1) * lambda_i
  unsigned n_statistic() const {
    unsigned s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<unsigned>(i) * parts_[i];
    return s;
  }

  bool is_hook() const { return parts_.size() <= 1 || parts_[1] == 1; }

  std::string str() const {
    if (parts_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out << ",";
      out << parts_[i];
    }
    return out.str();
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<unsigned> parts_;
};

// All partitions of n in lexicographically decreasing part order, largest
// first ((n) first, (1^n) last).  Deterministic order for reports.
inline std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned maxPart) {
    if (rest == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (unsigned p = std::min(rest, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

// The n hook partitions (n - i, 1^i) for i in [0, n-1], ordered by i.
inline std::vector<Partition> hook_partitions(unsigned n) {
  if (n == 0) throw invalid_input("hook_partitions: n must be positive");
  std::vector<Partition> out;
  out.reserve(n);
  for (unsigned i = 0; i < n; ++i) out.push_back(Partition::hook(n, i));
  return out;
}

// Number of standard Young tableaux, by the hook length formula.
inline Int standard_tableau_count(const Partition& lambda) {
  unsigned n = lambda.total();
  Int numer;
  mpz_fac_ui(numer.get_mpz_t(), n);
  Partition conj = lambda.conjugate();
  Int denom(1);
  for (std::size_t i = 0; i < lambda.rows(); ++i) {
    for (unsigned j = 0; j < lambda.parts()[i]; ++j) {
      unsigned hook = (lambda.parts()[i] - j) + (conj.parts()[j] - static_cast<unsigned>(i)) - 1;
      denom *= hook;
    }
  }
  return numer / denom;
}

struct Bipartition {
  Partition alpha;
  Partition beta;

  unsigned total() const { return alpha.total() + beta.total(); }

  std::string str() const { return "(" + alpha.str() + "|" + beta.str() + ")"; }

  friend bool operator==(const Bipartition& a, const Bipartition& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
  friend bool operator<(const Bipartition& a, const Bipartition& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.beta < b.beta;
  }
};

// All ordered bipartitions of n; |alpha| descending blocks, deterministic.
inline std::vector<Bipartition> bipartitions_of(unsigned n) {
  std::vector<Bipartition> out;
  for (unsigned k = 0; k <= n; ++k) {
    auto as = partitions_of(n - k);
    auto bs = partitions_of(k);
    for (const auto& a : as)
      for (const auto& b : bs) out.push_back(Bipartition{a, b});
  }
  return out;
}

}  // namespace coxtrace
