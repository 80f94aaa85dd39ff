#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxtrace/partition.hpp"

namespace coxtrace {

enum class SplitTag { none, plus, minus };

// Two-row array of strictly increasing naturals.  Defect 1 parametrizes
// Irr(B_n), defect 0 parametrizes Irr(D_n) (rows unordered there; we keep the
// lexicographically larger row on top, matching the displayed tables).
struct Symbol {
  std::vector<unsigned> top;
  std::vector<unsigned> bottom;

  unsigned defect() const {
    return static_cast<unsigned>(top.size() > bottom.size() ? top.size() - bottom.size()
                                                            : bottom.size() - top.size());
  }

  // Multiset of all entries of both rows; the two-sided cell invariant for
  // classical types (split labels carry their tag separately).
  std::vector<unsigned> family_key() const {
    std::vector<unsigned> key;
    key.reserve(top.size() + bottom.size());
    key.insert(key.end(), top.begin(), top.end());
    key.insert(key.end(), bottom.begin(), bottom.end());
    std::sort(key.begin(), key.end());
    return key;
  }

  // "1,2,4/0,1"; an empty row renders as the empty string.
  std::string str() const {
    auto row = [](const std::vector<unsigned>& r) {
      std::ostringstream out;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out << ",";
        out << r[i];
      }
      return out.str();
    };
    return row(top) + "/" + row(bottom);
  }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.top == b.top && a.bottom == b.bottom;
  }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    if (a.top != b.top) return a.top < b.top;
    return a.bottom < b.bottom;
  }
};

namespace detail {

// Row of an (m-padded) partition: sorted parts plus the staircase 0,1,...,m-1.
inline std::vector<unsigned> symbol_row(const Partition& p, std::size_t padded) {
  std::vector<unsigned> parts(p.parts().rbegin(), p.parts().rend());
  parts.insert(parts.begin(), padded - parts.size(), 0);
  for (std::size_t j = 0; j < padded; ++j) parts[j] += static_cast<unsigned>(j);
  return parts;
}

}  // namespace detail

// The equivalence shift: prepend 0 to both rows and increment every entry.
inline Symbol shifted(const Symbol& s) {
  Symbol t;
  t.top.push_back(0);
  for (unsigned e : s.top) t.top.push_back(e + 1);
  t.bottom.push_back(0);
  for (unsigned e : s.bottom) t.bottom.push_back(e + 1);
  return t;
}

// Minimal representative: undo the shift while both rows begin with 0.
inline Symbol normalized(Symbol s) {
  while (!s.top.empty() && !s.bottom.empty() && s.top.front() == 0 && s.bottom.front() == 0) {
    s.top.erase(s.top.begin());
    s.bottom.erase(s.bottom.begin());
    for (auto& e : s.top) --e;
    for (auto& e : s.bottom) --e;
  }
  return s;
}

// Defect-1 symbol of an Irr(B_n) label (alpha, beta); alpha fills the top row.
inline Symbol symbol_of_b(const Bipartition& bp) {
  std::size_t m = std::max(bp.alpha.rows() > 0 ? bp.alpha.rows() - 1 : 0, bp.beta.rows());
  Symbol s;
  s.top = detail::symbol_row(bp.alpha, m + 1);
  s.bottom = detail::symbol_row(bp.beta, m);
  return normalized(s);
}

// Irr(D_n) label: an unordered pair of partitions, plus a +/- tag when the
// two coordinates coincide (the split case).
struct DLabel {
  Partition alpha;
  Partition beta;
  SplitTag split = SplitTag::none;

  bool is_split() const { return split != SplitTag::none; }

  std::string str() const;

  friend bool operator==(const DLabel& a, const DLabel& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.split == b.split;
  }
};

// Defect-0 symbol; rows ordered with the lexicographically larger on top.
inline Symbol symbol_of_d(const DLabel& label) {
  std::size_t m = std::max<std::size_t>({label.alpha.rows(), label.beta.rows(), 1});
  Symbol s;
  s.top = detail::symbol_row(label.alpha, m);
  s.bottom = detail::symbol_row(label.beta, m);
  if (s.top < s.bottom) std::swap(s.top, s.bottom);
  return normalized(s);
}

inline std::string DLabel::str() const {
  std::string text = symbol_of_d(*this).str();
  if (split == SplitTag::plus) text += ":+";
  if (split == SplitTag::minus) text += ":-";
  return text;
}

// Canonical unordered form: orient (alpha, beta) to match the symbol rows.
inline DLabel make_d_label(Partition a, Partition b, SplitTag split = SplitTag::none) {
  if (a == b && split == SplitTag::none)
    throw invalid_input("degenerate D label requires a split tag");
  if (a != b && split != SplitTag::none)
    throw invalid_input("split tag only applies to degenerate labels");
  std::size_t m = std::max<std::size_t>({a.rows(), b.rows(), 1});
  if (detail::symbol_row(a, m) < detail::symbol_row(b, m)) std::swap(a, b);
  return DLabel{std::move(a), std::move(b), split};
}

// All Irr(D_n) labels: unordered pairs, with degenerate pairs split in two.
inline std::vector<DLabel> d_labels_of(unsigned n) {
  std::vector<DLabel> out;
  for (const auto& bp : bipartitions_of(n)) {
    if (bp.beta < bp.alpha) continue;  // keep one representative per pair
    if (bp.alpha == bp.beta) {
      out.push_back(make_d_label(bp.alpha, bp.beta, SplitTag::plus));
      out.push_back(make_d_label(bp.alpha, bp.beta, SplitTag::minus));
    } else {
      out.push_back(make_d_label(bp.alpha, bp.beta));
    }
  }
  return out;
}

namespace detail {

// Sum of min(x, y) over unordered pairs of distinct positions.
inline Int pair_min_sum(std::vector<unsigned> entries) {
  std::sort(entries.begin(), entries.end(), std::greater<unsigned>());
  Int s(0);
  for (std::size_t k = 0; k < entries.size(); ++k) s += Int(static_cast<unsigned long>(k)) * entries[k];
  return s;
}

}  // namespace detail

// Lusztig a-invariant from the symbol-entry multiset: the pairwise-minima sum
// relative to the same statistic on the equal-size symbol of the trivial
// representation.  Constant on families by construction (it only reads the
// multiset).
inline long a_value_of_key(const std::vector<unsigned>& key, unsigned defect) {
  std::vector<unsigned> reference;
  unsigned sum = 0;
  for (unsigned e : key) sum += e;
  if (defect == 1) {
    // rows m+1 / m; trivial’s content is {0,0,1,1,...,m-1,m-1, n+m}
    std::size_t m = (key.size() - 1) / 2;
    unsigned n = sum - static_cast<unsigned>(m * m);
    for (unsigned j = 0; j < m; ++j) {
      reference.push_back(j);
      reference.push_back(j);
    }
    reference.push_back(n + static_cast<unsigned>(m));
  } else {
    // rows m / m; trivial’s content is {0,0,1,1,...,m-2,m-2, m-1, n+m-1}
    std::size_t m = key.size() / 2;
    unsigned n = sum - static_cast<unsigned>(m * (m - 1));
    for (unsigned j = 0; j + 1 < m; ++j) {
      reference.push_back(j);
      reference.push_back(j);
    }
    reference.push_back(static_cast<unsigned>(m) - 1);
    reference.push_back(n + static_cast<unsigned>(m) - 1);
  }
  Int a = detail::pair_min_sum(key) - detail::pair_min_sum(reference);
  return static_cast<long>(a.get_si());
}

inline long a_value(const Symbol& s) {
  Symbol n = normalized(s);
  return a_value_of_key(n.family_key(), n.defect());
}

// Type A a-invariant (equals the fake-degree valuation there).
inline long a_value_a(const Partition& lambda) { return lambda.n_statistic(); }

// Fake-degree valuations (lowest symmetric power containing the label).
inline long b_value_a(const Partition& lambda) { return lambda.n_statistic(); }

inline long b_value_b(const Bipartition& bp) {
  return 2L * bp.alpha.n_statistic() + 2L * bp.beta.n_statistic() + bp.beta.total();
}

inline long b_value_d(const DLabel& label) {
  return 2L * label.alpha.n_statistic() + 2L * label.beta.n_statistic() +
         std::min(label.alpha.total(), label.beta.total());
}

}  // namespace coxtrace
