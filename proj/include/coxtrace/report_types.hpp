#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxtrace/coxeter.hpp"
#include "coxtrace/rational.hpp"

namespace coxtrace {

// One irreducible in a trace report.  cell is the index i of c_i = u(Lambda^i)
// when the label lies in such a family (twice the index, so half-integer
// exceptional cells fit); m is the Hecke exponent 2r - 2i of a nonzero trace.
struct TraceEntry {
  std::string label;
  long long trace = 0;
  std::optional<int> cell_twice;
  std::optional<long> m_exponent;
};

struct TraceReport {
  std::string type;
  unsigned rank = 0;
  unsigned h = 0;
  std::vector<TraceEntry> entries;

  unsigned nonzero_count() const {
    unsigned c = 0;
    for (const auto& e : entries) c += (e.trace != 0);
    return c;
  }
  long long sum_of_squares() const {
    long long s = 0;
    for (const auto& e : entries) s += e.trace * e.trace;
    return s;
  }
};

struct EpsilonTerm {
  std::string label;
  int sign = 0;  // +1 or -1
};

struct CellView {
  int index_twice = 0;             // 2i: integral cells are even, c^{7/2} is 7
  std::string gamma;               // "S1".."S5", or "ex" for exceptional cells
  std::optional<long long> p;      // the integer p_i (c_i cells only)
  std::vector<EpsilonTerm> epsilon;
  std::optional<std::string> special;
  std::vector<std::string> members;  // every family member, zero traces included
  long a_value = 0;

  bool integral_index() const { return index_twice % 2 == 0; }
  std::string index_str() const {
    if (integral_index()) return std::to_string(index_twice / 2);
    return std::to_string(index_twice) + "/2";
  }
};

struct CellDecomposition {
  std::string type;
  unsigned rank = 0;
  unsigned h = 0;
  std::vector<CellView> cells;
};

struct SpecialMembership {
  bool special_in_x = false;
  bool lambda_in_x = false;
};

}  // namespace coxtrace
