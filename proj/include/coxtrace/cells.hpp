#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxtrace/characters.hpp"
#include "coxtrace/report_types.hpp"

namespace coxtrace {

namespace detail {

// Everything the cell grouping needs to know about one irreducible label.
struct LabelInfo {
  std::string text;
  std::vector<unsigned> key;  // symbol-entry multiset (partition itself in type A)
  int split_tag = 0;          // distinguishes the two halves of a degenerate D pair
  long long trace = 0;
  long a = 0;
  long b = 0;
  std::optional<unsigned> wedge_index;       // i when this is Lambda^i
  std::vector<unsigned> sort_major, sort_minor;  // symbol rows, for report order
};

inline std::vector<LabelInfo> classical_labels(const CoxeterDatum& d) {
  std::vector<LabelInfo> out;
  if (d.family == Family::A) {
    unsigned n = d.rank + 1;
    std::vector<unsigned> cox_class{n};
    for (const auto& lam : partitions_of(n)) {
      LabelInfo info;
      info.text = lam.str();
      info.key = lam.parts();
      info.trace = mn_character(lam, cox_class);
      info.a = a_value_a(lam);
      info.b = b_value_a(lam);
      if (lam.is_hook()) info.wedge_index = n - lam.part(0);
      info.sort_major = lam.parts();
      out.push_back(std::move(info));
    }
  } else if (d.family == Family::B) {
    unsigned n = d.rank;
    SignedCycleType cox_class;
    cox_class.negative = {n};
    for (const auto& bp : bipartitions_of(n)) {
      LabelInfo info;
      Symbol s = symbol_of_b(bp);
      info.text = s.str();
      info.key = s.family_key();
      info.trace = hyperoctahedral_character(bp, cox_class);
      info.a = a_value_of_key(info.key, 1);
      info.b = b_value_b(bp);
      for (unsigned i = 0; i <= n; ++i) {
        Bipartition wedge{i < n ? Partition(std::vector<unsigned>{n - i}) : Partition(),
                          i > 0 ? Partition(std::vector<unsigned>(i, 1)) : Partition()};
        if (bp == wedge) info.wedge_index = i;
      }
      info.sort_major = s.top;
      info.sort_minor = s.bottom;
      out.push_back(std::move(info));
    }
  } else if (d.family == Family::D) {
    unsigned n = d.rank;
    for (const auto& label : d_labels_of(n)) {
      LabelInfo info;
      Symbol s = symbol_of_d(label);
      info.text = label.str();
      info.key = s.family_key();
      info.split_tag = label.split == SplitTag::none ? 0 : (label.split == SplitTag::plus ? 1 : -1);
      info.trace = d_coxeter_trace(n, label);
      info.a = a_value_of_key(info.key, 0);
      info.b = b_value_d(label);
      for (unsigned i = 0; i <= n; ++i) {
        Partition pa = i < n ? Partition(std::vector<unsigned>{n - i}) : Partition();
        Partition pb = i > 0 ? Partition(std::vector<unsigned>(i, 1)) : Partition();
        if (label == make_d_label(pa, pb)) info.wedge_index = i;
      }
      info.sort_major = s.top;
      info.sort_minor = s.bottom;
      out.push_back(std::move(info));
    }
  } else {
    throw capability_error("classical_labels: A, B, D only");
  }
  return out;
}

}  // namespace detail

// Traces of the Coxeter class on every irreducible, with family membership
// data.  The Coxeter classes are pinned as: an n-cycle (A), one negative
// n-cycle (B), a negative (n-1)-cycle times a negative 1-cycle (D).
struct ClassicalAnalysis {
  CoxeterDatum datum;
  TraceReport report;
  CellDecomposition cells;
};

inline ClassicalAnalysis classical_analysis(const CoxeterDatum& d) {
  auto labels = detail::classical_labels(d);
  unsigned r = d.rank;
  unsigned h = d.coxeter_number();

  // group into families
  using FamilyKey = std::pair<std::vector<unsigned>, int>;
  std::map<FamilyKey, std::vector<std::size_t>> families;
  for (std::size_t idx = 0; idx < labels.size(); ++idx)
    families[{labels[idx].key, labels[idx].split_tag}].push_back(idx);

  // locate the wedge families c_i
  std::map<FamilyKey, unsigned> cell_of;
  for (const auto& info : labels)
    if (info.wedge_index) cell_of[{info.key, info.split_tag}] = *info.wedge_index;

  ClassicalAnalysis out;
  out.datum = d;
  out.report.type = family_name(d.family);
  out.report.rank = r;
  out.report.h = h;
  out.cells.type = family_name(d.family);
  out.cells.rank = r;
  out.cells.h = h;

  for (const auto& [key, members] : families) {
    long a0 = labels[members.front()].a;
    for (std::size_t idx : members)
      if (labels[idx].a != a0)
        throw consistency_error("a-value not constant on family " + labels[idx].text);
    auto it = cell_of.find(key);
    if (it == cell_of.end()) {
      // Cells that never meet the wedge ladder carry no trace.
      for (std::size_t idx : members)
        if (labels[idx].trace != 0)
          throw consistency_error("nonzero trace outside the c_i ladder: " + labels[idx].text);
      continue;
    }
    unsigned i = it->second;
    if (members.size() != 1 && members.size() != 3)
      throw consistency_error("unexpected c_i family size in a classical group");

    CellView cell;
    cell.index_twice = static_cast<int>(2 * i);
    cell.gamma = members.size() == 1 ? "S1" : "S2";
    cell.a_value = a0;

    long f = members.size() == 1 ? 1 : 2;
    Rational p(0);
    std::vector<std::size_t> nonzero;
    std::size_t special_count = 0;
    for (std::size_t idx : members) {
      const auto& info = labels[idx];
      cell.members.push_back(info.text);
      p += make_rational(static_cast<long>(info.trace), f);
      if (info.trace != 0) nonzero.push_back(idx);
      if (info.a == info.b) {
        cell.special = info.text;
        ++special_count;
      }
    }
    if (special_count != 1)
      throw consistency_error("family without a unique special member (cell " +
                              std::to_string(i) + ")");
    if (!is_integer(p)) throw consistency_error("p_i not an integer at cell " + std::to_string(i));
    cell.p = to_long(p);

    std::sort(nonzero.begin(), nonzero.end(), [&](std::size_t x, std::size_t y) {
      if (labels[x].sort_major != labels[y].sort_major)
        return labels[x].sort_major < labels[y].sort_major;
      return labels[x].sort_minor < labels[y].sort_minor;
    });
    for (std::size_t idx : nonzero)
      cell.epsilon.push_back(EpsilonTerm{labels[idx].text, labels[idx].trace > 0 ? 1 : -1});

    out.cells.cells.push_back(std::move(cell));
  }
  std::sort(out.cells.cells.begin(), out.cells.cells.end(),
            [](const CellView& x, const CellView& y) { return x.index_twice < y.index_twice; });

  for (const auto& info : labels) {
    TraceEntry e;
    e.label = info.text;
    e.trace = info.trace;
    auto it = cell_of.find({info.key, info.split_tag});
    if (it != cell_of.end()) e.cell_twice = static_cast<int>(2 * it->second);
    if (info.trace != 0) {
      if (it == cell_of.end())
        throw consistency_error("nonzero trace without a cell index: " + info.text);
      e.m_exponent = 2L * r - 2L * it->second;
    }
    out.report.entries.push_back(std::move(e));
  }
  return out;
}

inline TraceReport trace_report(const CoxeterDatum& d) { return classical_analysis(d).report; }
inline CellDecomposition cell_decomposition(const CoxeterDatum& d) {
  return classical_analysis(d).cells;
}

// The §-series Gamma sequence expected along c_0..c_r.
inline std::vector<std::string> expected_gamma_sequence(const CoxeterDatum& d) {
  unsigned r = d.rank;
  std::vector<std::string> g(r + 1, "S2");
  switch (d.family) {
    case Family::A:
      std::fill(g.begin(), g.end(), "S1");
      break;
    case Family::B:
      g.front() = g.back() = "S1";
      break;
    case Family::D:
      g[0] = g[1] = g[r - 1] = g[r] = "S1";
      break;
    case Family::E6: g = {"S1", "S1", "S2", "S3", "S2", "S1", "S1"}; break;
    case Family::E7: g = {"S1", "S1", "S2", "S3", "S3", "S2", "S1", "S1"}; break;
    case Family::E8: g = {"S1", "S1", "S2", "S3", "S5", "S3", "S2", "S1", "S1"}; break;
    case Family::F4: g = {"S1", "S2", "S4", "S2", "S1"}; break;
    case Family::G2: g = {"S1", "S3", "S1"}; break;
    default:
      throw capability_error("expected_gamma_sequence: Weyl groups only");
  }
  return g;
}

// f_E for classical labels in families that meet the wedge ladder (or are
// singletons): 1 on singleton families, 2 on the members of the two-term
// epsilon cells.
inline long f_value(const CoxeterDatum& d, const std::string& label_text) {
  auto labels = detail::classical_labels(d);
  const detail::LabelInfo* found = nullptr;
  for (const auto& info : labels)
    if (info.text == label_text) found = &info;
  if (!found) throw invalid_input("f_value: unknown label " + label_text);
  std::size_t family_size = 0;
  bool has_wedge = false;
  for (const auto& info : labels)
    if (info.key == found->key && info.split_tag == found->split_tag) {
      ++family_size;
      has_wedge = has_wedge || info.wedge_index.has_value();
    }
  if (family_size == 1) return 1;
  if (has_wedge && family_size == 3) return 2;
  throw capability_error("f_value: label lies outside the wedge-ladder cells");
}

inline SpecialMembership special_membership(const CoxeterDatum& d, unsigned i) {
  auto analysis = classical_analysis(d);
  for (const auto& cell : analysis.cells.cells) {
    if (cell.index_twice != static_cast<int>(2 * i)) continue;
    SpecialMembership sm;
    for (const auto& term : cell.epsilon) {
      if (cell.special && term.label == *cell.special) sm.special_in_x = true;
    }
    // Lambda^i is the unique wedge label of the cell; reconstruct its text.
    std::string lambda_text;
    unsigned n = d.family == Family::A ? d.rank + 1 : d.rank;
    if (d.family == Family::A) {
      lambda_text = Partition::hook(n, i).str();
    } else if (d.family == Family::B) {
      Bipartition wedge{i < n ? Partition(std::vector<unsigned>{n - i}) : Partition(),
                        i > 0 ? Partition(std::vector<unsigned>(i, 1)) : Partition()};
      lambda_text = symbol_of_b(wedge).str();
    } else {
      Partition pa = i < n ? Partition(std::vector<unsigned>{n - i}) : Partition();
      Partition pb = i > 0 ? Partition(std::vector<unsigned>(i, 1)) : Partition();
      lambda_text = make_d_label(pa, pb).str();
    }
    for (const auto& term : cell.epsilon)
      if (term.label == lambda_text) sm.lambda_in_x = true;
    return sm;
  }
  throw invalid_input("special_membership: no cell with index " + std::to_string(i));
}

}  // namespace coxtrace
