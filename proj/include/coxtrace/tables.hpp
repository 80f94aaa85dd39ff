#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxtrace/cells.hpp"
#include "coxtrace/cyclotomic.hpp"
#include "coxtrace/tables_data.hpp"

namespace coxtrace {

namespace detail {

inline unsigned long long fnv1a64(std::string_view text) {
  unsigned long long h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// "z5+z5^4", "-z5^2-z5^3", "-1", "2*z12^3": sums of signed monomials in a
// single root of unity.
inline Cyclotomic parse_cyclotomic(const std::string& text) {
  Cyclotomic value;
  std::size_t i = 0;
  auto fail = [&]() { throw data_integrity_error("bad cyclotomic literal: " + text); };
  while (i < text.size()) {
    long sign = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    }
    if (i >= text.size()) fail();
    long coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        coeff = coeff * 10 + (text[i++] - '0');
      if (i < text.size() && text[i] == '*') ++i;
    }
    if (i < text.size() && text[i] == 'z') {
      ++i;
      unsigned m = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        m = m * 10 + (text[i++] - '0');
      if (m == 0) fail();
      long e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          e = e * 10 + (text[i++] - '0');
      }
      value += Cyclotomic(Rational(sign * coeff)) * Cyclotomic::zeta(m, e);
    } else {
      value += Cyclotomic(Rational(sign * coeff));
    }
  }
  return value;
}

}  // namespace detail

// One epsilon term of a stored table: a coefficient (a sign for the Weyl
// tables, a cyclotomic for H3/H4), the label d_b, and the f denominator
// paired to it when catalogued.
struct TableTerm {
  Cyclotomic coeff;
  std::string name;
  unsigned dim = 0;
  unsigned b = 0;
  std::optional<long> f;
};

struct TableCell {
  int index_twice = 0;
  std::string gamma;  // "S1".."S5", "ex", or "-" when not catalogued
  std::optional<std::string> special;
  std::vector<TableTerm> terms;

  bool exceptional() const { return gamma == "ex"; }
};

struct ExceptionalTable {
  Family family = Family::E6;
  unsigned rank = 0;
  unsigned h = 0;
  unsigned nu = 0;
  std::vector<unsigned> exponents;
  long regular_sum = 0;  // stored value of sum coeff * dim over all terms
  std::vector<TableCell> cells;
};

inline std::pair<std::string_view, unsigned long long> table_source(Family f) {
  switch (f) {
    case Family::E6: return {tables_data::kE6, tables_data::kE6Checksum};
    case Family::E7: return {tables_data::kE7, tables_data::kE7Checksum};
    case Family::E8: return {tables_data::kE8, tables_data::kE8Checksum};
    case Family::F4: return {tables_data::kF4, tables_data::kF4Checksum};
    case Family::G2: return {tables_data::kG2, tables_data::kG2Checksum};
    case Family::H3: return {tables_data::kH3, tables_data::kH3Checksum};
    case Family::H4: return {tables_data::kH4, tables_data::kH4Checksum};
    default: throw invalid_input("table_source: no stored table for this family");
  }
}

inline ExceptionalTable parse_table(std::string_view text) {
  ExceptionalTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_type = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "type") {
      std::string name;
      ls >> name;
      if (name == "E6") t.family = Family::E6;
      else if (name == "E7") t.family = Family::E7;
      else if (name == "E8") t.family = Family::E8;
      else if (name == "F4") t.family = Family::F4;
      else if (name == "G2") t.family = Family::G2;
      else if (name == "H3") t.family = Family::H3;
      else if (name == "H4") t.family = Family::H4;
      else throw data_integrity_error("unknown table type " + name);
      have_type = true;
    } else if (head == "rank") {
      ls >> t.rank;
    } else if (head == "h") {
      ls >> t.h;
    } else if (head == "nu") {
      ls >> t.nu;
    } else if (head == "exponents") {
      unsigned e;
      while (ls >> e) t.exponents.push_back(e);
    } else if (head == "regular-sum") {
      ls >> t.regular_sum;
    } else if (head == "cell") {
      std::string index_text, kw1, gamma, kw2, special;
      ls >> index_text >> kw1 >> gamma >> kw2 >> special;
      if (kw1 != "gamma" || kw2 != "special")
        throw data_integrity_error("malformed cell line: " + line);
      TableCell cell;
      auto slash = index_text.find('/');
      if (slash == std::string::npos) {
        cell.index_twice = 2 * std::stoi(index_text);
      } else {
        if (index_text.substr(slash + 1) != "2")
          throw data_integrity_error("cell index must be integral or halves: " + line);
        cell.index_twice = std::stoi(index_text.substr(0, slash));
      }
      cell.gamma = gamma;
      if (special != "-") cell.special = special;
      t.cells.push_back(std::move(cell));
    } else if (head == "term") {
      if (t.cells.empty()) throw data_integrity_error("term before any cell");
      std::string coeff_text, label, f_text;
      ls >> coeff_text >> label >> f_text;
      TableTerm term;
      term.coeff = detail::parse_cyclotomic(coeff_text);
      term.name = label;
      std::size_t pos = 0;
      while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos])))
        term.dim = term.dim * 10 + (label[pos++] - '0');
      while (pos < label.size() && label[pos] == '\'') ++pos;
      if (pos >= label.size() || label[pos] != '_')
        throw data_integrity_error("bad label " + label);
      ++pos;
      while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos])))
        term.b = term.b * 10 + (label[pos++] - '0');
      if (f_text != "-") term.f = std::stol(f_text);
      t.cells.back().terms.push_back(std::move(term));
    } else {
      throw data_integrity_error("unknown table line: " + line);
    }
  }
  if (!have_type || t.rank == 0 || t.h == 0)
    throw data_integrity_error("incomplete table header");
  return t;
}

inline ExceptionalTable load_table(Family f) {
  auto [text, checksum] = table_source(f);
  if (detail::fnv1a64(text) != checksum)
    throw data_integrity_error("table checksum mismatch for " + family_name(f));
  return parse_table(text);
}

// --- verification -------------------------------------------------------------

struct CheckLine {
  std::string clause;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string table;
  std::vector<CheckLine> lines;

  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  void add(const std::string& clause, bool pass, const std::string& detail = "") {
    lines.push_back(CheckLine{clause, pass, detail});
  }
};

namespace detail {

inline unsigned expected_term_count(const std::string& gamma) {
  if (gamma == "S1") return 1;
  if (gamma == "S2") return 2;
  if (gamma == "S3") return 4;
  if (gamma == "S4") return 6;
  if (gamma == "S5") return 10;
  if (gamma == "ex") return 2;
  throw data_integrity_error("no term count for gamma " + gamma);
}

// Data of the wedge representation Lambda^i: dimension C(r, i) and
// fake-degree valuation m_1 + ... + m_i.
inline std::pair<unsigned, unsigned> wedge_dim_b(const ExceptionalTable& t, unsigned i) {
  Int dim = binomial(t.rank, i);
  unsigned b = 0;
  for (unsigned k = 0; k < i; ++k) b += t.exponents[k];
  return {static_cast<unsigned>(dim.get_ui()), b};
}

inline bool cell_has_dim_b(const TableCell& cell, unsigned dim, unsigned b) {
  for (const auto& term : cell.terms)
    if (term.dim == dim && term.b == b) return true;
  return false;
}

}  // namespace detail

// Machine checks on a stored Weyl-type table: term counts, orthogonality,
// p_i integrality against the case table, the wedge-membership and
// special-membership patterns, boundary cells, exceptional-cell structure,
// and the stored regular-character sum.
inline VerifyReport verify_exceptional(Family f) {
  auto t = load_table(f);
  auto datum = CoxeterDatum::make(f, t.rank);
  VerifyReport report;
  report.table = family_name(f);
  bool simply = datum.simply_laced();

  report.add("header numerology",
             t.h == datum.coxeter_number() && t.nu == datum.positive_roots() &&
                 t.exponents == datum.exponents(),
             "h, nu, exponents");

  // gamma sequence along the integral cells
  {
    auto expect = expected_gamma_sequence(datum);
    std::vector<std::string> got;
    for (const auto& cell : t.cells)
      if (!cell.exceptional()) got.push_back(cell.gamma);
    report.add("gamma sequence", got == expect);
  }

  // term counts per cell
  {
    bool ok = true;
    for (const auto& cell : t.cells)
      ok = ok && cell.terms.size() == detail::expected_term_count(cell.gamma);
    report.add("term counts match the gamma groups", ok);
  }

  // exceptional-cell inventory
  {
    std::vector<int> got;
    for (const auto& cell : t.cells)
      if (cell.exceptional()) got.push_back(cell.index_twice);
    std::vector<int> expect;
    if (f == Family::E7) expect = {7};
    if (f == Family::E8) expect = {7, 9};
    report.add("exceptional cell inventory", got == expect);
  }

  // orthogonality: every coefficient is +-1 and the total count is h
  {
    bool signs_ok = true;
    unsigned long total = 0;
    for (const auto& cell : t.cells) {
      for (const auto& term : cell.terms) {
        signs_ok = signs_ok && term.coeff.is_rational() &&
                   (term.coeff.rational_value() == 1 || term.coeff.rational_value() == -1);
        ++total;
      }
    }
    report.add("traces lie in {+1,-1} on the support", signs_ok);
    report.add("sum of squared traces = h", total == t.h,
               std::to_string(total) + " = " + std::to_string(t.h));
  }

  // p_i from the stored fractions
  {
    bool ok = true;
    std::string detail;
    for (const auto& cell : t.cells) {
      Rational p(0);
      bool have_f = true;
      for (const auto& term : cell.terms) {
        if (!term.f) {
          have_f = false;
          break;
        }
        long sign = term.coeff.rational_value() > 0 ? 1 : -1;
        p += make_rational(sign, *term.f);
      }
      if (!have_f) {
        ok = false;
        continue;
      }
      if (!is_integer(p)) {
        ok = false;
        detail += cell.gamma + " cell not integral; ";
        continue;
      }
      long got = to_long(p);
      if (cell.exceptional()) continue;  // integrality only
      int i = cell.index_twice / 2;
      long expect = 0;
      if (cell.gamma == "S1") expect = i % 2 == 0 ? 1 : -1;
      else if (cell.gamma == "S2") expect = simply ? 0 : (i % 2 == 0 ? 1 : -1);
      else if (cell.gamma == "S3") expect = simply ? 0 : 1;
      else expect = 0;  // S4, S5
      if (got != expect) {
        ok = false;
        detail += "cell " + std::to_string(i) + ": p = " + std::to_string(got) + "; ";
      }
    }
    report.add("p_i integral and matching the case table", ok, detail);
  }

  // wedge membership per the case table
  {
    bool ok = true;
    for (const auto& cell : t.cells) {
      if (cell.exceptional()) continue;
      unsigned i = static_cast<unsigned>(cell.index_twice / 2);
      auto [dim, b] = detail::wedge_dim_b(t, i);
      bool present = detail::cell_has_dim_b(cell, dim, b);
      bool expect;
      if (cell.gamma == "S1") expect = true;
      else if (cell.gamma == "S2") expect = false;
      else expect = true;  // S3 (either lacing), S4, S5
      ok = ok && present == expect;
    }
    report.add("wedge membership matches the case table", ok);
  }

  // special membership per the case table, where the special is recorded
  {
    bool ok = true;
    for (const auto& cell : t.cells) {
      if (cell.exceptional() || !cell.special) continue;
      bool present = false;
      for (const auto& term : cell.terms) present = present || term.name == *cell.special;
      bool expect;
      if (cell.gamma == "S1") expect = true;
      else if (cell.gamma == "S2") expect = simply;
      else if (cell.gamma == "S3") expect = !simply;
      else expect = true;  // S4, S5
      ok = ok && present == expect;
    }
    report.add("special membership matches the case table", ok);
  }

  // boundary cells: c_0 = +1_0 and c_r = (-1)^r 1_nu
  {
    const auto& first = t.cells.front();
    const auto& last = t.cells.back();
    bool ok = first.terms.size() == 1 && first.terms[0].name == "1_0" &&
              first.terms[0].coeff == Cyclotomic(Rational(1));
    long sign_r = t.rank % 2 == 0 ? 1 : -1;
    ok = ok && last.terms.size() == 1 &&
         last.terms[0].name == "1_" + std::to_string(t.nu) &&
         last.terms[0].coeff == Cyclotomic(Rational(sign_r));
    report.add("boundary cells are the trivial and sign ladders", ok);
  }

  // exceptional pairs: equal dimensions, opposite signs
  {
    bool ok = true;
    for (const auto& cell : t.cells) {
      if (!cell.exceptional()) continue;
      ok = ok && cell.terms.size() == 2 && cell.terms[0].dim == cell.terms[1].dim &&
           (cell.terms[0].coeff + cell.terms[1].coeff).is_zero();
    }
    report.add("exceptional cells are opposite-sign pairs of equal dimension", ok);
  }

  // regular-character sum over the stored support
  {
    long sum = 0;
    for (const auto& cell : t.cells)
      for (const auto& term : cell.terms)
        sum += (term.coeff.rational_value() > 0 ? 1 : -1) * static_cast<long>(term.dim);
    report.add("regular-character sum equals the recorded value", sum == t.regular_sum,
               std::to_string(sum));
  }

  return report;
}

// The Hecke exponents implied by the cell indices: m = 2r - 2i, listed per
// cell.  Half-integer cells yield odd exponents.
struct Prop33Line {
  int index_twice;
  long m;
  unsigned terms;
};

inline std::vector<Prop33Line> prop33_cross_check(Family f) {
  auto t = load_table(f);
  std::vector<Prop33Line> out;
  for (const auto& cell : t.cells) {
    long m = 2L * t.rank - cell.index_twice;
    if (m < 0) throw data_integrity_error("negative Hecke exponent in stored table");
    if (cell.index_twice % 2 != 0 && m % 2 == 0)
      throw data_integrity_error("half-integral cell with even exponent");
    out.push_back(Prop33Line{cell.index_twice, m, static_cast<unsigned>(cell.terms.size())});
  }
  return out;
}

// Checks on the H3/H4 tables: exact orthogonality over Q(z5), the
// exceptional-cell inventory, wedge membership along the integral cells,
// boundary labels, real (self-conjugate) coefficients, and the recorded
// regular-character sum.
inline VerifyReport verify_h_type(Family f) {
  if (f != Family::H3 && f != Family::H4)
    throw invalid_input("verify_h_type: H3 or H4 only");
  auto t = load_table(f);
  auto datum = CoxeterDatum::make(f, t.rank);
  VerifyReport report;
  report.table = family_name(f);

  report.add("header numerology",
             t.h == datum.coxeter_number() && t.nu == datum.positive_roots() &&
                 t.exponents == datum.exponents());

  {
    Cyclotomic total;
    for (const auto& cell : t.cells)
      for (const auto& term : cell.terms) total += term.coeff * term.coeff;
    report.add("sum of squared traces = h",
               total == Cyclotomic(Rational(static_cast<long>(t.h))),
               "exact value " + total.str());
  }

  {
    std::vector<int> got;
    for (const auto& cell : t.cells)
      if (cell.exceptional()) got.push_back(cell.index_twice);
    std::vector<int> expect = f == Family::H3 ? std::vector<int>{3} : std::vector<int>{3, 5};
    report.add("exceptional cell inventory", got == expect);
  }

  {
    // nonzero cells are exactly c_0..c_r plus the exceptional ones
    std::vector<int> integral;
    for (const auto& cell : t.cells)
      if (!cell.exceptional()) integral.push_back(cell.index_twice);
    std::vector<int> expect;
    for (unsigned i = 0; i <= t.rank; ++i) expect.push_back(static_cast<int>(2 * i));
    bool nonempty = true;
    for (const auto& cell : t.cells) nonempty = nonempty && !cell.terms.empty();
    report.add("support is the wedge ladder plus exceptional cells",
               integral == expect && nonempty);
  }

  {
    bool ok = true;
    for (const auto& cell : t.cells) {
      if (cell.exceptional()) continue;
      unsigned i = static_cast<unsigned>(cell.index_twice / 2);
      auto [dim, b] = detail::wedge_dim_b(t, i);
      ok = ok && detail::cell_has_dim_b(cell, dim, b);
    }
    report.add("wedge members appear in their cells", ok);
  }

  {
    bool ok = true;
    for (const auto& cell : t.cells) {
      if (!cell.exceptional()) continue;
      ok = ok && cell.terms.size() == 2 && cell.terms[0].dim == cell.terms[1].dim &&
           (cell.terms[0].coeff + cell.terms[1].coeff).is_zero();
    }
    report.add("exceptional cells are opposite-sign pairs of equal dimension", ok);
  }

  {
    bool ok = true;
    for (const auto& cell : t.cells)
      for (const auto& term : cell.terms) ok = ok && term.coeff == term.coeff.conjugate();
    report.add("all coefficients are real", ok);
  }

  {
    const auto& first = t.cells.front();
    const auto& last = t.cells.back();
    bool ok = first.terms.size() == 1 && first.terms[0].name == "1_0";
    ok = ok && last.terms.size() == 1 && last.terms[0].name == "1_" + std::to_string(t.nu);
    report.add("boundary cells carry the trivial and sign labels", ok);
  }

  {
    Cyclotomic sum;
    for (const auto& cell : t.cells)
      for (const auto& term : cell.terms)
        sum += term.coeff * Cyclotomic(Rational(static_cast<long>(term.dim)));
    report.add("regular-character sum equals the recorded value",
               sum == Cyclotomic(Rational(t.regular_sum)), sum.is_rational() ? sum.str() : "irrational");
  }

  return report;
}

// Report views built from stored tables, for the CLI and golden outputs.
inline TraceReport table_trace_report(Family f) {
  auto t = load_table(f);
  TraceReport rep;
  rep.type = family_name(f);
  rep.rank = t.rank;
  rep.h = t.h;
  for (const auto& cell : t.cells) {
    for (const auto& term : cell.terms) {
      TraceEntry e;
      e.label = term.name;
      e.trace = term.coeff.is_rational() && is_integer(term.coeff.rational_value())
                    ? to_long(term.coeff.rational_value())
                    : 0;
      e.cell_twice = cell.index_twice;
      e.m_exponent = 2L * t.rank - cell.index_twice;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

inline CellDecomposition table_cell_decomposition(Family f) {
  auto t = load_table(f);
  CellDecomposition dec;
  dec.type = family_name(f);
  dec.rank = t.rank;
  dec.h = t.h;
  for (const auto& cell : t.cells) {
    CellView view;
    view.index_twice = cell.index_twice;
    view.gamma = cell.gamma;
    view.special = cell.special;
    Rational p(0);
    bool have_f = true, integral = true;
    for (const auto& term : cell.terms) {
      int sign = 0;
      if (term.coeff.is_rational() && is_integer(term.coeff.rational_value()))
        sign = static_cast<int>(to_long(term.coeff.rational_value()));
      else
        integral = false;
      view.epsilon.push_back(EpsilonTerm{term.name, sign});
      view.members.push_back(term.name);
      if (term.f)
        p += make_rational(sign, *term.f);
      else
        have_f = false;
    }
    if (have_f && integral && is_integer(p)) view.p = to_long(p);
    dec.cells.push_back(std::move(view));
  }
  return dec;
}

}  // namespace coxtrace
