#pragma once

#include <json.hpp>

#include <sstream>

#include "coxtrace/dihedral.hpp"
#include "coxtrace/hecke.hpp"
#include "coxtrace/report_types.hpp"

namespace coxtrace {

using Json = nlohmann::ordered_json;

inline Json cell_index_json(int index_twice) {
  if (index_twice % 2 == 0) return Json(index_twice / 2);
  return Json(std::to_string(index_twice) + "/2");
}

inline Json to_json(const CellDecomposition& dec) {
  Json out;
  out["type"] = dec.type;
  out["rank"] = dec.rank;
  out["h"] = dec.h;
  out["cells"] = Json::array();
  for (const auto& cell : dec.cells) {
    Json c;
    c["index"] = cell_index_json(cell.index_twice);
    c["gamma"] = cell.gamma;
    c["p"] = cell.p ? Json(*cell.p) : Json(nullptr);
    c["epsilon"] = Json::array();
    for (const auto& term : cell.epsilon)
      c["epsilon"].push_back(Json{{"label", term.label}, {"sign", term.sign}});
    c["special"] = cell.special ? Json(*cell.special) : Json(nullptr);
    out["cells"].push_back(std::move(c));
  }
  return out;
}

inline Json to_json(const TraceReport& rep) {
  Json out;
  out["type"] = rep.type;
  out["rank"] = rep.rank;
  out["h"] = rep.h;
  out["traces"] = Json::array();
  for (const auto& e : rep.entries) {
    Json t;
    t["label"] = e.label;
    t["trace"] = e.trace;
    t["cell"] = e.cell_twice ? cell_index_json(*e.cell_twice) : Json(nullptr);
    t["m"] = e.m_exponent ? Json(*e.m_exponent) : Json(nullptr);
    out["traces"].push_back(std::move(t));
  }
  return out;
}

inline Json to_json(const DihedralDecomposition& dec) {
  Json out;
  out["type"] = "I2";
  out["m"] = dec.m;
  out["h"] = dec.h;
  out["cells"] = Json::array();
  for (const auto& cell : dec.cells) {
    Json c;
    c["index"] = cell.index;
    c["epsilon"] = Json::array();
    for (const auto& term : cell.terms)
      c["epsilon"].push_back(Json{{"label", term.label}, {"coeff", term.coefficient.str()}});
    out["cells"].push_back(std::move(c));
  }
  return out;
}

inline Json laurent_json(const LaurentQ& f) {
  Json out = Json::object();
  for (const auto& [e, c] : f.terms()) out[std::to_string(e)] = to_string(c);
  return out;
}

inline Json laurent_json(const LaurentCyc& f) {
  Json out = Json::object();
  for (const auto& [e, c] : f.terms()) out[std::to_string(e)] = c.str();
  return out;
}

inline Json to_json(const HeckeTraceRecord& rec) {
  Json out;
  out["label"] = rec.label;
  out["trace_poly"] = laurent_json(rec.trace_poly);
  out["m"] = rec.m_exponent ? Json(*rec.m_exponent) : Json(nullptr);
  out["trace_at_1"] = rec.trace_at_one;
  return out;
}

inline Json to_json(const DihedralHeckeRecord& rec) {
  Json out;
  out["label"] = rec.label;
  out["trace_poly"] = laurent_json(rec.trace_poly);
  out["m"] = rec.m_exponent ? Json(*rec.m_exponent) : Json(nullptr);
  out["coefficient"] = rec.coefficient.str();
  return out;
}

// --- text rendering -------------------------------------------------------

inline std::string to_text(const CellDecomposition& dec) {
  std::ostringstream out;
  out << dec.type << dec.rank << "  h=" << dec.h << "\n";
  for (const auto& cell : dec.cells) {
    out << "c" << (cell.index_twice % 2 == 0 ? std::to_string(cell.index_twice / 2)
                                             : "^" + std::to_string(cell.index_twice) + "/2");
    out << " [" << cell.gamma << "]";
    if (cell.p) out << " p=" << *cell.p;
    if (cell.special) out << " special=" << *cell.special;
    out << " :";
    for (const auto& term : cell.epsilon)
      out << " " << (term.sign > 0 ? "+" : "-") << "(" << term.label << ")";
    out << "\n";
  }
  return out.str();
}

inline std::string to_text(const TraceReport& rep) {
  std::ostringstream out;
  out << rep.type << rep.rank << "  h=" << rep.h << "  nonzero=" << rep.nonzero_count() << "\n";
  for (const auto& e : rep.entries) {
    out << e.label << "  trace=" << e.trace;
    if (e.cell_twice) out << "  cell=" << cell_index_json(*e.cell_twice).dump();
    if (e.m_exponent) out << "  m=" << *e.m_exponent;
    out << "\n";
  }
  return out.str();
}

inline std::string to_text(const DihedralDecomposition& dec) {
  std::ostringstream out;
  out << "I2(" << dec.m << ")  h=" << dec.h << "\n";
  for (const auto& cell : dec.cells) {
    out << "c" << cell.index << " :";
    for (const auto& term : cell.terms)
      out << " (" << term.coefficient.str() << ")*" << term.label;
    out << "\n";
  }
  return out.str();
}

// --- CSV rendering ----------------------------------------------------------

inline std::string csv_quote(const std::string& field) {
  return "\"" + field + "\"";  // labels contain commas
}

inline std::string to_csv(const CellDecomposition& dec) {
  std::ostringstream out;
  out << "type,rank,cell,gamma,p,special,label,sign\n";
  for (const auto& cell : dec.cells)
    for (const auto& term : cell.epsilon) {
      out << dec.type << "," << dec.rank << "," << cell.index_str() << "," << cell.gamma << ",";
      if (cell.p) out << *cell.p;
      out << ",";
      if (cell.special) out << csv_quote(*cell.special);
      out << "," << csv_quote(term.label) << "," << term.sign << "\n";
    }
  return out.str();
}

inline std::string to_csv(const TraceReport& rep) {
  std::ostringstream out;
  out << "type,rank,label,trace,cell,m\n";
  for (const auto& e : rep.entries) {
    out << rep.type << "," << rep.rank << "," << csv_quote(e.label) << "," << e.trace << ",";
    if (e.cell_twice) out << CellView{*e.cell_twice}.index_str();
    out << ",";
    if (e.m_exponent) out << *e.m_exponent;
    out << "\n";
  }
  return out.str();
}

inline std::string to_csv(const DihedralDecomposition& dec) {
  std::ostringstream out;
  out << "m,cell,label,coeff\n";
  for (const auto& cell : dec.cells)
    for (const auto& term : cell.terms)
      out << dec.m << "," << cell.index << "," << csv_quote(term.label) << ","
          << csv_quote(term.coefficient.str()) << "\n";
  return out.str();
}

}  // namespace coxtrace
