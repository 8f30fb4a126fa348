#include "qent/reports.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qent/errors.hpp"
#include "qent/io.hpp"

namespace qent::reports {

namespace {

using io::format_full;

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string brief(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// JSON value for a double; NaN (an indeterminate entropy) becomes null.
std::string jnum(double v) { return std::isnan(v) ? "null" : format_full(v); }

double num_or_nan(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

void append_diag_json(std::ostringstream& os, const Diagnostics& d,
                      const std::vector<ClampRecord<double>>& clamps) {
  os << "\"diagnostics\": {\"herm_tol\": " << jnum(d.herm_tol)
     << ", \"trace_tol\": " << jnum(d.trace_tol) << ", \"psd_tol\": " << jnum(d.psd_tol)
     << ", \"clamped\": [";
  for (std::size_t i = 0; i < clamps.size(); ++i) {
    if (i > 0) os << ", ";
    os << "{\"matrix\": \"" << clamps[i].matrix << "\", \"count\": " << clamps[i].count
       << ", \"min_eigenvalue\": " << jnum(clamps[i].min_eigenvalue) << '}';
  }
  os << "]}";
}

void append_diag_table(std::ostringstream& os,
                       const std::vector<ClampRecord<double>>& clamps) {
  for (const auto& c : clamps)
    os << "note: clamped " << c.count << " eigenvalue(s) of " << c.matrix
       << " to zero (min " << brief(c.min_eigenvalue) << ")\n";
}

std::vector<ClampRecord<double>> parse_clamps(const nlohmann::json& diag) {
  std::vector<ClampRecord<double>> out;
  if (!diag.contains("clamped")) return out;
  for (const auto& c : diag["clamped"])
    out.push_back({c.at("matrix").get<std::string>(), c.at("count").get<int>(),
                   num_or_nan(c.at("min_eigenvalue"))});
  return out;
}

nlohmann::json parse_json_or_throw(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ParseError("unknown format \"" + name + "\" (table|csv|json)");
}

const char* kind_name(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::QubitQutrit: return "qubit-qutrit";
    case PartitionKind::QutritQubit: return "qutrit-qubit";
    case PartitionKind::ThreeQubit: return "three-qubit";
  }
  return "";
}

const char* mode_name(ReductionMode mode) {
  return mode == ReductionMode::PaperFaithful ? "paper" : "canonical";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "";
}

namespace {

PartitionKind kind_from_name(const std::string& s) {
  if (s == "qubit-qutrit") return PartitionKind::QubitQutrit;
  if (s == "qutrit-qubit") return PartitionKind::QutritQubit;
  if (s == "three-qubit") return PartitionKind::ThreeQubit;
  throw ParseError("unknown scheme \"" + s + "\"");
}

Verdict verdict_from_name(const std::string& s) {
  if (s == "holds") return Verdict::Holds;
  if (s == "violated") return Verdict::Violated;
  if (s == "indeterminate") return Verdict::Indeterminate;
  throw ParseError("unknown verdict \"" + s + "\"");
}

}  // namespace

std::string render(const SubadditivityReport<double>& rep, Format fmt,
                   const Diagnostics& diag) {
  std::ostringstream os;
  switch (fmt) {
    case Format::Table:
      os << "subadditivity check (" << kind_name(rep.scheme) << " split";
      if (rep.zero_position > 0) os << ", zero position " << rep.zero_position;
      os << ")\n";
      os << "  S_total            " << fixed4(rep.s_total) << '\n';
      os << "  S_first            " << fixed4(rep.s_first) << '\n';
      os << "  S_second           " << fixed4(rep.s_second) << '\n';
      os << "  S_first + S_second " << fixed4(rep.s_sum) << '\n';
      os << "  mutual information " << fixed4(rep.mutual_info) << '\n';
      os << "verdict: " << (rep.holds ? "HOLDS" : "VIOLATED") << " (margin "
         << brief(rep.margin) << " vs -" << brief(rep.num_tol) << ")\n";
      append_diag_table(os, rep.clamps);
      break;
    case Format::Csv:
      os << "scheme,zero_position,s_total,s_first,s_second,s_sum,mutual_info,margin,"
            "holds,num_tol\n";
      os << kind_name(rep.scheme) << ',' << rep.zero_position << ','
         << format_full(rep.s_total) << ',' << format_full(rep.s_first) << ','
         << format_full(rep.s_second) << ',' << format_full(rep.s_sum) << ','
         << format_full(rep.mutual_info) << ',' << format_full(rep.margin) << ','
         << (rep.holds ? 1 : 0) << ',' << format_full(rep.num_tol) << '\n';
      break;
    case Format::Json:
      os << "{\"report\": \"subadditivity\", \"scheme\": \"" << kind_name(rep.scheme)
         << "\", \"zero_position\": " << rep.zero_position
         << ", \"s_total\": " << jnum(rep.s_total) << ", \"s_first\": " << jnum(rep.s_first)
         << ", \"s_second\": " << jnum(rep.s_second) << ", \"s_sum\": " << jnum(rep.s_sum)
         << ", \"mutual_info\": " << jnum(rep.mutual_info)
         << ", \"margin\": " << jnum(rep.margin)
         << ", \"holds\": " << (rep.holds ? "true" : "false")
         << ", \"num_tol\": " << jnum(rep.num_tol) << ", ";
      append_diag_json(os, diag, rep.clamps);
      os << "}\n";
      break;
  }
  return os.str();
}

std::string render(const SSAReport<double>& rep, Format fmt, const Diagnostics& diag) {
  std::ostringstream os;
  switch (fmt) {
    case Format::Table:
      os << "strong subadditivity check (" << mode_name(rep.mode) << " reductions)\n";
      os << "  S_total                 " << fixed4(rep.s_total) << '\n';
      os << "  S_2                     " << fixed4(rep.s_r2) << '\n';
      os << "  S_12                    " << fixed4(rep.s_12) << '\n';
      os << "  S_23                    " << fixed4(rep.s_23) << '\n';
      os << "  lhs = S_total + S_2     " << fixed4(rep.lhs) << '\n';
      os << "  rhs = S_12 + S_23       " << fixed4(rep.rhs) << '\n';
      os << "  mutual information      " << fixed4(rep.mutual_info) << '\n';
      if (rep.verdict == Verdict::Indeterminate) {
        os << "verdict: INDETERMINATE (eigenvalue "
           << brief(rep.offending_eigenvalue.value_or(
                  std::numeric_limits<double>::quiet_NaN()))
           << " below -psd_tol in a " << mode_name(rep.mode) << " reduction)\n";
      } else {
        os << "verdict: " << (rep.holds ? "HOLDS" : "VIOLATED") << " (margin "
           << brief(rep.mutual_info) << " vs -" << brief(rep.num_tol) << ")\n";
      }
      append_diag_table(os, rep.clamps);
      break;
    case Format::Csv:
      os << "mode,s_total,s_r2,s_12,s_23,lhs,rhs,mutual_info,verdict,num_tol\n";
      os << mode_name(rep.mode) << ',' << format_full(rep.s_total) << ','
         << format_full(rep.s_r2) << ',' << format_full(rep.s_12) << ','
         << format_full(rep.s_23) << ',' << format_full(rep.lhs) << ','
         << format_full(rep.rhs) << ',' << format_full(rep.mutual_info) << ','
         << verdict_name(rep.verdict) << ',' << format_full(rep.num_tol) << '\n';
      break;
    case Format::Json:
      os << "{\"report\": \"ssa\", \"mode\": \"" << mode_name(rep.mode)
         << "\", \"s_total\": " << jnum(rep.s_total) << ", \"s_r2\": " << jnum(rep.s_r2)
         << ", \"s_12\": " << jnum(rep.s_12) << ", \"s_23\": " << jnum(rep.s_23)
         << ", \"lhs\": " << jnum(rep.lhs) << ", \"rhs\": " << jnum(rep.rhs)
         << ", \"mutual_info\": " << jnum(rep.mutual_info) << ", \"verdict\": \""
         << verdict_name(rep.verdict) << "\", \"num_tol\": " << jnum(rep.num_tol)
         << ", \"offending_eigenvalue\": "
         << (rep.offending_eigenvalue ? format_full(*rep.offending_eigenvalue)
                                      : std::string("null"))
         << ", ";
      append_diag_json(os, diag, rep.clamps);
      os << "}\n";
      break;
  }
  return os.str();
}

std::string render(const SweepTable<double>& table, Format fmt, const Diagnostics& diag) {
  std::ostringstream os;
  switch (fmt) {
    case Format::Table:
      os << "position      S_rho     S_bp1     S_bp2     I_bp1     I_bp2\n";
      for (const auto& r : table.rows) {
        char label[16];
        std::snprintf(label, sizeof label, "(%d;%d)", r.zero_position, r.zero_position);
        char line[128];
        std::snprintf(line, sizeof line, "%-9s %9s %9s %9s %9s %9s\n", label,
                      fixed4(r.s_total).c_str(), fixed4(r.s_bp1).c_str(),
                      fixed4(r.s_bp2).c_str(), fixed4(r.i_bp1).c_str(),
                      fixed4(r.i_bp2).c_str());
        os << line;
      }
      break;
    case Format::Csv:
      os << "position,s_total,s_bp1,s_bp2,i_bp1,i_bp2\n";
      for (const auto& r : table.rows)
        os << r.zero_position << ',' << format_full(r.s_total) << ','
           << format_full(r.s_bp1) << ',' << format_full(r.s_bp2) << ','
           << format_full(r.i_bp1) << ',' << format_full(r.i_bp2) << '\n';
      break;
    case Format::Json: {
      os << "{\"report\": \"sweep\", \"rows\": [";
      for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        if (i > 0) os << ", ";
        os << "{\"zero_position\": " << r.zero_position
           << ", \"s_total\": " << jnum(r.s_total) << ", \"s_bp1\": " << jnum(r.s_bp1)
           << ", \"s_bp2\": " << jnum(r.s_bp2) << ", \"i_bp1\": " << jnum(r.i_bp1)
           << ", \"i_bp2\": " << jnum(r.i_bp2) << '}';
      }
      os << "], ";
      append_diag_json(os, diag, {});
      os << "}\n";
      break;
    }
  }
  return os.str();
}

SubadditivityReport<double> parse_subadditivity_json(const std::string& text) {
  const nlohmann::json j = parse_json_or_throw(text, "subadditivity report");
  SubadditivityReport<double> rep;
  rep.scheme = kind_from_name(j.at("scheme").get<std::string>());
  rep.zero_position = j.at("zero_position").get<int>();
  rep.s_total = num_or_nan(j.at("s_total"));
  rep.s_first = num_or_nan(j.at("s_first"));
  rep.s_second = num_or_nan(j.at("s_second"));
  rep.s_sum = num_or_nan(j.at("s_sum"));
  rep.mutual_info = num_or_nan(j.at("mutual_info"));
  rep.margin = num_or_nan(j.at("margin"));
  rep.holds = j.at("holds").get<bool>();
  rep.num_tol = num_or_nan(j.at("num_tol"));
  rep.clamps = parse_clamps(j.at("diagnostics"));
  return rep;
}

SSAReport<double> parse_ssa_json(const std::string& text) {
  const nlohmann::json j = parse_json_or_throw(text, "ssa report");
  SSAReport<double> rep;
  rep.mode = j.at("mode").get<std::string>() == "paper" ? ReductionMode::PaperFaithful
                                                        : ReductionMode::Canonical;
  rep.s_total = num_or_nan(j.at("s_total"));
  rep.s_r2 = num_or_nan(j.at("s_r2"));
  rep.s_12 = num_or_nan(j.at("s_12"));
  rep.s_23 = num_or_nan(j.at("s_23"));
  rep.lhs = num_or_nan(j.at("lhs"));
  rep.rhs = num_or_nan(j.at("rhs"));
  rep.mutual_info = num_or_nan(j.at("mutual_info"));
  rep.verdict = verdict_from_name(j.at("verdict").get<std::string>());
  rep.holds = rep.verdict == Verdict::Holds;
  rep.num_tol = num_or_nan(j.at("num_tol"));
  if (!j.at("offending_eigenvalue").is_null())
    rep.offending_eigenvalue = j.at("offending_eigenvalue").get<double>();
  rep.clamps = parse_clamps(j.at("diagnostics"));
  return rep;
}

SweepTable<double> parse_sweep_json(const std::string& text) {
  const nlohmann::json j = parse_json_or_throw(text, "sweep report");
  SweepTable<double> table;
  for (const auto& r : j.at("rows")) {
    SweepRow<double> row;
    row.zero_position = r.at("zero_position").get<int>();
    row.s_total = num_or_nan(r.at("s_total"));
    row.s_bp1 = num_or_nan(r.at("s_bp1"));
    row.s_bp2 = num_or_nan(r.at("s_bp2"));
    row.i_bp1 = num_or_nan(r.at("i_bp1"));
    row.i_bp2 = num_or_nan(r.at("i_bp2"));
    table.rows.push_back(row);
  }
  return table;
}

SweepTable<double> parse_sweep_csv(const std::string& text) {
  SweepTable<double> table;
  std::istringstream is(text);
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      if (line != "position,s_total,s_bp1,s_bp2,i_bp1,i_bp2")
        throw ParseError("sweep CSV: unexpected header \"" + line + "\"");
      header = false;
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (std::getline(ls, tok, ',')) toks.push_back(tok);
    if (toks.size() != 6) throw ParseError("sweep CSV: expected 6 columns");
    SweepRow<double> row;
    row.zero_position = std::stoi(toks[0]);
    row.s_total = std::strtod(toks[1].c_str(), nullptr);
    row.s_bp1 = std::strtod(toks[2].c_str(), nullptr);
    row.s_bp2 = std::strtod(toks[3].c_str(), nullptr);
    row.i_bp1 = std::strtod(toks[4].c_str(), nullptr);
    row.i_bp2 = std::strtod(toks[5].c_str(), nullptr);
    table.rows.push_back(row);
  }
  if (header) throw ParseError("sweep CSV: empty input");
  return table;
}

}  // namespace qent::reports
