#pragma once

#include <string>

#include "qent/inequalities.hpp"

namespace qent::reports {

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& name);  // "table" | "csv" | "json"

/// Tolerances that were in effect for a check, carried into every report so
/// the numbers can be read back in context.
struct Diagnostics {
  double herm_tol = 0;
  double trace_tol = 0;
  double psd_tol = 0;
};

/// Human tables use 4 decimal places; CSV and JSON carry full precision
/// (17 significant digits) and round-trip bit-exactly.
std::string render(const SubadditivityReport<double>& rep, Format fmt,
                   const Diagnostics& diag);
std::string render(const SSAReport<double>& rep, Format fmt, const Diagnostics& diag);
std::string render(const SweepTable<double>& table, Format fmt, const Diagnostics& diag);

SubadditivityReport<double> parse_subadditivity_json(const std::string& text);
SSAReport<double> parse_ssa_json(const std::string& text);
SweepTable<double> parse_sweep_json(const std::string& text);
SweepTable<double> parse_sweep_csv(const std::string& text);

const char* kind_name(PartitionKind kind);
const char* mode_name(ReductionMode mode);
const char* verdict_name(Verdict v);

}  // namespace qent::reports
