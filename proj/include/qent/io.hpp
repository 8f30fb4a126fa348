#pragma once

#include <string>

#include "qent/types.hpp"

namespace qent::io {

/// Number formatting used by every machine-readable emitter: 17 significant
/// digits, enough for double round-trips to be bit-exact.
std::string format_full(double v);

/// DM-JSON: {"dim": n, "matrix": [[[re, im], ...], ...]} with exactly n rows
/// of n two-element number arrays. Unknown extra keys are ignored on input.
ComplexMatrix<double> parse_matrix_json(const std::string& text);
std::string to_dm_json(const ComplexMatrix<double>& m);

/// DM-CSV: n lines, each with 2n comma-separated numbers alternating
/// re, im; no header.
ComplexMatrix<double> parse_matrix_csv(const std::string& text);
std::string to_dm_csv(const ComplexMatrix<double>& m);

/// Read a matrix file, dispatching on the extension (.json / .csv; anything
/// else is sniffed: a leading '{' means DM-JSON).
ComplexMatrix<double> read_matrix_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qent::io
