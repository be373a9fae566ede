#pragma once

#include <iosfwd>
#include <string>

#include "kuranet/integrate.hpp"
#include "kuranet/sweep.hpp"

namespace kuranet {

/// Formats a double with 9 significant digits (%.9g), the precision used by
/// every CSV and SVG emitter in the toolkit.
std::string format_g9(double v);

/// Writes the canonical result CSV: header N,p,K,rep,R_mean,R_std,edges,wall_s
/// and rows sorted by (N, p, K, rep).
void write_result_csv(const ResultTable& table, std::ostream& out);

/// Parses a result CSV produced by write_result_csv. Column order is free but
/// all eight columns must be present and nothing else. Throws CsvFormatError
/// with the offending column or line.
ResultTable read_result_csv(std::istream& in);

/// Per-run trace: header step,t,R,psi, one row per recorded state
/// (step i is the state at t = i * dt).
void write_trace_csv(const RunSummary& summary, double dt, std::ostream& out);

/// Variation profile backing a critical-coupling estimate:
/// header K,variation,grand_mean_R,in_window (in_window is 0 or 1).
void write_variation_csv(const KcEstimate& est, std::ostream& out);

}  // namespace kuranet
