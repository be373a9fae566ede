#pragma once

#include <iosfwd>

#include "kuranet/sweep.hpp"

namespace kuranet {

enum class PlotKind { r_vs_k, r_vs_n, drdk };

/// Renders a static SVG line chart from a result table.
///   r_vs_k: mean R against K, one curve per distinct p present.
///   r_vs_n: mean R against N, one curve per K from an 11-point subsample
///           of the coupling grid.
///   drdk:   two stacked panels, mean R(K) and its numerical derivative.
/// The output is a deterministic byte stream (no timestamps); <polyline>
/// elements are used for data curves only, so structural checks can count
/// curves. Throws InvalidParameterError when the table lacks the rows the
/// chosen kind needs.
void write_plot_svg(const ResultTable& table, PlotKind kind, std::ostream& out);

}  // namespace kuranet
