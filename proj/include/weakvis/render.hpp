#pragma once

// Text and SVG views of weak-value tensors. All renderers are pure: the
// same tensor and labels give byte-identical output.

#include "weakvis/scenarios.hpp"
#include "weakvis/weakvalues.hpp"

#include <string>

namespace weakvis
{

/// Imaginary parts above this are reported instead of silently dropped.
inline constexpr double imaginary_warning_threshold = 1e-9;

/// Signed real part with 4 decimals ("+1.0000", "-0.5000"); values that
/// round to zero print as "0.0000".
std::string format_cell(double value);

/// Rank-2 grid: rows are axis 0, columns axis 1, with a border band of row
/// and column sums and the total. Throws NotTwoAxes (LabelMismatch when the
/// labels do not fit the shape).
std::string render_grid(const WeakValueTensor& t, const AxisLabels& labels);

/// Rank-3 tensor as one axis-1 x axis-2 slice per level of axis 0, diagonal
/// cells prefixed with '*'. Empty labels mean default labels. Throws
/// NotThreeAxes.
std::string render_cube(const WeakValueTensor& t, const AxisLabels& labels = {});

/// Static SVG 1.1 for rank 2 or 3; throws UnsupportedRank otherwise.
std::string render_svg(const WeakValueTensor& t, const AxisLabels& labels, const std::string& title = {});

} // namespace weakvis
