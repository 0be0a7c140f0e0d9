#pragma once

#include "lipkin/sweep.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace lipkin {

/// f1..f4 analyze the two-level model, f5..f8 the three-level one:
/// f1/f5 eps_corr vs S_ov, f2/f6 its second derivative, f3/f7 S_ov/N vs
/// chi, f4/f8 mean-field pair discord(s) vs chi (f8 includes the sum).
enum class FigureId { f1, f2, f3, f4, f5, f6, f7, f8 };

std::optional<FigureId> parse_figure_id(std::string_view name);
std::string to_string(FigureId id);

/// The sweep backing each figure when none is supplied by the caller.
SweepConfig default_figure_config(FigureId id);

/// Render the figure from sweep records into a self-contained SVG file.
/// Records missing a quantity the figure needs (wrong model) are reported
/// as an error naming the missing columns.
void emit_figure(FigureId id, const std::vector<SweepRecord>& records,
                 const std::string& path);

}  // namespace lipkin
