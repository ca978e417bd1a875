#pragma once

#include <string>

#include "chardeg/analysis.hpp"

namespace chardeg {

/// Header lines (representative, size, order per class), then one line per
/// character with its degree, field label and values.
std::string render_table_text(GroupAnalysis const &analysis);

/// {"group", "order", "classes": [...], "characters": [{"degree", "values", "field"}]}
std::string render_table_json(GroupAnalysis const &analysis);

/// Full average-degree report as JSON.
std::string render_acd_json(GroupAnalysis const &analysis);

/// [{"order", "class_indices", "solvable", "label"}]
std::string render_normals_json(GroupAnalysis const &analysis);
std::string render_normals_text(GroupAnalysis const &analysis);

} // namespace chardeg
