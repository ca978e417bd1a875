#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chardeg/acd.hpp"
#include "chardeg/rational.hpp"

namespace chardeg {

struct NormalRef {
  std::size_t index = 0;
  std::string label;
  std::uint64_t order = 0;
  std::vector<std::size_t> class_indices;
};

/// One implication "hypothesis => conclusion" evaluated on one group (and,
/// for the relative statements, one normal subgroup).
struct TheoremCheckResult {
  std::string theorem; // A1..D3
  std::string group;
  std::optional<NormalRef> normal;
  Rational value;
  Rational bound;
  bool hypothesis = false;
  bool conclusion = false;
  bool implication_ok = true;
  bool sharp = false;
};

/// Evaluates A1..D3 against a report. Results are ordered by theorem id,
/// then by normal subgroup index.
std::vector<TheoremCheckResult> check_theorems(AcdReport const &report);

bool all_implications_hold(std::vector<TheoremCheckResult> const &results);

enum class ReportFormat { text, csv, json };

ReportFormat parse_report_format(std::string const &text);

std::string render_report(std::vector<TheoremCheckResult> const &results, ReportFormat format);

} // namespace chardeg
