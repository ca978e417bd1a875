#pragma once

#include <string>
#include <vector>

#include "chardeg/acd.hpp"
#include "chardeg/chartab.hpp"
#include "chardeg/group_spec.hpp"
#include "chardeg/normal.hpp"

namespace chardeg {

/// Everything computed for one group: its table, normal subgroups and
/// average-degree report.
struct GroupAnalysis {
  std::string name;
  PermutationGroup group;
  CharacterTable table;
  std::vector<NormalSubgroup> normals;
  AcdReport report;
};

GroupAnalysis analyse_group(GroupSpec const &spec, GroupLimits limits = default_limits());

struct CorpusEntry {
  std::string name; // canonical spec text
  GroupSpec spec;
  bool expected_solvable = false;
};

/// Fixed verification corpus, in reporting order.
std::vector<CorpusEntry> const &builtin_corpus();

} // namespace chardeg
