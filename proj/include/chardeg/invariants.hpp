#pragma once

#include <string>
#include <vector>

#include "chardeg/analysis.hpp"

namespace chardeg {

struct InvariantCheck {
  std::string group;
  std::string name;
  bool ok = true;
  std::string detail; // first failure, empty when ok
};

/// Closure, inverses, class equation, class invariance, derived series normality.
std::vector<InvariantCheck> check_group_invariants(std::string const &name, PermutationGroup const &group,
                                                   ClassData const &classes);

/// Orthogonality, Galois closure, central-character identity and
/// Frobenius-Schur indicator against the field of values.
std::vector<InvariantCheck> check_table_invariants(std::string const &name, PermutationGroup const &group,
                                                   CharacterTable const &table);

/// Normal subgroup lattice and average-degree consistency.
std::vector<InvariantCheck> check_acd_invariants(GroupAnalysis const &analysis);

std::vector<InvariantCheck> check_all_invariants(GroupAnalysis const &analysis);

} // namespace chardeg
