#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chardeg/chartab.hpp"
#include "chardeg/group.hpp"

namespace chardeg {

/// A normal subgroup as a union of conjugacy classes.
struct NormalSubgroup {
  std::vector<std::size_t> class_indices; // sorted, always contains 0
  std::uint64_t order = 1;

  bool is_trivial() const { return order == 1; }
  bool operator==(NormalSubgroup const &) const = default;
};

NormalSubgroup make_normal_subgroup(CharacterTable const &table, std::vector<std::size_t> class_indices);

/// ker(chi): classes where chi takes the value chi(1).
NormalSubgroup kernel_class_set(CharacterTable const &table, std::size_t row);

NormalSubgroup intersect(CharacterTable const &table, NormalSubgroup const &a, NormalSubgroup const &b);

/// Every normal subgroup, as intersections of character kernels; sorted by
/// order then class set. Each is checked closed on its elements.
std::vector<NormalSubgroup> enumerate_normal_subgroups(CharacterTable const &table,
                                                       PermutationGroup const &group);

/// G' as the intersection of the kernels of the linear characters.
NormalSubgroup derived_subgroup_classes(CharacterTable const &table);

/// Z(G) as the union of the singleton classes.
NormalSubgroup center_classes(CharacterTable const &table);

NormalSubgroup whole_group(CharacterTable const &table);

ElementSet materialize(ClassData const &classes, NormalSubgroup const &n);

/// Throws InternalError if the materialised classes are not a subgroup.
bool is_solvable_normal(PermutationGroup const &group, ClassData const &classes, NormalSubgroup const &n);

/// Does ker(chi_row) contain n?
bool contains(CharacterTable const &table, NormalSubgroup const &n, std::size_t row);

/// "G", "G'", "Z", "1" when one of those applies, else "#index".
std::string normal_label(CharacterTable const &table, NormalSubgroup const &n, std::size_t index);

} // namespace chardeg
