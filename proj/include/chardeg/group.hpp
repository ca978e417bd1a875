#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "chardeg/permutation.hpp"

namespace chardeg {

struct GroupLimits {
  std::size_t max_order = 10000;
  std::size_t max_classes = 300;
};

/// Default limits, with CHARDEG_MAX_ORDER overriding the element cap.
GroupLimits default_limits();

using ElementIndex = std::size_t;
/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<ElementIndex>;

/// A finite permutation group with all elements enumerated.
///
/// Elements are indexed in ascending order of their image tuples, so the
/// identity is always element 0. Immutable after construction.
class PermutationGroup {
public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   GroupLimits limits = default_limits());

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }
  std::vector<ElementIndex> const &generator_indices() const { return generator_indices_; }
  std::uint64_t order() const { return elements_.size(); }
  GroupLimits const &limits() const { return limits_; }

  std::vector<Permutation> const &elements() const { return elements_; }
  Permutation const &element(ElementIndex i) const { return elements_[i]; }

  /// Throws PreconditionError if `perm` is not in the group.
  ElementIndex index_of(Permutation const &perm) const;
  bool contains(Permutation const &perm) const;

  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
  /// a^-1 * b * a
  ElementIndex conjugate(ElementIndex b, ElementIndex a) const;
  /// a^-1 * b^-1 * a * b
  ElementIndex commutator(ElementIndex a, ElementIndex b) const;
  std::uint64_t element_order(ElementIndex a) const { return orders_[a]; }

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<ElementIndex> generator_indices_;
  GroupLimits limits_;
  std::vector<Permutation> elements_;
  std::vector<ElementIndex> inverses_;
  std::vector<std::uint64_t> orders_;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index_;
};

struct ConjugacyClass {
  ElementIndex representative;
  std::uint64_t size;
  std::uint64_t element_order;
  ElementSet members;
};

/// Conjugacy classes in canonical order: ascending element order, then size,
/// then representative (the lexicographically least member).
struct ClassData {
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;

  std::size_t size() const { return classes.size(); }
};

ClassData conjugacy_classes(PermutationGroup const &group);

/// table[j][k] is the class of g_j^k for 0 <= k < element_order(j).
struct PowerMap {
  std::vector<std::vector<std::size_t>> table;

  std::size_t power(std::size_t cls, std::uint64_t k) const
  {
    auto const &row = table[cls];
    return row[k % row.size()];
  }
  std::size_t inverse_class(std::size_t cls) const { return power(cls, table[cls].size() - 1); }
};

PowerMap power_map(PermutationGroup const &group, ClassData const &classes);

/// Subgroup generated by `seeds` (the identity alone when empty).
ElementSet subgroup_closure(PermutationGroup const &group, std::span<ElementIndex const> seeds);

/// Smallest normal subgroup of `within` containing `seeds`; `within` must be a subgroup.
ElementSet normal_closure(PermutationGroup const &group, ElementSet const &within,
                          std::span<ElementIndex const> seeds);

bool is_subgroup(PermutationGroup const &group, ElementSet const &subset);

/// A short generating set of `subset`; throws PreconditionError when
/// `subset` is not a subgroup.
std::vector<ElementIndex> generating_set(PermutationGroup const &group, ElementSet const &subset);

struct DerivedSeries {
  std::vector<ElementSet> terms;
  bool is_solvable;
};

/// Subgroup generated by all commutators of elements of `subgroup`.
ElementSet derived_subgroup(PermutationGroup const &group, ElementSet const &subgroup);

/// H, H', H'', ... until the series stabilises. Throws PreconditionError if
/// `subset` is not closed.
DerivedSeries derived_series(PermutationGroup const &group, ElementSet const &subset);
DerivedSeries derived_series(PermutationGroup const &group);

std::uint64_t group_exponent(ClassData const &classes);

ElementSet all_elements(PermutationGroup const &group);

} // namespace chardeg
