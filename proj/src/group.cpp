#include "chardeg/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <tuple>

#include "chardeg/errors.hpp"

namespace chardeg {

namespace {

constexpr std::size_t kAllPairsCommutatorLimit = 2000;

// Incrementally grown subgroup: elements reachable from the identity by
// right multiplication with the accumulated generators.
class ClosureBuilder {
public:
  explicit ClosureBuilder(PermutationGroup const &group)
    : group_(group), member_(group.order(), false), elements_{0}
  {
    member_[0] = true;
  }

  bool contains(ElementIndex e) const { return member_[e]; }
  std::vector<ElementIndex> const &generators() const { return generators_; }

  // Adds `seed` as a generator; returns false if it was already a member.
  bool add(ElementIndex seed)
  {
    if (member_[seed])
      return false;
    generators_.push_back(seed);
    // every old element is still reachable; closing from the full list
    // under all generators yields the enlarged subgroup
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      ElementIndex x = elements_[head];
      for (ElementIndex g : generators_) {
        ElementIndex y = group_.multiply(x, g);
        if (!member_[y]) {
          member_[y] = true;
          elements_.push_back(y);
        }
      }
    }
    return true;
  }

  ElementSet sorted() const
  {
    ElementSet out = elements_;
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t size() const { return elements_.size(); }

private:
  PermutationGroup const &group_;
  std::vector<bool> member_;
  std::vector<ElementIndex> elements_;
  std::vector<ElementIndex> generators_;
};

} // namespace

GroupLimits default_limits()
{
  GroupLimits limits;
  if (char const *env = std::getenv("CHARDEG_MAX_ORDER")) {
    try {
      auto value = std::stoull(env);
      if (value > 0)
        limits.max_order = static_cast<std::size_t>(value);
    } catch (std::exception const &) {
      throw SpecError(std::string("CHARDEG_MAX_ORDER is not a positive integer: ") + env);
    }
  }
  return limits;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   GroupLimits limits)
  : degree_(std::max<std::size_t>(degree, 1)), generators_(std::move(generators)), limits_(limits)
{
  for (auto &g : generators_) {
    if (g.degree() > degree_)
      throw SpecError("generator acts on more points than the group degree");
    if (g.degree() < degree_)
      g = g.extended(degree_);
  }

  // breadth-first closure, then canonical re-indexing by image tuple
  std::unordered_map<Permutation, ElementIndex, PermutationHash> seen;
  std::vector<Permutation> found{Permutation::identity(degree_)};
  seen.emplace(found.front(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (auto const &g : generators_) {
      Permutation next = found[head] * g;
      if (seen.contains(next))
        continue;
      if (found.size() >= limits_.max_order)
        throw CapExceeded("group order exceeds the cap of " + std::to_string(limits_.max_order));
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
    }
  }

  std::sort(found.begin(), found.end());
  elements_ = std::move(found);
  index_.reserve(elements_.size());
  for (ElementIndex i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], i);

  inverses_.resize(elements_.size());
  orders_.resize(elements_.size());
  for (ElementIndex i = 0; i < elements_.size(); ++i) {
    inverses_[i] = index_.at(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }
  for (auto const &g : generators_)
    generator_indices_.push_back(index_.at(g));
}

ElementIndex PermutationGroup::index_of(Permutation const &perm) const
{
  auto it = index_.find(perm);
  if (it == index_.end())
    throw PreconditionError("permutation is not an element of the group");
  return it->second;
}

bool PermutationGroup::contains(Permutation const &perm) const
{
  return index_.contains(perm);
}

ElementIndex PermutationGroup::multiply(ElementIndex a, ElementIndex b) const
{
  return index_.at(elements_[a] * elements_[b]);
}

ElementIndex PermutationGroup::conjugate(ElementIndex b, ElementIndex a) const
{
  return index_.at(elements_[inverses_[a]] * elements_[b] * elements_[a]);
}

ElementIndex PermutationGroup::commutator(ElementIndex a, ElementIndex b) const
{
  return index_.at(elements_[inverses_[a]] * elements_[inverses_[b]] * elements_[a] * elements_[b]);
}

ClassData conjugacy_classes(PermutationGroup const &group)
{
  std::size_t const n = group.order();
  std::vector<bool> assigned(n, false);
  std::vector<ConjugacyClass> found;

  for (ElementIndex start = 0; start < n; ++start) {
    if (assigned[start])
      continue;
    // orbit under conjugation by the generators
    ElementSet orbit{start};
    assigned[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (ElementIndex g : group.generator_indices()) {
        ElementIndex y = group.conjugate(orbit[head], g);
        if (!assigned[y]) {
          assigned[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    ConjugacyClass cls;
    cls.representative = orbit.front();
    cls.size = orbit.size();
    cls.element_order = group.element_order(orbit.front());
    cls.members = std::move(orbit);
    found.push_back(std::move(cls));
    if (found.size() > group.limits().max_classes)
      throw CapExceeded("class count exceeds the cap of " +
                        std::to_string(group.limits().max_classes));
  }

  std::sort(found.begin(), found.end(), [](ConjugacyClass const &a, ConjugacyClass const &b) {
    return std::tie(a.element_order, a.size, a.representative) <
           std::tie(b.element_order, b.size, b.representative);
  });

  ClassData data;
  data.class_of.resize(n);
  for (std::size_t c = 0; c < found.size(); ++c)
    for (ElementIndex m : found[c].members)
      data.class_of[m] = c;
  data.classes = std::move(found);
  return data;
}

PowerMap power_map(PermutationGroup const &group, ClassData const &classes)
{
  PowerMap map;
  map.table.resize(classes.size());
  for (std::size_t j = 0; j < classes.size(); ++j) {
    auto const &cls = classes.classes[j];
    ElementIndex power = 0;
    for (std::uint64_t k = 0; k < cls.element_order; ++k) {
      map.table[j].push_back(classes.class_of[power]);
      power = group.multiply(power, cls.representative);
    }
  }
  return map;
}

ElementSet subgroup_closure(PermutationGroup const &group, std::span<ElementIndex const> seeds)
{
  ClosureBuilder builder(group);
  for (ElementIndex s : seeds)
    builder.add(s);
  return builder.sorted();
}

std::vector<ElementIndex> generating_set(PermutationGroup const &group, ElementSet const &subset)
{
  if (subset.empty() || subset.front() != 0)
    throw PreconditionError("subset does not contain the identity");
  std::vector<bool> in_subset(group.order(), false);
  for (ElementIndex e : subset)
    in_subset[e] = true;

  ClosureBuilder builder(group);
  for (ElementIndex e : subset) {
    if (builder.add(e) && builder.size() > subset.size())
      throw PreconditionError("subset is not closed under multiplication");
  }
  if (builder.size() != subset.size())
    throw PreconditionError("subset is not closed under multiplication");
  for (ElementIndex e : builder.sorted())
    if (!in_subset[e])
      throw PreconditionError("subset is not closed under multiplication");
  return builder.generators();
}

bool is_subgroup(PermutationGroup const &group, ElementSet const &subset)
{
  try {
    generating_set(group, subset);
    return true;
  } catch (PreconditionError const &) {
    return false;
  }
}

ElementSet normal_closure(PermutationGroup const &group, ElementSet const &within,
                          std::span<ElementIndex const> seeds)
{
  auto const conjugators = generating_set(group, within);
  ClosureBuilder builder(group);
  for (ElementIndex s : seeds)
    builder.add(s);

  bool changed = true;
  while (changed) {
    changed = false;
    auto const gens = builder.generators();
    for (ElementIndex k : gens)
      for (ElementIndex w : conjugators)
        changed = builder.add(group.conjugate(k, w)) || changed;
  }
  return builder.sorted();
}

ElementSet derived_subgroup(PermutationGroup const &group, ElementSet const &subgroup)
{
  if (subgroup.size() <= kAllPairsCommutatorLimit) {
    ClosureBuilder builder(group);
    for (ElementIndex x : subgroup)
      for (ElementIndex y : subgroup)
        builder.add(group.commutator(x, y));
    return builder.sorted();
  }
  // commutators of generators, closed under conjugation by the subgroup
  auto const gens = generating_set(group, subgroup);
  std::vector<ElementIndex> seeds;
  for (ElementIndex x : gens)
    for (ElementIndex y : gens)
      seeds.push_back(group.commutator(x, y));
  return normal_closure(group, subgroup, seeds);
}

DerivedSeries derived_series(PermutationGroup const &group, ElementSet const &subset)
{
  generating_set(group, subset); // closure check
  DerivedSeries series;
  series.terms.push_back(subset);
  while (series.terms.back().size() > 1) {
    ElementSet next = derived_subgroup(group, series.terms.back());
    bool const stable = next == series.terms.back();
    series.terms.push_back(std::move(next));
    if (stable)
      break;
  }
  series.is_solvable = series.terms.back().size() == 1;
  return series;
}

DerivedSeries derived_series(PermutationGroup const &group)
{
  return derived_series(group, all_elements(group));
}

std::uint64_t group_exponent(ClassData const &classes)
{
  std::uint64_t e = 1;
  for (auto const &cls : classes.classes)
    e = std::lcm(e, cls.element_order);
  return e;
}

ElementSet all_elements(PermutationGroup const &group)
{
  ElementSet out(group.order());
  std::iota(out.begin(), out.end(), ElementIndex{0});
  return out;
}

} // namespace chardeg
