#include "chardeg/normal.hpp"

#include <algorithm>
#include <set>

#include "chardeg/errors.hpp"

namespace chardeg {

NormalSubgroup make_normal_subgroup(CharacterTable const &table, std::vector<std::size_t> class_indices)
{
  std::sort(class_indices.begin(), class_indices.end());
  class_indices.erase(std::unique(class_indices.begin(), class_indices.end()), class_indices.end());
  NormalSubgroup n;
  n.order = 0;
  for (auto k : class_indices)
    n.order += table.class_size(k);
  n.class_indices = std::move(class_indices);
  return n;
}

NormalSubgroup kernel_class_set(CharacterTable const &table, std::size_t row)
{
  auto const &values = table.rows.at(row);
  std::vector<std::size_t> classes;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k] == values[0])
      classes.push_back(k);
  return make_normal_subgroup(table, std::move(classes));
}

NormalSubgroup intersect(CharacterTable const &table, NormalSubgroup const &a, NormalSubgroup const &b)
{
  std::vector<std::size_t> common;
  std::set_intersection(a.class_indices.begin(), a.class_indices.end(), b.class_indices.begin(),
                        b.class_indices.end(), std::back_inserter(common));
  return make_normal_subgroup(table, std::move(common));
}

NormalSubgroup whole_group(CharacterTable const &table)
{
  std::vector<std::size_t> all(table.class_count());
  for (std::size_t k = 0; k < all.size(); ++k)
    all[k] = k;
  return make_normal_subgroup(table, std::move(all));
}

std::vector<NormalSubgroup> enumerate_normal_subgroups(CharacterTable const &table,
                                                       PermutationGroup const &group)
{
  auto key = [](NormalSubgroup const &n) { return n.class_indices; };
  std::set<std::vector<std::size_t>> seen;
  std::vector<NormalSubgroup> found;
  auto add = [&](NormalSubgroup n) {
    if (seen.insert(key(n)).second)
      found.push_back(std::move(n));
  };

  add(whole_group(table));
  for (std::size_t s = 0; s < table.row_count(); ++s)
    add(kernel_class_set(table, s));

  // close under pairwise intersection
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      add(intersect(table, found[i], found[j]));

  std::sort(found.begin(), found.end(), [](NormalSubgroup const &a, NormalSubgroup const &b) {
    if (a.order != b.order)
      return a.order < b.order;
    return a.class_indices < b.class_indices;
  });

  for (auto const &n : found) {
    if (group.order() % n.order != 0 || !is_subgroup(group, materialize(table.classes, n)))
      throw InternalError("kernel intersection of order " + std::to_string(n.order) +
                          " is not a subgroup");
  }
  return found;
}

NormalSubgroup derived_subgroup_classes(CharacterTable const &table)
{
  NormalSubgroup result = whole_group(table);
  for (std::size_t s = 0; s < table.row_count(); ++s)
    if (table.degrees[s] == 1)
      result = intersect(table, result, kernel_class_set(table, s));
  return result;
}

NormalSubgroup center_classes(CharacterTable const &table)
{
  std::vector<std::size_t> singletons;
  for (std::size_t k = 0; k < table.class_count(); ++k)
    if (table.class_size(k) == 1)
      singletons.push_back(k);
  return make_normal_subgroup(table, std::move(singletons));
}

ElementSet materialize(ClassData const &classes, NormalSubgroup const &n)
{
  ElementSet out;
  for (auto k : n.class_indices)
    out.insert(out.end(), classes.classes.at(k).members.begin(), classes.classes.at(k).members.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_solvable_normal(PermutationGroup const &group, ClassData const &classes, NormalSubgroup const &n)
{
  ElementSet elements = materialize(classes, n);
  try {
    return derived_series(group, elements).is_solvable;
  } catch (PreconditionError const &e) {
    throw InternalError(std::string("normal subgroup is not closed: ") + e.what());
  }
}

bool contains(CharacterTable const &table, NormalSubgroup const &n, std::size_t row)
{
  auto const kernel = kernel_class_set(table, row);
  return std::includes(kernel.class_indices.begin(), kernel.class_indices.end(), n.class_indices.begin(),
                       n.class_indices.end());
}

std::string normal_label(CharacterTable const &table, NormalSubgroup const &n, std::size_t index)
{
  if (n.is_trivial())
    return "1";
  if (n.order == table.group_order)
    return "G";
  if (n == center_classes(table))
    return "Z";
  if (n == derived_subgroup_classes(table))
    return "G'";
  return "#" + std::to_string(index);
}

} // namespace chardeg
