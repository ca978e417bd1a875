#include <doctest.h>

#include <set>

#include "chardeg/errors.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace chardeg;
using testing::analyse;

namespace {

std::vector<std::uint64_t> orders(std::vector<NormalSubgroup> const &ns)
{
  std::vector<std::uint64_t> out;
  for (auto const &n : ns)
    out.push_back(n.order);
  return out;
}

std::size_t row_of_degree(CharacterTable const &t, std::uint64_t d, std::size_t nth = 0)
{
  for (std::size_t s = 0; s < t.row_count(); ++s)
    if (t.degrees[s] == d && nth-- == 0)
      return s;
  FAIL("no row of degree " << d);
  return 0;
}

} // namespace

TEST_CASE("kernels")
{
  auto sl = analyse("sl2:5");
  CHECK(kernel_class_set(sl.table, 0).order == 120);
  // faithful degrees are 2, 2, 4, 6
  std::multiset<std::uint64_t> faithful;
  for (std::size_t s = 0; s < sl.table.row_count(); ++s)
    if (kernel_class_set(sl.table, s).is_trivial())
      faithful.insert(sl.table.degrees[s]);
  CHECK(faithful == std::multiset<std::uint64_t>{2, 2, 4, 6});
  CHECK(kernel_class_set(sl.table, row_of_degree(sl.table, 3)).order == 2);

  auto s4 = analyse("sym:4");
  // the sign character is the non-trivial linear one
  auto sign = kernel_class_set(s4.table, 1);
  CHECK(s4.table.degrees[1] == 1);
  CHECK(sign.order == 12);
}

TEST_CASE("normal subgroup lists")
{
  CHECK(orders(analyse("alt:5").normals) == std::vector<std::uint64_t>{1, 60});
  CHECK(orders(analyse("sl2:5").normals) == std::vector<std::uint64_t>{1, 2, 120});
  CHECK(orders(analyse("sym:4").normals) == std::vector<std::uint64_t>{1, 4, 12, 24});
  CHECK(orders(analyse("cyclic:6").normals) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(orders(analyse("quaternion:8").normals) == std::vector<std::uint64_t>{1, 2, 4, 4, 4, 8});
}

TEST_CASE("normal subgroups agree with brute-force normal subset search")
{
  for (auto const &entry : builtin_corpus()) {
    auto a = analyse_group(entry.spec);
    if (a.group.order() > 168)
      continue;
    CAPTURE(entry.name);
    std::set<std::vector<std::size_t>> ours;
    for (auto const &n : a.normals)
      ours.insert(n.class_indices);
    CHECK(ours.size() == a.normals.size());
    CHECK(ours == oracle::normal_subsets(a.group, a.table.classes));
  }
}

TEST_CASE("derived subgroup and center from the table")
{
  CHECK(derived_subgroup_classes(analyse("cyclic:5").table).is_trivial());
  CHECK(derived_subgroup_classes(analyse("sym:4").table).order == 12);
  auto sl = analyse("sl2:5");
  CHECK(derived_subgroup_classes(sl.table).order == 120);
  CHECK(center_classes(sl.table).order == 2);

  for (auto const &entry : builtin_corpus()) {
    auto a = analyse_group(entry.spec);
    if (a.group.order() > 200)
      continue;
    CAPTURE(entry.name);
    auto derived = materialize(a.table.classes, derived_subgroup_classes(a.table));
    CHECK(derived == oracle::commutator_closure(a.group, all_elements(a.group)));
  }
}

TEST_CASE("solvability of normal subgroups")
{
  auto sl = analyse("sl2:5");
  CHECK(is_solvable_normal(sl.group, sl.table.classes, center_classes(sl.table)));
  auto a5 = analyse("alt:5");
  CHECK_FALSE(is_solvable_normal(a5.group, a5.table.classes, whole_group(a5.table)));
  auto s4 = analyse("sym:4");
  CHECK(is_solvable_normal(s4.group, s4.table.classes, s4.normals[1]));
  CHECK(s4.normals[1].order == 4);

  // a class set that is not closed
  auto bogus = make_normal_subgroup(a5.table, {0, 1});
  CHECK_THROWS_AS(is_solvable_normal(a5.group, a5.table.classes, bogus), InternalError);
}

TEST_CASE("kernel containment")
{
  auto sl = analyse("sl2:5");
  auto const &t = sl.table;
  auto trivial = make_normal_subgroup(t, {0});
  auto z = center_classes(t);
  auto g = whole_group(t);
  for (std::size_t s = 0; s < t.row_count(); ++s) {
    CHECK(contains(t, trivial, s));
    CHECK(contains(t, g, s) == (s == 0));
    if (kernel_class_set(t, s).is_trivial())
      CHECK_FALSE(contains(t, z, s));
  }
}

TEST_CASE("labels")
{
  auto sl = analyse("sl2:5");
  CHECK(normal_label(sl.table, sl.normals[0], 0) == "1");
  CHECK(normal_label(sl.table, sl.normals[1], 1) == "Z");
  CHECK(normal_label(sl.table, sl.normals[2], 2) == "G");
  auto s4 = analyse("sym:4");
  CHECK(normal_label(s4.table, s4.normals[1], 1) == "#1");
  CHECK(normal_label(s4.table, s4.normals[2], 2) == "G'");
}
