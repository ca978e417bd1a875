#include "chardeg/analysis.hpp"

#include "chardeg/spec_parser.hpp"

namespace chardeg {

GroupAnalysis analyse_group(GroupSpec const &spec, GroupLimits limits)
{
  std::string name = render_group_spec(spec);
  PermutationGroup group = construct_named_group(spec, limits);
  CharacterTable table = character_table(group);
  auto normals = enumerate_normal_subgroups(table, group);
  AcdReport report = acd_suite(name, table, group, normals);
  return {std::move(name), std::move(group), std::move(table), std::move(normals), std::move(report)};
}

std::vector<CorpusEntry> const &builtin_corpus()
{
  static std::vector<CorpusEntry> const corpus = [] {
    std::vector<CorpusEntry> out;
    auto add = [&](GroupSpec spec, bool solvable) {
      out.push_back({render_group_spec(spec), std::move(spec), solvable});
    };
    for (int n = 2; n <= 6; ++n)
      add(GroupSpec::named(Family::cyclic, n), true);
    for (int n : {8, 10, 12})
      add(GroupSpec::named(Family::dihedral, n), true);
    add(GroupSpec::named(Family::quaternion, 8), true);
    for (int n = 3; n <= 6; ++n)
      add(GroupSpec::named(Family::symmetric, n), n <= 4);
    for (int n = 4; n <= 7; ++n)
      add(GroupSpec::named(Family::alternating, n), n == 4);
    for (int q : {3, 5, 7, 9})
      add(GroupSpec::named(Family::sl2, q), q == 3);
    for (int q : {7, 11})
      add(GroupSpec::named(Family::psl2, q), false);
    add(GroupSpec::product(GroupSpec::named(Family::cyclic, 2), GroupSpec::named(Family::alternating, 5)), false);
    add(GroupSpec::product(GroupSpec::named(Family::alternating, 5), GroupSpec::named(Family::cyclic, 3)), false);
    return out;
  }();
  return corpus;
}

} // namespace chardeg
