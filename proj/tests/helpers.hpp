#pragma once

#include <string>

#include "chardeg/analysis.hpp"
#include "chardeg/spec_parser.hpp"

namespace testing {

inline chardeg::PermutationGroup group(std::string const &spec)
{
  return chardeg::construct_named_group(chardeg::parse_group_spec(spec));
}

inline chardeg::GroupAnalysis analyse(std::string const &spec)
{
  return chardeg::analyse_group(chardeg::parse_group_spec(spec));
}

inline std::vector<std::uint64_t> sizes(chardeg::ClassData const &cd)
{
  std::vector<std::uint64_t> out;
  for (auto const &c : cd.classes)
    out.push_back(c.size);
  return out;
}

} // namespace testing
