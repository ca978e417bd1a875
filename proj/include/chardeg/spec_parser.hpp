#pragma once

#include <string>
#include <string_view>

#include "chardeg/group_spec.hpp"

namespace chardeg {

/// Grammar:
///   spec    := family ":" int | "perm:" cycles | "product:" spec "," spec
///   family := alt | sym | cyclic | dihedral | quaternion | sl2 | psl2
///   cycles := generator (whitespace generator)*
///   generator := ("(" point* ")")+        1-based points, space or comma separated
///
/// Throws ParseError (with the failing position) on malformed text.
GroupSpec parse_group_spec(std::string_view text);

/// Canonical text form; parse_group_spec(render_group_spec(s)) == s.
std::string render_group_spec(GroupSpec const &spec);

char const *family_name(Family family);

} // namespace chardeg
