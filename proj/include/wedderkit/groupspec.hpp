#pragma once

#include <string>

#include "wedderkit/group.hpp"

namespace wedderkit {

// Group spec grammar:
//   perm:(1,2,3)(4,5);(1,2)   generators separated by ';', cycles 1-based
//   cyclic:n  dihedral:m  sym:n  alt:n  quaternion:m   (m the group order)
//   product:<spec>|<spec>     split at the last '|', so products nest on the left
//   wreath:<spec>~cyclic:p    split at the last '~', p prime
// Parse failures throw ParseError naming the 0-based position in the spec.
GroupPtr group_from_spec(const std::string& spec, int max_order = kDefaultConstructionBound);

}  // namespace wedderkit
