#pragma once

#include "unip/labels.hpp"

namespace unip {

/// Number of real nilpotent orbits of the group with the given complex orbit
/// diagram, counted through signed Young diagrams. Supported groups: U(p,q),
/// Sp(p/2,q/2) (label C*), SO*(2n) (label D*).
long long count_real_orbits(const GroupForm& group, const YoungDiagram& shape);

}  // namespace unip
