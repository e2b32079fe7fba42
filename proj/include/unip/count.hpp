#pragma once

#include <map>
#include <optional>
#include <string>

#include "unip/cells.hpp"
#include "unip/parity.hpp"

namespace unip {

struct CountReport {
  long long count = 0;
  PPSubset pp;                 // primitive pairs of the good part
  ParitySplit split;
  std::string route;           // which theorem/branch produced the count
  std::map<std::string, long long> per_wp;        // wp text -> count (optional)
  std::map<std::string, long long> cross_checks;  // route name -> count
};

/// Number of special unipotent representation parameters attached to
/// (group, orbit). With verify, all applicable independent routes are run and
/// recorded in cross_checks (they must agree).
CountReport unip_count(const GroupForm& group, const OrbitSpec& spec, bool verify = false);

/// Complex classical groups: 1 for A^C, else 2^♯PP of the good part.
long long unip_count_complex(Label star, const YoungDiagram& d);

}  // namespace unip
