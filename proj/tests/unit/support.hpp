#pragma once

#include <string>

#include "dihedralsig/table.hpp"

namespace testsupport {

inline const dihedralsig::KnotTable& table() {
  static const dihedralsig::KnotTable t = dihedralsig::load_table(DIHEDRALSIG_DEFAULT_TABLE);
  return t;
}

inline const dihedralsig::KnotDiagram& knot(const std::string& name) { return table().find(name).diagram; }

inline bool two_bridge(const dihedralsig::KnotRecord& k) { return !k.diagram.is_unknot() && k.bridge_number() == 2; }

}  // namespace testsupport
