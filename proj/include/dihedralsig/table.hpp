#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dihedralsig/diagram.hpp"

namespace dihedralsig {

struct KnotRecord {
  std::string name;
  std::string pd_source;
  std::vector<std::array<long long, 4>> pd;
  KnotDiagram diagram;
  std::optional<BraidWord> braid;
  /// User override for the bridge number bound.
  std::optional<int> bridge_n;

  /// bridge_n if set, else the diagram's upper bound.
  int bridge_number() const { return bridge_n ? *bridge_n : diagram.bridge_upper_bound(); }
};

struct KnotTable {
  int version = 0;
  std::vector<KnotRecord> knots;

  /// Throws InputError for an unknown name.
  const KnotRecord& find(const std::string& name) const;
};

KnotTable parse_table(const std::string& json_text);
KnotTable load_table(const std::string& path);

/// DIHEDRALSIG_TABLE if set, else the bundled table.
std::string default_table_path();

}  // namespace dihedralsig
