#pragma once

#include <cstdint>
#include <vector>

#include "dihedralsig/diagram.hpp"
#include "dihedralsig/linalg.hpp"

namespace dihedralsig {

/// Fox p-coloring: one Z_p label per Wirtinger strand.
struct Coloring {
  std::int64_t p = 0;
  std::vector<std::int64_t> labels;
  bool surjective = false;

  bool operator==(const Coloring&) const = default;
};

/// Meridian of each strand as a permutation of Z_p (x -> 2a - x for label a).
struct PermutationRep {
  std::int64_t p = 0;
  std::vector<std::vector<std::int64_t>> meridians;
};

/// Crossing relations in strand coordinates: row u_in + u_out - 2 over.
IntMatrix coloring_matrix(const KnotDiagram& d);

/// Labels are not all congruent modulo any prime factor of p.
bool labels_surjective(const std::vector<std::int64_t>& labels, std::int64_t p);

/// Every solution of the crossing relations, lexicographically ordered.
std::vector<Coloring> fox_colorings(const KnotDiagram& d, std::int64_t p);

PermutationRep coloring_to_rep(const Coloring& c);

/// Lexicographically least image of the labels under a -> l*a + m, l a unit.
std::vector<std::int64_t> canonical_labels(const std::vector<std::int64_t>& labels, std::int64_t p);

struct ColoringOrbit {
  std::vector<std::int64_t> representative;
  std::vector<std::size_t> members;  ///< indices into the input list
};

/// Groups colorings under the affine maps; orbits sorted by representative.
std::vector<ColoringOrbit> coloring_orbits(const std::vector<Coloring>& colorings);

}  // namespace dihedralsig
