#pragma once

#include <cstdint>
#include <vector>

#include "dihedralsig/coloring.hpp"
#include "dihedralsig/diagram.hpp"
#include "dihedralsig/linalg.hpp"

namespace dihedralsig {

/// Right action of the generators on the points 0..degree-1.
struct CosetTable {
  std::int64_t degree = 0;
  /// action[g][x] = x . g
  std::vector<std::vector<std::int64_t>> action;
  /// Schreier transversal: transversal[x] is a word taking 0 to x.
  std::vector<Word> transversal;
  /// tree[g][x]: the edge x --g--> x.g belongs to the spanning tree.
  std::vector<std::vector<bool>> tree;

  std::int64_t apply(std::int64_t x, int letter) const;
};

/// Builds the table from arbitrary permutations; checks that they are
/// permutations, act transitively and satisfy every relator.
CosetTable coset_table(const std::vector<std::vector<std::int64_t>>& perms, const GroupPresentation& pres);
CosetTable coset_table(const PermutationRep& rep, const GroupPresentation& pres);

/// Maps each non-tree edge (x, g) to its Schreier generator.
struct SchreierPresentation {
  GroupPresentation presentation;
  /// generator_of[g][x]: 1-based Schreier generator index, 0 for tree edges.
  std::vector<std::vector<int>> generator_of;

  /// Rewrites `w` read from coset x as a word in the Schreier generators.
  Word rewrite(const CosetTable& ct, std::int64_t x, const Word& w) const;
};

SchreierPresentation reidemeister_schreier(const GroupPresentation& pres, const CosetTable& ct);

/// Cycle structure of one meridian's permutation.
struct FiberCensus {
  int two_cycles = 0;
  int fixed_points = 0;
};

struct CoverHomology {
  AbelianGroup unbranched;
  AbelianGroup branched;
  std::vector<FiberCensus> meridian_lifts;  ///< per strand
};

CoverHomology branched_homology(const KnotDiagram& d, const Coloring& c);

/// (p-1)(n-2)/2.
std::int64_t genus_bound(std::int64_t p, std::int64_t n);

struct SheetCensus {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::vector<FiberCensus> fibers;
  /// Every fiber has (p-1)/2 two-cycles and one fixed point.
  bool uniform = false;
  /// Euler characteristic of the preimage of an n-bridge sphere.
  std::int64_t bridge_sphere_euler = 0;
  std::int64_t bridge_sphere_genus = 0;
};

SheetCensus sheet_census(const KnotDiagram& d, const Coloring& c, std::int64_t n);

}  // namespace dihedralsig
