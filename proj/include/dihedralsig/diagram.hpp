#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dihedralsig/linalg.hpp"

namespace dihedralsig {

/// One PD crossing X(a,b,c,d): edge labels counterclockwise starting from the
/// incoming under-edge `a`; `c` is the outgoing under-edge.
using PdCrossing = std::array<int, 4>;

/// Strand-level view of a crossing. Strands are the Wirtinger arcs: maximal
/// pieces of the knot running from one undercrossing to the next.
struct CrossingStrands {
  int over = 0;       ///< strand passing over
  int under_in = 0;   ///< strand ending at this crossing
  int under_out = 0;  ///< strand starting at this crossing
  int sign = 0;       ///< +1 or -1
};

/// Validated, oriented knot diagram. Edge labels are canonical: 1..2n in the
/// order met when walking the knot from the outgoing under-edge of the first
/// crossing, so every crossing has c == a + 1 (mod 2n).
class KnotDiagram {
 public:
  /// The 0-crossing round unknot.
  static KnotDiagram unknot();

  /// Validates raw PD data (any positive labels) and renumbers canonically.
  static KnotDiagram from_pd(const std::vector<std::array<long long, 4>>& raw);

  const std::vector<PdCrossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  /// Edges of the diagram (1 for the round unknot).
  std::size_t arc_count() const { return crossings_.empty() ? 1 : 2 * crossings_.size(); }
  /// Wirtinger arcs; equals the crossing count except for the unknot.
  std::size_t strand_count() const { return crossings_.empty() ? 1 : crossings_.size(); }
  bool is_unknot() const { return crossings_.empty(); }

  /// 0-based strand index of each canonical edge label (index 0 unused).
  int strand_of_edge(int edge) const { return edge_strand_[static_cast<std::size_t>(edge)]; }
  const std::vector<CrossingStrands>& crossing_strands() const { return strands_; }
  std::vector<int> signs() const;
  int writhe() const;

  /// Number of maximal runs of overcrossings met along the knot.
  int overpass_count() const { return overpasses_; }
  /// Fewest seed strands from which the crossing rule "overstrand and one
  /// understrand known determines the other" reaches every strand.
  int seed_number() const { return seeds_; }
  /// min(overpass_count, seed_number); an upper bound on the bridge number.
  int bridge_upper_bound() const { return crossings_.empty() ? 1 : std::min(overpasses_, seeds_); }

  KnotDiagram mirror() const;
  std::string to_pd_string() const;

 private:
  void derive();

  std::vector<PdCrossing> crossings_;
  std::vector<int> edge_strand_;
  std::vector<CrossingStrands> strands_;
  int overpasses_ = 1;
  int seeds_ = 1;
};

/// Accepts `X(1,4,2,5) X(3,6,4,1) ...` (square brackets and a PD[...]
/// wrapper are tolerated) or JSON `{"pd": [[1,4,2,5], ...]}`. Empty input is
/// the unknot only when `allow_unknot` is set.
KnotDiagram parse_pd(std::string_view text, bool allow_unknot = false);

/// Braid word on `strands` strands; letter +i / -i is sigma_i^{+1} / sigma_i^{-1}.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  /// Permutation of strand positions induced by the word (position -> position).
  std::vector<int> closure_permutation() const;
  /// Number of components of the closure.
  int closure_components() const;
  BraidWord mirror() const;
  std::string to_string() const;
  bool operator==(const BraidWord&) const = default;
};

/// Checks letter range and that the closure is a knot.
void validate_braid(const BraidWord& b);

/// Accepts `k=3; 1 -2 1 -2` or JSON `{"braid": {"k": 3, "word": [1,-2,1,-2]}}`.
BraidWord parse_braid(std::string_view text);

/// PD diagram of the braid closure, strands oriented downward.
KnotDiagram braid_closure(const BraidWord& b);

/// Signed 1-based generator indices; -g is the inverse of generator g.
using Word = std::vector<int>;

Word free_reduce(const Word& w);

struct GroupPresentation {
  std::size_t generator_count = 0;
  std::vector<Word> relators;

  /// Throws InputError if a relator mentions an out-of-range generator.
  void validate() const;
  /// Exponent-sum matrix: one row per relator, one column per generator.
  IntMatrix abelianization_matrix() const;
  AbelianGroup abelianization() const;
};

/// Wirtinger presentation: one generator per strand, one relator per crossing.
/// Positive crossing: out = over^-1 * in * over; negative: out = over * in * over^-1.
GroupPresentation wirtinger(const KnotDiagram& d);

}  // namespace dihedralsig
