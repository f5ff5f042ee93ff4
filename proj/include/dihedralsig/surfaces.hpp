#pragma once

#include <cstdint>
#include <vector>

#include "dihedralsig/coloring.hpp"
#include "dihedralsig/diagram.hpp"
#include "dihedralsig/linalg.hpp"

namespace dihedralsig {

/// Checkerboard data behind the Goeritz matrix. A corner (X, s) is the angle
/// of crossing X between slots s and s+1; faces are indexed 0.., white faces
/// are those met at corner (0, 0) and its opposite corners.
struct Checkerboard {
  std::size_t face_count = 0;
  std::vector<int> corner_face;     ///< 4 * crossing + slot -> face
  std::vector<bool> white;          ///< per face
  std::vector<int> white_column;    ///< per face: Goeritz column, or -1
  int deleted_face = -1;
  std::vector<int> eta;             ///< per crossing, +1 / -1
  IntMatrix goeritz;
};

Checkerboard checkerboard(const KnotDiagram& d);

/// White-region Goeritz matrix with the first white region deleted.
IntMatrix goeritz_matrix(const KnotDiagram& d);

/// |det G|, always odd for a knot.
Integer determinant(const KnotDiagram& d);

/// H_1 of the double branched cover: cokernel of the Goeritz matrix.
AbelianGroup double_cover_homology(const KnotDiagram& d);

/// Torsion linking form on the SNF generators of H_1(Sigma_2).
struct LinkingForm {
  AbelianGroup group;
  /// Goeritz-column coordinates of each SNF generator.
  std::vector<std::vector<Integer>> generators;
  /// lambda(g_i, g_j) in [0, 1).
  std::vector<std::vector<Rational>> form;

  Integer order() const { return group.torsion_order(); }
  /// lambda(x, y) mod 1 for elements given in SNF coordinates.
  Rational pair(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const;
};

LinkingForm linking_form(const KnotDiagram& d);

struct Metabolizer {
  /// Canonical generating set in SNF coordinates.
  std::vector<std::vector<std::int64_t>> generators;
  /// Every element, lexicographically sorted.
  std::vector<std::vector<std::int64_t>> elements;
};

/// All subgroups H with |H|^2 = |group| on which the form vanishes. Empty when
/// the order is not a perfect square. Throws InputError above `budget`.
std::vector<Metabolizer> metabolizers(const LinkingForm& lf, std::int64_t budget = 10000);

/// Homomorphism H_1(Sigma_2) -> Z_p induced by a coloring, evaluated on the
/// Goeritz columns (through the Dehn coloring of the regions).
std::vector<std::int64_t> coloring_character(const Coloring& c, const KnotDiagram& d);

/// The same character evaluated on the SNF generators of the linking form.
std::vector<std::int64_t> character_on_generators(const std::vector<std::int64_t>& character,
                                                  const LinkingForm& lf, std::int64_t p);

bool coloring_passes_metabolizer_filter(const Coloring& c, const KnotDiagram& d);

struct SeifertData {
  IntMatrix L;
  int genus = 0;
  IntMatrix symmetrized;
};

/// Seifert matrix of the surface built from the braid closure: one disk per
/// strand, one band per letter.
SeifertData seifert_matrix(const BraidWord& b);

/// Wraps a user-supplied Seifert matrix; it must be square of even size.
SeifertData seifert_from_matrix(const IntMatrix& L);

}  // namespace dihedralsig
