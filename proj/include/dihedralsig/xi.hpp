#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dihedralsig/linalg.hpp"
#include "dihedralsig/surfaces.hpp"

namespace dihedralsig {

/// Nonzero mod-p class in the kernel of L + L^T, lifted to [0, p).
struct CharacteristicClass {
  std::int64_t p = 0;
  std::vector<std::int64_t> xi;
  /// Nonzero modulo every prime factor of p.
  bool primitive = false;
};

/// One class per projective equivalence (unit multiples identified); the
/// lift is the lexicographically least multiple. Empty when p is coprime to
/// the determinant.
std::vector<CharacteristicClass> characteristic_classes(const SeifertData& s, std::int64_t p);

/// xi^T (L + L^T) xi for the stored lift.
Integer linking_self_value(const SeifertData& s, const CharacteristicClass& cc);

/// Signature of (1 - w) L + (1 - conj w) L^T at w = exp(2 pi i k / p).
int tristram_levine(const IntMatrix& L, std::int64_t p, std::int64_t k);

/// tristram_levine for k = 1 .. p-1.
std::vector<int> tristram_levine_family(const IntMatrix& L, std::int64_t p);

enum class Verdict { consistent_with_ribbon, obstructed, indeterminate };

std::string to_string(Verdict v);

struct XiCertificate {
  std::int64_t p = 0;
  std::string coloring_id;
  std::optional<Integer> L_V;
  std::optional<Integer> sigma_W;
  std::vector<int> tl;
  std::optional<Integer> xi;
  std::optional<Integer> bound;
  /// consistent_with_ribbon if |xi| <= bound, obstructed if it exceeds it,
  /// indeterminate if xi or the bound is missing.
  Verdict verdict = Verdict::indeterminate;
  std::string note;
};

/// (p^2 - 1)/6 * L_V + sigma_W + sum(tl), exact; throws InputError when the
/// value is not an integer or tl is not conjugate-symmetric.
XiCertificate assemble_xi(std::int64_t p, const Integer& L_V, const Integer& sigma_W, const std::vector<int>& tl);

/// Sets the bound and the per-certificate verdict.
void apply_bound(XiCertificate& cert, const Integer& bound);

/// rk + (p-1)/2.
std::int64_t ribbon_bound(std::int64_t p, std::int64_t rk_h1_M);

/// (p-1)(n-1)/2.
std::int64_t bridge_bound(std::int64_t p, std::int64_t n);

/// Any consistent certificate wins; otherwise any indeterminate one keeps the
/// answer open; otherwise every certificate violates its bound.
Verdict obstruction_verdict(const std::vector<XiCertificate>& certs);

enum class ParityResult { pass, fail, skipped };

std::string to_string(ParityResult r);

/// For p = 3: pass iff xi is odd, skipped unless M is a rational homology sphere.
ParityResult xi3_parity_check(const XiCertificate& cert, bool rational_homology_sphere);

}  // namespace dihedralsig
