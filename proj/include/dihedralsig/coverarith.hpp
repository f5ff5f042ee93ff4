#pragma once

#include <cstdint>
#include <map>

#include "dihedralsig/integer.hpp"

namespace dihedralsig {

/// Branched cover data: n sheets over a base of signature sigma_Y, with the
/// normal Euler number of the branch components of each index r >= 2.
struct CoverSpec {
  std::int64_t n = 1;
  Integer sigma_Y = 0;
  std::map<std::int64_t, Integer> euler_numbers;
};

/// n sigma_Y - sum (r^2 - 1)/3 e(A_r); InputError unless an exact integer.
Integer viro_signature(const CoverSpec& spec);

/// p sigma_Y - (p - 1)/4 e_B + xi; InputError unless an exact integer.
Integer sashka_signature(std::int64_t p, const Integer& sigma_Y, const Integer& e_B, const Integer& xi);

/// 1 - rk + (p + 1)/2.
std::int64_t ih_euler_characteristic(std::int64_t p, std::int64_t rk_h1_M);

/// (p + 1)/2.
std::int64_t disk_cover_euler(std::int64_t p);

}  // namespace dihedralsig
