#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace dihedralsig {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Reduces `a` into [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mod_floor(const Integer& a, std::int64_t m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

/// Prime factorisation by trial division, ascending, with multiplicity.
std::vector<std::int64_t> prime_factors(std::int64_t n);

bool is_square_free(std::int64_t n);

/// Throws InputError unless p is odd, square-free and at least 3.
void require_odd_square_free(std::int64_t p);

/// Inverse of a modulo m; a must be a unit.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace dihedralsig
