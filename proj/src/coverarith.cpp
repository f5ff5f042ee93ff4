#include "dihedralsig/coverarith.hpp"

#include <string>

#include <boost/multiprecision/integer.hpp>

#include "dihedralsig/errors.hpp"

namespace dihedralsig {

namespace {

void require_odd(std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw InputError("p must be odd and at least 3 (got " + std::to_string(p) + ")");
}

Integer exact(const Rational& v, const char* what) {
  if (boost::multiprecision::denominator(v) != 1)
    throw InputError(std::string(what) + " is not an integer: " + v.str());
  return boost::multiprecision::numerator(v);
}

}  // namespace

Integer viro_signature(const CoverSpec& spec) {
  if (spec.n < 1) throw InputError("sheet count must be positive");
  Rational v = Rational(spec.sigma_Y * spec.n);
  for (const auto& [r, e] : spec.euler_numbers) {
    if (r < 2) throw InputError("branching index must be at least 2 (got " + std::to_string(r) + ")");
    if (r > spec.n) throw InputError("branching index exceeds the sheet count");
    v -= Rational(Integer(r) * r - 1, 3) * e;
  }
  return exact(v, "signature");
}

Integer sashka_signature(std::int64_t p, const Integer& sigma_Y, const Integer& e_B, const Integer& xi) {
  require_odd(p);
  const Rational v = Rational(sigma_Y * p) - Rational(Integer(p - 1), 4) * e_B + Rational(xi);
  return exact(v, "intersection homology signature");
}

std::int64_t ih_euler_characteristic(std::int64_t p, std::int64_t rk_h1_M) {
  require_odd(p);
  if (rk_h1_M < 0) throw InputError("rank must be nonnegative");
  return 1 - rk_h1_M + (p + 1) / 2;
}

std::int64_t disk_cover_euler(std::int64_t p) {
  require_odd(p);
  return (p + 1) / 2;
}

}  // namespace dihedralsig
