#include "dihedralsig/integer.hpp"

#include <string>

#include "dihedralsig/errors.hpp"

namespace dihedralsig {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_square_free(std::int64_t n) {
  const auto f = prime_factors(n);
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] == f[i - 1]) return false;
  return true;
}

void require_odd_square_free(std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !is_square_free(p))
    throw InputError("p must be odd square-free >= 3 (got " + std::to_string(p) + ")");
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod_floor(a, m);
  while (a1 != 0) {
    const std::int64_t q = g / a1;
    std::int64_t t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw InputError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  return mod_floor(x, m);
}

}  // namespace dihedralsig
