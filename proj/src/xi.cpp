#include "dihedralsig/xi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/multiprecision/integer.hpp>

#include "dihedralsig/errors.hpp"

namespace dihedralsig {

std::vector<CharacteristicClass> characteristic_classes(const SeifertData& s, std::int64_t p) {
  require_odd_square_free(p);
  const auto kernel = kernel_mod_p(s.symmetrized, p);
  std::vector<CharacteristicClass> out;
  std::vector<std::vector<std::int64_t>> seen;
  auto primes = prime_factors(p);
  for (const auto& v : kernel.elements()) {
    if (std::all_of(v.begin(), v.end(), [](std::int64_t a) { return a == 0; })) continue;
    std::vector<std::int64_t> best = v, cur(v.size());
    for (std::int64_t l = 2; l < p; ++l) {
      if (std::gcd(l, p) != 1) continue;
      for (std::size_t i = 0; i < v.size(); ++i) cur[i] = mod_floor(l * v[i], p);
      if (cur < best) best = cur;
    }
    if (std::find(seen.begin(), seen.end(), best) != seen.end()) continue;
    seen.push_back(best);
    CharacteristicClass cc;
    cc.p = p;
    cc.xi = best;
    cc.primitive = std::all_of(primes.begin(), primes.end(), [&](std::int64_t q) {
      return std::any_of(best.begin(), best.end(), [&](std::int64_t a) { return a % q != 0; });
    });
    out.push_back(std::move(cc));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.xi < b.xi; });
  return out;
}

Integer linking_self_value(const SeifertData& s, const CharacteristicClass& cc) {
  const std::size_t n = s.symmetrized.rows();
  if (cc.xi.size() != n) throw InputError("characteristic class has the wrong dimension");
  if (std::all_of(cc.xi.begin(), cc.xi.end(), [](std::int64_t a) { return a == 0; }))
    throw InputError("characteristic class lift is zero");
  Integer v = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v += cc.xi[i] * s.symmetrized(i, j) * cc.xi[j];
  return v;
}

int tristram_levine(const IntMatrix& L, std::int64_t p, std::int64_t k) {
  if (L.rows() != L.cols()) throw InputError("Seifert matrix must be square");
  if (p < 2) throw InputError("p must be at least 2");
  if (k < 1 || k > p - 1) throw InputError("root index must lie in 1..p-1");
  const std::size_t n = L.rows();
  if (n == 0) return 0;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
  const std::complex<double> w(std::cos(angle), std::sin(angle));
  const std::complex<double> a = 1.0 - w, b = 1.0 - std::conj(w);
  HermitianMatrix H(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      H(i, j) = a * static_cast<double>(L(i, j)) + b * static_cast<double>(L(j, i));
  try {
    return hermitian_signature(H);
  } catch (const IndeterminateError&) {
    throw IndeterminateError("Tristram-Levine form is degenerate at exp(2 pi i " + std::to_string(k) + "/" +
                             std::to_string(p) + ")");
  }
}

std::vector<int> tristram_levine_family(const IntMatrix& L, std::int64_t p) {
  std::vector<int> out;
  for (std::int64_t k = 1; k < p; ++k) out.push_back(tristram_levine(L, p, k));
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent_with_ribbon:
      return "consistent-with-ribbon";
    case Verdict::obstructed:
      return "obstructed";
    case Verdict::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

XiCertificate assemble_xi(std::int64_t p, const Integer& L_V, const Integer& sigma_W, const std::vector<int>& tl) {
  if (p < 3 || p % 2 == 0) throw InputError("p must be odd and at least 3");
  if (static_cast<std::int64_t>(tl.size()) != p - 1)
    throw InputError("need p-1 = " + std::to_string(p - 1) + " Tristram-Levine signatures");
  for (std::size_t i = 0; i < tl.size(); ++i)
    if (tl[i] != tl[tl.size() - 1 - i]) throw InputError("Tristram-Levine signatures are not conjugate-symmetric");
  const Rational value = Rational(Integer(p) * p - 1, 6) * L_V + Rational(sigma_W) +
                         Rational(std::accumulate(tl.begin(), tl.end(), 0));
  if (boost::multiprecision::denominator(value) != 1)
    throw InputError("Xi is not an integer: (p^2-1)/6 * L_V = " +
                     Rational(Rational(Integer(p) * p - 1, 6) * L_V).str() + " (L_V not divisible as required)");
  XiCertificate cert;
  cert.p = p;
  cert.L_V = L_V;
  cert.sigma_W = sigma_W;
  cert.tl = tl;
  cert.xi = boost::multiprecision::numerator(value);
  return cert;
}

void apply_bound(XiCertificate& cert, const Integer& bound) {
  cert.bound = bound;
  if (!cert.xi)
    cert.verdict = Verdict::indeterminate;
  else
    cert.verdict = abs(*cert.xi) <= bound ? Verdict::consistent_with_ribbon : Verdict::obstructed;
}

std::int64_t ribbon_bound(std::int64_t p, std::int64_t rk_h1_M) {
  if (rk_h1_M < 0) throw InputError("rank must be nonnegative");
  return rk_h1_M + (p - 1) / 2;
}

std::int64_t bridge_bound(std::int64_t p, std::int64_t n) {
  if (n < 2) throw InputError("bridge number must be at least 2");
  return (p - 1) * (n - 1) / 2;
}

Verdict obstruction_verdict(const std::vector<XiCertificate>& certs) {
  if (certs.empty()) throw InconsistencyError("no certificates for a verdict");
  bool open = false;
  for (const auto& c : certs) {
    if (c.verdict == Verdict::consistent_with_ribbon) return Verdict::consistent_with_ribbon;
    if (c.verdict == Verdict::indeterminate) open = true;
  }
  return open ? Verdict::indeterminate : Verdict::obstructed;
}

std::string to_string(ParityResult r) {
  switch (r) {
    case ParityResult::pass:
      return "pass";
    case ParityResult::fail:
      return "fail";
    case ParityResult::skipped:
      return "skipped";
  }
  return "skipped";
}

ParityResult xi3_parity_check(const XiCertificate& cert, bool rational_homology_sphere) {
  if (cert.p != 3) throw InputError("the parity check applies to p = 3 only");
  if (!rational_homology_sphere || !cert.xi) return ParityResult::skipped;
  return (*cert.xi % 2 != 0) ? ParityResult::pass : ParityResult::fail;
}

}  // namespace dihedralsig
