#include "dihedralsig/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dihedralsig/errors.hpp"

namespace dihedralsig {

IntMatrix coloring_matrix(const KnotDiagram& d) {
  const auto& cs = d.crossing_strands();
  IntMatrix m(cs.size(), d.strand_count());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    m(i, static_cast<std::size_t>(cs[i].under_in)) += 1;
    m(i, static_cast<std::size_t>(cs[i].under_out)) += 1;
    m(i, static_cast<std::size_t>(cs[i].over)) -= 2;
  }
  return m;
}

bool labels_surjective(const std::vector<std::int64_t>& labels, std::int64_t p) {
  if (labels.empty()) return false;
  auto primes = prime_factors(p);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto q : primes) {
    const auto first = mod_floor(labels.front(), q);
    const bool constant =
        std::all_of(labels.begin(), labels.end(), [&](std::int64_t a) { return mod_floor(a, q) == first; });
    if (constant) return false;
  }
  return true;
}

std::vector<Coloring> fox_colorings(const KnotDiagram& d, std::int64_t p) {
  require_odd_square_free(p);
  const auto kernel = kernel_mod_p(coloring_matrix(d), p);
  std::vector<Coloring> out;
  for (auto& labels : kernel.elements()) {
    Coloring c;
    c.p = p;
    c.surjective = labels_surjective(labels, p);
    c.labels = std::move(labels);
    out.push_back(std::move(c));
  }
  return out;
}

PermutationRep coloring_to_rep(const Coloring& c) {
  require_odd_square_free(c.p);
  if (!labels_surjective(c.labels, c.p))
    throw InputError("coloring is not surjective; the induced cover would be disconnected");
  PermutationRep rep;
  rep.p = c.p;
  for (auto a : c.labels) {
    std::vector<std::int64_t> perm(static_cast<std::size_t>(c.p));
    for (std::int64_t x = 0; x < c.p; ++x) perm[static_cast<std::size_t>(x)] = mod_floor(2 * a - x, c.p);
    rep.meridians.push_back(std::move(perm));
  }
  return rep;
}

std::vector<std::int64_t> canonical_labels(const std::vector<std::int64_t>& labels, std::int64_t p) {
  std::vector<std::int64_t> best, cur(labels.size());
  for (std::int64_t l = 1; l < p; ++l) {
    if (std::gcd(l, p) != 1) continue;
    for (std::int64_t m = 0; m < p; ++m) {
      for (std::size_t i = 0; i < labels.size(); ++i) cur[i] = mod_floor(l * labels[i] + m, p);
      if (best.empty() || cur < best) best = cur;
    }
  }
  return best;
}

std::vector<ColoringOrbit> coloring_orbits(const std::vector<Coloring>& colorings) {
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < colorings.size(); ++i)
    groups[canonical_labels(colorings[i].labels, colorings[i].p)].push_back(i);
  std::vector<ColoringOrbit> out;
  for (auto& [rep, members] : groups) out.push_back({rep, members});
  return out;
}

}  // namespace dihedralsig
