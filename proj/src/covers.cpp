#include "dihedralsig/covers.hpp"

#include <deque>

#include "dihedralsig/errors.hpp"

namespace dihedralsig {

namespace {

std::vector<FiberCensus> fiber_census(const PermutationRep& rep) {
  std::vector<FiberCensus> out;
  for (const auto& perm : rep.meridians) {
    FiberCensus f;
    for (std::int64_t x = 0; x < rep.p; ++x) {
      const auto y = perm[static_cast<std::size_t>(x)];
      if (y == x)
        ++f.fixed_points;
      else if (perm[static_cast<std::size_t>(y)] == x && x < y)
        ++f.two_cycles;
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

std::int64_t CosetTable::apply(std::int64_t x, int letter) const {
  const auto& row = action[static_cast<std::size_t>(std::abs(letter) - 1)];
  if (letter > 0) return row[static_cast<std::size_t>(x)];
  for (std::int64_t y = 0; y < degree; ++y)
    if (row[static_cast<std::size_t>(y)] == x) return y;
  throw InconsistencyError("coset table row is not a permutation");
}

CosetTable coset_table(const std::vector<std::vector<std::int64_t>>& perms, const GroupPresentation& pres) {
  pres.validate();
  if (perms.size() != pres.generator_count)
    throw InputError("need one permutation per generator (" + std::to_string(pres.generator_count) + ")");
  CosetTable ct;
  ct.degree = perms.empty() ? 1 : static_cast<std::int64_t>(perms.front().size());
  for (const auto& perm : perms) {
    if (static_cast<std::int64_t>(perm.size()) != ct.degree) throw InputError("permutations of unequal degree");
    std::vector<bool> hit(perm.size(), false);
    for (auto y : perm) {
      if (y < 0 || y >= ct.degree || hit[static_cast<std::size_t>(y)]) throw InputError("not a permutation");
      hit[static_cast<std::size_t>(y)] = true;
    }
  }
  ct.action = perms;

  for (const auto& r : pres.relators)
    for (std::int64_t x = 0; x < ct.degree; ++x) {
      std::int64_t y = x;
      for (int l : r) y = ct.apply(y, l);
      if (y != x) throw InconsistencyError("relator violated by the permutation action");
    }

  const auto deg = static_cast<std::size_t>(ct.degree);
  ct.transversal.assign(deg, {});
  ct.tree.assign(perms.size(), std::vector<bool>(deg, false));
  std::vector<bool> reached(deg, false);
  reached[0] = true;
  std::deque<std::int64_t> queue{0};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (int g = 1; g <= static_cast<int>(perms.size()); ++g)
      for (int letter : {g, -g}) {
        const auto y = ct.apply(x, letter);
        if (reached[static_cast<std::size_t>(y)]) continue;
        reached[static_cast<std::size_t>(y)] = true;
        ct.transversal[static_cast<std::size_t>(y)] = ct.transversal[static_cast<std::size_t>(x)];
        ct.transversal[static_cast<std::size_t>(y)].push_back(letter);
        if (letter > 0)
          ct.tree[static_cast<std::size_t>(g - 1)][static_cast<std::size_t>(x)] = true;
        else
          ct.tree[static_cast<std::size_t>(g - 1)][static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
  }
  for (bool r : reached)
    if (!r) throw InputError("permutation action is not transitive");
  return ct;
}

CosetTable coset_table(const PermutationRep& rep, const GroupPresentation& pres) {
  return coset_table(rep.meridians, pres);
}

Word SchreierPresentation::rewrite(const CosetTable& ct, std::int64_t x, const Word& w) const {
  Word out;
  for (int l : w) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    if (l > 0) {
      if (int s = generator_of[g][static_cast<std::size_t>(x)]) out.push_back(s);
      x = ct.apply(x, l);
    } else {
      x = ct.apply(x, l);
      if (int s = generator_of[g][static_cast<std::size_t>(x)]) out.push_back(-s);
    }
  }
  return free_reduce(out);
}

SchreierPresentation reidemeister_schreier(const GroupPresentation& pres, const CosetTable& ct) {
  SchreierPresentation sp;
  int next = 0;
  sp.generator_of.assign(ct.action.size(), std::vector<int>(static_cast<std::size_t>(ct.degree), 0));
  for (std::size_t g = 0; g < ct.action.size(); ++g)
    for (std::size_t x = 0; x < static_cast<std::size_t>(ct.degree); ++x)
      if (!ct.tree[g][x]) sp.generator_of[g][x] = ++next;
  sp.presentation.generator_count = static_cast<std::size_t>(next);
  for (const auto& r : pres.relators)
    for (std::int64_t x = 0; x < ct.degree; ++x) {
      auto w = sp.rewrite(ct, x, r);
      if (!w.empty()) sp.presentation.relators.push_back(std::move(w));
    }
  return sp;
}

CoverHomology branched_homology(const KnotDiagram& d, const Coloring& c) {
  const auto pres = wirtinger(d);
  const auto rep = coloring_to_rep(c);
  const auto ct = coset_table(rep, pres);
  auto sp = reidemeister_schreier(pres, ct);

  CoverHomology h;
  h.unbranched = sp.presentation.abelianization();
  h.meridian_lifts = fiber_census(rep);

  // Each orbit of a meridian on the cosets lifts to one meridian of the
  // branch set upstairs; kill the lift traversed once.
  for (std::size_t g = 0; g < rep.meridians.size(); ++g) {
    const int letter = static_cast<int>(g) + 1;
    for (std::int64_t x = 0; x < c.p; ++x) {
      const auto y = rep.meridians[g][static_cast<std::size_t>(x)];
      Word lift;
      if (y == x)
        lift = sp.rewrite(ct, x, {letter});
      else if (x < y)
        lift = sp.rewrite(ct, x, {letter, letter});
      else
        continue;
      if (!lift.empty()) sp.presentation.relators.push_back(std::move(lift));
    }
  }
  h.branched = sp.presentation.abelianization();
  return h;
}

std::int64_t genus_bound(std::int64_t p, std::int64_t n) {
  if (p < 3 || p % 2 == 0) throw InputError("p must be odd and at least 3");
  if (n < 2) throw InputError("bridge number must be at least 2");
  return (p - 1) * (n - 2) / 2;
}

SheetCensus sheet_census(const KnotDiagram& d, const Coloring& c, std::int64_t n) {
  if (c.labels.size() != d.strand_count()) throw InputError("coloring does not match the diagram");
  if (n < 1) throw InputError("bridge number must be positive");
  const auto rep = coloring_to_rep(c);
  SheetCensus s;
  s.p = c.p;
  s.n = n;
  s.fibers = fiber_census(rep);
  s.uniform = true;
  for (const auto& f : s.fibers)
    if (f.fixed_points != 1 || f.two_cycles != (c.p - 1) / 2) s.uniform = false;
  s.bridge_sphere_euler = 2 * c.p - c.p * n + n;
  s.bridge_sphere_genus = (2 - s.bridge_sphere_euler) / 2;
  return s;
}

}  // namespace dihedralsig
