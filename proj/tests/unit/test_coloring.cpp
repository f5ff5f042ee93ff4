#include <doctest.h>

#include <set>

#include "dihedralsig/coloring.hpp"
#include "dihedralsig/covers.hpp"
#include "dihedralsig/errors.hpp"
#include "dihedralsig/surfaces.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dihedralsig;

namespace {

std::int64_t surjective_count(const std::vector<Coloring>& cs) {
  std::int64_t n = 0;
  for (const auto& c : cs) n += c.surjective ? 1 : 0;
  return n;
}

std::vector<std::int64_t> compose(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[static_cast<std::size_t>(a[x])];
  return r;
}

std::vector<std::int64_t> evaluate(const Word& w, const PermutationRep& rep) {
  std::vector<std::int64_t> r(static_cast<std::size_t>(rep.p));
  for (std::int64_t x = 0; x < rep.p; ++x) r[static_cast<std::size_t>(x)] = x;
  for (int letter : w) r = compose(r, rep.meridians[static_cast<std::size_t>(std::abs(letter) - 1)]);
  return r;
}

}  // namespace

TEST_CASE("trefoil 3-colorings") {
  const auto cs = fox_colorings(testsupport::knot("3_1"), 3);
  CHECK(cs.size() == 9);
  CHECK(surjective_count(cs) == 6);
  CHECK(coloring_orbits(cs).size() == 2);
}

TEST_CASE("figure-eight has no surjective 3-coloring") {
  const auto cs = fox_colorings(testsupport::knot("4_1"), 3);
  CHECK(cs.size() == 3);
  CHECK(surjective_count(cs) == 0);
}

TEST_CASE("unknot colorings are constant") {
  for (std::int64_t p : {3, 5, 7}) {
    const auto cs = fox_colorings(KnotDiagram::unknot(), p);
    CHECK(cs.size() == static_cast<std::size_t>(p));
    CHECK(surjective_count(cs) == 0);
  }
}

TEST_CASE("coloring counts agree with brute force") {
  for (const auto& k : testsupport::table().knots) {
    if (k.diagram.crossing_count() > 8) continue;
    for (std::int64_t p : {3, 5}) {
      const auto cs = fox_colorings(k.diagram, p);
      const auto bf = oracle::brute_force_colorings(k.diagram, p);
      CHECK_MESSAGE(static_cast<std::int64_t>(cs.size()) == bf.total, k.name);
      CHECK_MESSAGE(surjective_count(cs) == bf.surjective, k.name);
    }
  }
}

TEST_CASE("colorings form an affine space of prime-power size") {
  for (const auto& k : testsupport::table().knots) {
    for (std::int64_t p : {3, 5, 7}) {
      auto n = static_cast<std::int64_t>(fox_colorings(k.diagram, p).size());
      while (n % p == 0) n /= p;
      CHECK_MESSAGE(n == 1, k.name);
    }
  }
}

TEST_CASE("surjective colorings exist iff p divides the determinant") {
  for (const auto& k : testsupport::table().knots) {
    const Integer det = determinant(k.diagram);
    for (std::int64_t p : {3, 5, 7, 15}) {
      const bool exists = surjective_count(fox_colorings(k.diagram, p)) > 0;
      CHECK_MESSAGE(exists == (det % p == 0), k.name, " p=", p);
    }
  }
}

TEST_CASE("meridians are involutions with one fixed point satisfying the Wirtinger relators") {
  for (const auto& k : testsupport::table().knots) {
    const auto pres = wirtinger(k.diagram);
    for (std::int64_t p : {3, 5, 7}) {
      for (const auto& c : fox_colorings(k.diagram, p)) {
        if (!c.surjective) continue;
        const auto rep = coloring_to_rep(c);
        for (const auto& m : rep.meridians) {
          int fixed = 0;
          for (std::int64_t x = 0; x < p; ++x) {
            CHECK(m[static_cast<std::size_t>(m[static_cast<std::size_t>(x)])] == x);
            fixed += m[static_cast<std::size_t>(x)] == x ? 1 : 0;
          }
          CHECK(fixed == 1);
        }
        const auto identity = evaluate({}, rep);
        for (const auto& r : pres.relators) CHECK(evaluate(r, rep) == identity);
      }
    }
  }
}

TEST_CASE("trefoil meridians are the three transpositions") {
  const auto cs = fox_colorings(testsupport::knot("3_1"), 3);
  for (const auto& c : cs) {
    if (!c.surjective) continue;
    const auto rep = coloring_to_rep(c);
    std::set<std::vector<std::int64_t>> perms(rep.meridians.begin(), rep.meridians.end());
    CHECK(perms == std::set<std::vector<std::int64_t>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  }
}

TEST_CASE("constant colorings have no permutation representation") {
  CHECK_THROWS_AS(coloring_to_rep(Coloring{3, {1, 1, 1}, false}), InputError);
}

TEST_CASE("invalid moduli are rejected") {
  for (std::int64_t p : {4, 1, 9, 2}) CHECK_THROWS_AS(fox_colorings(testsupport::knot("3_1"), p), InputError);
}

TEST_CASE("surjectivity checks every prime factor") {
  CHECK(labels_surjective({0, 1, 2}, 3));
  CHECK_FALSE(labels_surjective({0, 3, 6}, 15));
  CHECK(labels_surjective({0, 1, 2}, 15));
  CHECK_FALSE(labels_surjective({4, 4}, 5));
}

TEST_CASE("orbits are closed under affine maps") {
  const auto cs = fox_colorings(testsupport::knot("9_46"), 3);
  const auto orbits = coloring_orbits(cs);
  std::size_t members = 0;
  for (const auto& o : orbits) {
    members += o.members.size();
    for (auto i : o.members) CHECK(canonical_labels(cs[i].labels, 3) == o.representative);
  }
  CHECK(members == cs.size());
}
