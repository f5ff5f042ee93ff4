#include <doctest.h>

#include <numeric>
#include <random>

#include "dihedralsig/errors.hpp"
#include "dihedralsig/xi.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dihedralsig;

namespace {

XiCertificate cert_with(std::int64_t xi, std::int64_t bound) {
  XiCertificate c;
  c.p = 3;
  c.xi = xi;
  apply_bound(c, bound);
  return c;
}

}  // namespace

TEST_CASE("trefoil characteristic class") {
  const auto s = seifert_matrix(parse_braid("k=2; 1 1 1"));
  const auto cs = characteristic_classes(s, 3);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].xi == std::vector<std::int64_t>{1, 2});
  CHECK(cs[0].primitive);
  CHECK(linking_self_value(s, cs[0]) == -6);
}

TEST_CASE("no characteristic class when p is coprime to the determinant") {
  CHECK(characteristic_classes(seifert_matrix(parse_braid("k=3; 1 -2 1 -2")), 3).empty());
  CHECK(characteristic_classes(seifert_matrix(parse_braid("k=2; 1 1 1")), 5).empty());
}

TEST_CASE("linking self value of an exactly annihilated class is zero") {
  SeifertData s;
  s.L = IntMatrix{{0, 1}, {-1, 0}};
  s.symmetrized = s.L + s.L.transpose();
  s.genus = 1;
  CHECK(linking_self_value(s, CharacteristicClass{3, {1, 2}, true}) == 0);
  CHECK_THROWS_AS(linking_self_value(s, CharacteristicClass{3, {0, 0}, false}), InputError);
}

TEST_CASE("characteristic classes are isotropic mod p") {
  for (const auto& k : testsupport::table().knots) {
    if (!k.braid) continue;
    const auto s = seifert_matrix(*k.braid);
    for (std::int64_t p : {3, 5, 7}) {
      const auto cs = characteristic_classes(s, p);
      CHECK_MESSAGE(cs.empty() == (determinant(k.diagram) % p != 0), k.name);
      for (const auto& c : cs) CHECK(linking_self_value(s, c) % p == 0);
    }
  }
}

TEST_CASE("Tristram-Levine signatures of the trefoil") {
  const IntMatrix L{{-1, 1}, {0, -1}};
  CHECK(tristram_levine(L, 3, 1) == -2);
  CHECK(tristram_levine(L, 3, 2) == -2);
  CHECK(tristram_levine(IntMatrix(0, 0), 3, 1) == 0);
  CHECK(tristram_levine_family(L, 3) == std::vector<int>{-2, -2});
  CHECK_THROWS_AS(tristram_levine(L, 3, 3), InputError);
  CHECK_THROWS_AS(tristram_levine(L, 3, 0), InputError);
}

TEST_CASE("Tristram-Levine at -1 is the classical signature") {
  for (const auto& k : testsupport::table().knots) {
    if (!k.braid) continue;
    const auto s = seifert_matrix(*k.braid);
    CHECK_MESSAGE(tristram_levine(s.L, 2, 1) == oracle::exact_signature(s.symmetrized), k.name);
  }
}

TEST_CASE("Tristram-Levine families are conjugate symmetric and bounded") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> half(1, 2);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 * half(rng);
    const auto L = oracle::random_matrix(rng, n, n, 3);
    for (std::int64_t p : {3, 5, 7}) {
      std::vector<int> tl;
      try {
        tl = tristram_levine_family(L, p);
      } catch (const IndeterminateError&) {
        continue;
      }
      ++checked;
      for (std::size_t i = 0; i < tl.size(); ++i) {
        CHECK(tl[i] == tl[tl.size() - 1 - i]);
        CHECK(std::abs(tl[i]) <= static_cast<int>(n));
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("assemble_xi examples") {
  const auto c = assemble_xi(3, -6, 11, {-2, -2});
  REQUIRE(c.xi);
  CHECK(*c.xi == -1);
  CHECK_THROWS_AS(assemble_xi(3, -5, 0, {0, 0}), InputError);
  const auto z = assemble_xi(3, 0, 0, {0, 0});
  CHECK(*z.xi == 0);
  CHECK(xi3_parity_check(z, true) == ParityResult::fail);
  CHECK_THROWS_AS(assemble_xi(3, 0, 0, {0}), InputError);
  CHECK_THROWS_AS(assemble_xi(5, 0, 0, {1, 0, 0, 0}), InputError);
}

TEST_CASE("assemble_xi is affine in sigma_W and integral on valid input") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> u(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    for (std::int64_t p : {3, 5, 7}) {
      const Integer lv = Integer(u(rng)) * p;
      const Integer sw = u(rng);
      std::vector<int> tl(static_cast<std::size_t>(p - 1));
      for (std::size_t i = 0; i < tl.size() / 2; ++i) tl[i] = tl[tl.size() - 1 - i] = u(rng) % 4;
      const auto a = assemble_xi(p, lv, sw, tl);
      const auto b = assemble_xi(p, lv, sw + 1, tl);
      CHECK(*b.xi == *a.xi + 1);
      CHECK(Rational(p * p - 1, 6) * Rational(lv) == Rational(*a.xi - sw - std::accumulate(tl.begin(), tl.end(), 0)));
    }
  }
}

TEST_CASE("integrality guard only bites at p = 3") {
  for (std::int64_t p : {5, 7, 11, 13})
    for (int lv = -5; lv <= 5; ++lv) CHECK_NOTHROW(assemble_xi(p, lv, 0, std::vector<int>(static_cast<std::size_t>(p - 1), 0)));
  for (int lv = -5; lv <= 5; ++lv) {
    if (lv % 3 == 0)
      CHECK_NOTHROW(assemble_xi(3, lv, 0, {0, 0}));
    else
      CHECK_THROWS_AS(assemble_xi(3, lv, 0, {0, 0}), InputError);
  }
}

TEST_CASE("ribbon and bridge bounds") {
  CHECK(ribbon_bound(3, 0) == 1);
  CHECK(ribbon_bound(5, 2) == 4);
  CHECK(bridge_bound(3, 2) == 1);
  CHECK(bridge_bound(5, 3) == 4);
  CHECK(bridge_bound(3, 4) == 3);
  CHECK_THROWS_AS(bridge_bound(3, 1), InputError);
}

TEST_CASE("two-bridge knots get ribbon bound 1 at p = 3") {
  for (const auto& k : testsupport::table().knots)
    if (testsupport::two_bridge(k)) CHECK(ribbon_bound(3, 0) == bridge_bound(3, k.bridge_number()));
}

TEST_CASE("obstruction verdicts") {
  CHECK(obstruction_verdict({cert_with(3, 1), cert_with(-2, 1)}) == Verdict::obstructed);
  CHECK(obstruction_verdict({cert_with(3, 1), cert_with(1, 1)}) == Verdict::consistent_with_ribbon);
  XiCertificate missing;
  missing.p = 3;
  CHECK(obstruction_verdict({missing, missing}) == Verdict::indeterminate);
  CHECK(obstruction_verdict({cert_with(3, 1), missing}) == Verdict::indeterminate);
  CHECK_THROWS_AS(obstruction_verdict({}), InconsistencyError);
  CHECK(to_string(Verdict::consistent_with_ribbon) == "consistent-with-ribbon");
}

TEST_CASE("enlarging the certificate set never creates an obstruction") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> v(-3, 3);
  std::bernoulli_distribution has(0.8);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<XiCertificate> certs;
    for (int i = 0; i < 3; ++i) {
      XiCertificate c;
      c.p = 3;
      if (has(rng)) c.xi = v(rng);
      apply_bound(c, 1);
      certs.push_back(c);
    }
    const auto before = obstruction_verdict(certs);
    XiCertificate extra;
    extra.p = 3;
    if (has(rng)) extra.xi = v(rng);
    apply_bound(extra, 1);
    certs.push_back(extra);
    const auto after = obstruction_verdict(certs);
    if (before != Verdict::obstructed) CHECK(after != Verdict::obstructed);
  }
}

TEST_CASE("parity check for p = 3") {
  CHECK(xi3_parity_check(cert_with(-1, 1), true) == ParityResult::pass);
  CHECK(xi3_parity_check(cert_with(0, 1), true) == ParityResult::fail);
  CHECK(xi3_parity_check(cert_with(0, 1), false) == ParityResult::skipped);
  XiCertificate five = cert_with(1, 1);
  five.p = 5;
  CHECK_THROWS_AS(xi3_parity_check(five, true), InputError);
}
