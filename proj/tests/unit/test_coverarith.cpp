#include <doctest.h>

#include "dihedralsig/coverarith.hpp"
#include "dihedralsig/errors.hpp"

using namespace dihedralsig;

TEST_CASE("viro signature examples") {
  CHECK(viro_signature(CoverSpec{3, 2, {}}) == 6);
  CHECK(viro_signature(CoverSpec{2, 1, {{2, 2}}}) == 0);
  CHECK_THROWS_AS(viro_signature(CoverSpec{2, 0, {{3, 1}}}), InputError);
  CHECK_THROWS_AS(viro_signature(CoverSpec{3, 0, {{1, 1}}}), InputError);
}

TEST_CASE("viro signature of the identity cover") {
  for (int s = -4; s <= 4; ++s) CHECK(viro_signature(CoverSpec{1, s, {}}) == s);
}

TEST_CASE("viro signature is linear in the Euler numbers") {
  const CoverSpec a{4, 1, {{2, 3}}};
  const CoverSpec b{4, 1, {{4, 1}}};
  const CoverSpec ab{4, 1, {{2, 3}, {4, 1}}};
  CHECK(viro_signature(ab) == viro_signature(a) + viro_signature(b) - 4);
}

TEST_CASE("sashka signature examples") {
  for (int xi = -3; xi <= 3; ++xi) CHECK(sashka_signature(3, 0, 0, xi) == xi);
  CHECK(sashka_signature(5, 1, 4, 2) == 3);
  CHECK_THROWS_AS(sashka_signature(3, 0, 1, 0), InputError);
  CHECK_THROWS_AS(sashka_signature(4, 0, 0, 0), InputError);
}

TEST_CASE("intersection homology Euler characteristic") {
  CHECK(ih_euler_characteristic(3, 0) == 3);
  CHECK(ih_euler_characteristic(5, 2) == 2);
  CHECK(ih_euler_characteristic(3, 1) == 2);
  for (std::int64_t rk = 0; rk < 5; ++rk) CHECK(ih_euler_characteristic(7, rk) + rk == ih_euler_characteristic(7, 0));
  CHECK(disk_cover_euler(3) == 2);
  CHECK(disk_cover_euler(5) == 3);
  CHECK(disk_cover_euler(7) == 4);
  CHECK_THROWS_AS(disk_cover_euler(4), InputError);
}
