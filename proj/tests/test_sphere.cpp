#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "surfmc/sphere.h"

using namespace surfmc;

TEST_CASE("permutation basics") {
  MarkedPermutation const id(4);
  CHECK(id.is_identity());
  MarkedPermutation const p({2, 3, 1, 4});
  CHECK(p(1) == 2);
  CHECK(p.order() == 3);
  CHECK(p.cycle_type() == std::vector<int>{1, 3});
  CHECK(p.fixed_points() == std::vector<int>{4});
  CHECK(perm_power(p, 3).is_identity());
  CHECK_THROWS(MarkedPermutation({1, 1, 2}));
  CHECK_THROWS(MarkedPermutation({1, 4}));
  CHECK_THROWS(MarkedPermutation(3) * MarkedPermutation(4));
}

TEST_CASE("product applies the right factor first") {
  MarkedPermutation const a({2, 1, 3});  // (P1 P2)
  MarkedPermutation const b({1, 3, 2});  // (P2 P3)
  CHECK((a * b)(2) == a(b(2)));
  CHECK((a * b)(2) == 3);
  CHECK(format_perm(a * b) == "[2, 3, 1]");
}

TEST_CASE("half twists") {
  CHECK(format_perm(sigma_perm(1, 1)) == "[2, 1, 3, 4]");
  CHECK_THROWS_AS(sigma_perm(4, 1), std::out_of_range);
  CHECK_THROWS_AS(sigma_perm(0, 1), std::out_of_range);
}

TEST_CASE("rotation") {
  CHECK(format_perm(rotation_perm(1)) == "[1, 3, 4, 2]");
  CHECK(format_perm(rotation_perm(2)) == "[1, 3, 4, 5, 6, 2]");
  for (int g = 1; g <= 20; ++g) {
    MarkedPermutation const m = rotation_perm(g);
    CHECK(m(1) == 1);
    for (int i = 2; i <= 2 * g + 1; ++i) CHECK(m(i) == i + 1);
    CHECK(m(2 * g + 2) == 2);
    CHECK(m.order() == 2 * g + 1);
  }
}

TEST_CASE("reflection factorization") {
  ReflectionPair const f1 = reflection_factorization(1);
  CHECK(format_perm(f1.e1) == "[1, 2, 4, 3]");
  CHECK(format_perm(f1.e2) == "[1, 4, 3, 2]");
  for (int g = 1; g <= 20; ++g) {
    ReflectionPair const f = reflection_factorization(g);
    CHECK(f.e1.is_involution());
    CHECK(f.e2.is_involution());
    CHECK_FALSE(f.e1.is_identity());
    CHECK(f.e1 * f.e2 == rotation_perm(g));
    CHECK(f.e1(1) == 1);
    CHECK(f.e1(g >= 2 ? g : 2) == (g >= 2 ? g : 2));
  }
}

TEST_CASE("brute force: involution pairs factoring the rotation are the dihedral reflections") {
  // all permutations of 2g+2 points for g = 1, 2
  for (int g = 1; g <= 2; ++g) {
    int const n = 2 * g + 2;
    MarkedPermutation const rot = rotation_perm(g);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    std::vector<MarkedPermutation> found;
    do {
      MarkedPermutation const e1(img);
      if (!e1.is_involution() || e1.is_identity()) continue;
      MarkedPermutation const e2 = e1 * rot;
      if (e2.is_involution() && !e2.is_identity() && e1 * e2 == rot) found.push_back(e1);
    } while (std::next_permutation(img.begin(), img.end()));
    auto const dihedral = dihedral_reflections(g);
    CHECK(found.size() == dihedral.size());
    CHECK(found.size() == static_cast<std::size_t>(2 * g + 1));
    for (auto const &d : dihedral) CHECK(std::find(found.begin(), found.end(), d) != found.end());
  }
}
