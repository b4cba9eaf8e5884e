#include <doctest.h>

#include "random_words.h"
#include "surfmc/autos.h"
#include "surfmc/catalog.h"
#include "surfmc/homology.h"

using namespace surfmc;
using testing::random_word;

namespace {

/// phi(x) == w psi(x) w^-1 in the group for every generator.
bool witness_holds(GeneratorImages const &phi, GeneratorImages const &psi, Word const &w, Presentation const &p) {
  for (int o = 0; o < 2 * p.genus(); ++o)
    if (!equal(phi.at(o), conjugate(psi.at(o), w), p)) return false;
  return true;
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  GeneratorImages const id = GeneratorImages::identity(2);
  GeneratorImages const m = build_M(2), e = transcribe_eps1(2);
  CHECK(compose(id, m) == m);
  CHECK(compose(m, id) == m);
  GeneratorImages const em = compose(e, m);
  for (int o = 0; o < 4; ++o) CHECK(em.at(o) == substitute(e, m.at(o)));
  CHECK(compose(e, e) == id);
}

TEST_CASE("powers") {
  GeneratorImages const m = build_M(2);
  CHECK(power(m, 0) == GeneratorImages::identity(2));
  CHECK(power(m, 1) == m);
  CHECK(power(GeneratorImages::identity(3), 5) == GeneratorImages::identity(3));
  CHECK(power(m, 5) == compose(power(m, 2), power(m, 3)));
  CHECK(matrix_of(power(build_M(1), 3)) == -IntMatrix::identity(2));
  CHECK_THROWS(power(m, -1));
}

TEST_CASE("inner automorphisms") {
  Word const w = parse_word("t1 s2", 2);
  GeneratorImages const c = inner(w);
  CHECK(c.image_s(1) == conjugate(Word(2, {s(1)}), w));
}

TEST_CASE("out equality") {
  Presentation const p(2);
  GeneratorImages const id = GeneratorImages::identity(2);
  GeneratorImages const m = build_M(2);

  auto r = out_equal(m, m, p);
  REQUIRE(r.status == OutStatus::Equal);
  CHECK(r.witness->empty());

  r = out_equal(inner(Word(2, {t(1)})), id, p);
  REQUIRE(r.status == OutStatus::Equal);
  CHECK(format_word(*r.witness) == "t1");

  Word const x = parse_word("s1 t2^-1 s2", 2);
  GeneratorImages const twisted = compose(inner(x), m);
  r = out_equal(twisted, m, p);
  REQUIRE(r.status == OutStatus::Equal);
  CHECK(witness_holds(twisted, m, *r.witness, p));

  r = out_equal(m, id, p);
  CHECK(r.status == OutStatus::NotEqual);
  CHECK(r.homology_checked);

  GeneratorImages const eps2c = compose(transcribe_eps1(2), m);
  r = out_equal(eps2c, transcribe_eps2(2), p);
  REQUIRE(r.status == OutStatus::Equal);
  CHECK(witness_holds(eps2c, transcribe_eps2(2), *r.witness, p));
}

TEST_CASE("twists of opposite handedness cancel") {
  Presentation const p(3);
  GeneratorImages const id = GeneratorImages::identity(3);
  CHECK(compose(twist_C(3, 1), twist_C(3, -1)) == id);
  auto const r = out_equal(twist_C(3, 1), id, p);
  CHECK(r.status == OutStatus::NotEqual);
  CHECK(r.homology_checked);
}

TEST_CASE("involutions in Out") {
  Presentation const p2(2);
  auto r = is_involution_in_out(GeneratorImages::identity(2), p2);
  REQUIRE(r.status == OutStatus::Equal);
  CHECK(r.witness->empty());
  r = is_involution_in_out(transcribe_eps1(2), p2);
  REQUIRE(r.status == OutStatus::Equal);
  CHECK(compose(transcribe_eps1(2), transcribe_eps1(2)) == GeneratorImages::identity(2));
  Catalog const c = build_catalog(2);
  CHECK(is_involution_in_out(c.eps3, p2).status == OutStatus::Equal);
  CHECK(is_involution_in_out(build_M(2), p2).status == OutStatus::NotEqual);
}

TEST_CASE("orientation sign") {
  Presentation const p2(2);
  auto sg = orientation_sign(GeneratorImages::identity(2), p2);
  REQUIRE(sg);
  CHECK(sg->sign == 1);
  CHECK(sg->witness.empty());

  sg = orientation_sign(transcribe_eps1(2), p2);
  REQUIRE(sg);
  CHECK(sg->sign == -1);
  // free-group witness: no relator moves needed
  CHECK(conjugate(p2.relator().inverse(), sg->witness) == substitute(transcribe_eps1(2), p2.relator()));

  for (int g = 2; g <= 6; ++g) {
    Presentation const p(g);
    auto const m = orientation_sign(build_M(g), p);
    REQUIRE(m);
    CHECK(m->sign == 1);
    CHECK(conjugate(p.relator(), m->witness) == substitute(build_M(g), p.relator()));
  }

  // not an automorphism: R goes to a commutator of other letters
  GeneratorImages collapse(2);
  collapse.set(s(1), Word(2));
  CHECK_FALSE(orientation_sign(collapse, p2));
}

TEST_CASE("orientation sign is multiplicative on the catalog") {
  for (int g = 2; g <= 3; ++g) {
    Presentation const p(g);
    Catalog const c = build_catalog(g);
    std::vector<GeneratorImages> const els = {c.m, c.eps1, c.eps2_explicit, c.eps3, c.rho};
    for (auto const &a : els)
      for (auto const &b : els) {
        auto const sa = orientation_sign(a, p), sb = orientation_sign(b, p), sab = orientation_sign(compose(a, b), p);
        REQUIRE(sa);
        REQUIRE(sb);
        REQUIRE(sab);
        CHECK(sab->sign == sa->sign * sb->sign);
      }
  }
}

TEST_CASE("order in Out") {
  Presentation const p2(2);
  auto o = order_in_out(GeneratorImages::identity(2), p2, {}, 5);
  CHECK(o.status == OrderStatus::Found);
  CHECK(o.order == 1);

  for (int g = 2; g <= 3; ++g) {
    Presentation const p(g);
    o = order_in_out(build_M(g), p, {}, 4 * g + 2);
    REQUIRE(o.status == OrderStatus::Found);
    CHECK(o.order == 4 * g + 2);
    REQUIRE(o.witness);
    CHECK(witness_holds(power(build_M(g), o.order), GeneratorImages::identity(g), *o.witness, p));
  }
  o = order_in_out(build_M(2), p2, {}, 9);
  CHECK(o.status == OrderStatus::Exceeds);

  Presentation const p1(1);
  o = order_in_out(build_M(1), p1, {}, 6);
  REQUIRE(o.status == OrderStatus::Found);
  CHECK(o.order == 6);
}

TEST_CASE("property: inner witnesses re-verify") {
  std::mt19937_64 rng(404);
  for (int g = 2; g <= 3; ++g) {
    Presentation const p(g);
    GeneratorImages const m = build_M(g);
    for (int i = 0; i < 20; ++i) {
      Word const x = random_word(rng, g, 8);
      GeneratorImages const phi = compose(inner(x), m);
      auto const r = out_equal(phi, m, p);
      REQUIRE(r.status == OutStatus::Equal);
      CHECK(witness_holds(phi, m, *r.witness, p));
      CHECK(equal(*r.witness, x, p));
    }
  }
}
