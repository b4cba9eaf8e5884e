// Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "surfmc/autos.h"
#include "surfmc/catalog.h"
#include "surfmc/dehn.h"
#include "surfmc/homology.h"
#include "surfmc/report.h"
#include "surfmc/sphere.h"

using namespace surfmc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void criterion(int n, std::string const &title, std::function<bool(std::string &)> const &body) {
  std::string note;
  bool ok = false;
  try {
    ok = body(note);
  } catch (std::exception const &e) {
    note = std::string("exception: ") + e.what();
  }
  failures += !ok;
  std::printf("%s %2d %s%s%s\n", ok ? "PASS" : "FAIL", n, title.c_str(), note.empty() ? "" : ": ", note.c_str());
  std::fflush(stdout);
}

IntMatrix minus_identity(int g) { return -IntMatrix::identity(2 * static_cast<std::size_t>(g)); }

bool witness_holds(GeneratorImages const &phi, GeneratorImages const &psi, Word const &w, Presentation const &p) {
  for (int o = 0; o < 2 * p.genus(); ++o)
    if (!equal(phi.at(o), conjugate(psi.at(o), w), p)) return false;
  return true;
}

bool out_equal_verified(GeneratorImages const &phi, GeneratorImages const &psi, Presentation const &p) {
  OutEqualityResult const r = out_equal(phi, psi, p);
  return r.status == OutStatus::Equal && r.witness && witness_holds(phi, psi, *r.witness, p);
}

bool involution_verified(GeneratorImages const &phi, Presentation const &p) {
  return out_equal_verified(compose(phi, phi), GeneratorImages::identity(p.genus()), p);
}

Word random_word(std::mt19937_64 &rng, int genus, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, 2 * genus - 1);
  std::bernoulli_distribution flip(0.5);
  std::vector<Letter> letters;
  for (std::size_t i = 0, n = len(rng); i < n; ++i) {
    Letter x = generator_at(gen(rng));
    letters.push_back(flip(rng) ? x.inverse() : x);
  }
  return Word(genus, std::move(letters));
}

}  // namespace

int main() {
  criterion(1, "presentation certified for g = 2..10", [](std::string &note) {
    double worst = 0;
    for (int g = 2; g <= 10; ++g) {
      auto const start = Clock::now();
      Presentation const p = build_presentation(g);
      double const t = seconds_since(start);
      worst = std::max(worst, t);
      if (p.max_piece() != 1 || 6 * p.max_piece() >= 4 * static_cast<std::size_t>(g) || !p.certified() || t >= 1.0)
        return false;
    }
    note = "max_piece = 1, slowest " + std::to_string(worst) + " s";
    return true;
  });

  criterion(2, "eps1 is an involution in Out for g = 2..6", [](std::string &note) {
    for (int g = 2; g <= 6; ++g)
      if (!involution_verified(build_eps1(g), Presentation(g))) return false;
    GeneratorImages const e = transcribe_eps1(2);
    note = "square is the identity in Aut at g = 2";
    return compose(e, e) == GeneratorImages::identity(2);
  });

  criterion(3, "orientation signs for g = 2..6", [](std::string &note) {
    for (int g = 2; g <= 6; ++g) {
      Presentation const p(g);
      Catalog const c = build_catalog(g);
      std::vector<std::pair<GeneratorImages const *, int>> const expect = {
          {&c.eps1, -1}, {&c.eps2_explicit, -1}, {&c.eps2_composed, -1}, {&c.eps3, -1},
          {&c.m, 1},     {&c.rho, 1},           {&c.twist_c, 1}};
      for (auto const &[phi, sign] : expect) {
        auto const sg = orientation_sign(*phi, p);
        if (!sg || sg->sign != sign) return false;
        Word const base = sign > 0 ? p.relator() : p.relator().inverse();
        if (!equal(conjugate(base, sg->witness), substitute(*phi, p.relator()), p)) return false;
      }
    }
    Presentation const p2(2);
    GeneratorImages const e = transcribe_eps1(2);
    auto const sg = orientation_sign(e, p2);
    bool const free_ok = sg && conjugate(p2.relator().inverse(), sg->witness) == substitute(e, p2.relator());
    note = "g = 2 eps1 witness " + (sg ? format_word(sg->witness) : std::string("missing")) + " holds in the free group";
    return free_ok;
  });

  criterion(4, "explicit eps2 equals eps1 M and is an involution, g = 2..6", [](std::string &) {
    for (int g = 2; g <= 6; ++g) {
      Presentation const p(g);
      GeneratorImages const ex = transcribe_eps2(g);
      GeneratorImages const co = compose(transcribe_eps1(g), build_M(g));
      if (!out_equal_verified(ex, co, p) || !involution_verified(ex, p)) return false;
    }
    return true;
  });

  criterion(5, "eps1 eps2 = M and eps1 eps3 = C in Out, g = 2..6", [](std::string &note) {
    for (int g = 2; g <= 6; ++g) {
      Presentation const p(g);
      Catalog const c = build_catalog(g);
      if (!out_equal_verified(compose(c.eps1, c.eps2_explicit), c.m, p)) return false;
      if (!out_equal_verified(compose(c.eps1, c.eps3), c.twist_c, p)) return false;
      if (!involution_verified(c.eps3, p)) return false;
      int admissible = 0;
      for (auto const &tr : c.twist.trials) admissible += tr.eps3_involution && tr.matches_right_twist;
      if (admissible != 1) return false;
      note = "delta = " + std::to_string(c.twist.delta);
    }
    return true;
  });

  criterion(6, "M has order 4g+2 and M^(2g+1) acts as -I", [](std::string &) {
    for (int g = 1; g <= 10; ++g) {
      IntMatrix const a = matrix_of(build_M(g));
      if (matrix_order(a, 4 * g + 2) != 4 * g + 2) return false;
      if (matrix_of(power(build_M(g), 2 * g + 1)) != minus_identity(g)) return false;
    }
    for (int g = 2; g <= 4; ++g) {
      Presentation const p(g);
      OrderResult const o = order_in_out(build_M(g), p, {}, 4 * g + 2);
      if (o.status != OrderStatus::Found || o.order != 4 * g + 2 || !o.witness) return false;
      if (!witness_holds(power(build_M(g), o.order), GeneratorImages::identity(g), *o.witness, p)) return false;
    }
    return true;
  });

  criterion(7, "twist chain product equals M on homology, g = 2..10", [](std::string &) {
    for (int g = 2; g <= 10; ++g)
      if (transvection_product(chain_classes(g)) != matrix_of(build_M(g))) return false;
    return true;
  });

  criterion(8, "sphere rotation and reflection factorization, g = 1..20", [](std::string &) {
    for (int g = 1; g <= 20; ++g) {
      MarkedPermutation const m = rotation_perm(g);
      if (m(1) != 1 || m.order() != 2 * g + 1 || m(2 * g + 2) != 2) return false;
      for (int i = 2; i <= 2 * g + 1; ++i)
        if (m(i) != i + 1) return false;
      ReflectionPair const f = reflection_factorization(g);
      if (!f.e1.is_involution() || !f.e2.is_involution() || f.e1.is_identity() || f.e2.is_identity()) return false;
      if (!(f.e1 * f.e2 == m)) return false;
    }
    return true;
  });

  criterion(9, "torus symmetries and SL(2,Z) round trips", [](std::string &note) {
    TorusCatalog const tc = torus_catalog();
    IntMatrix const id = IntMatrix::identity(2);
    IntMatrix const u_inv = sl2_product({{TorusTwist::U1, -1}});
    IntMatrix const c_inv = sl2_product({{TorusTwist::C1, -1}});
    if (!(tc.tau * tc.tau == id && (tc.tau * tc.u1) * (tc.tau * tc.u1) == id &&
          (tc.tau * tc.c1) * (tc.tau * tc.c1) == id && tc.tau.determinant() == -1 &&
          tc.tau * tc.u1 * tc.tau == u_inv && tc.tau * tc.c1 * tc.tau == c_inv))
      return false;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> len(0, 20);
    std::bernoulli_distribution coin(0.5);
    int fails = 0;
    for (int i = 0; i < 100; ++i) {
      std::vector<Sl2Factor> w;
      for (int k = 0, n = len(rng); k < n; ++k)
        w.push_back({coin(rng) ? TorusTwist::U1 : TorusTwist::C1, coin(rng) ? 1 : -1});
      IntMatrix const a = sl2_product(w);
      fails += sl2_product(sl2_decompose(a)) != a;
    }
    note = "100 round trips, " + std::to_string(fails) + " failures";
    return fails == 0;
  });

  criterion(10, "engine soundness and full suite runtime", [](std::string &note) {
    std::mt19937_64 rng(424242);
    for (int g = 2; g <= 4; ++g) {
      Presentation const p(g);
      for (int i = 0; i < 200; ++i) {
        Word const u = random_word(rng, g, 10), a = random_word(rng, g, 6), b = random_word(rng, g, 10);
        if (!equal(multiply(multiply(u, conjugate(p.relator(), a)), b), multiply(u, b), p)) return false;
        Word v = random_word(rng, g, 10);
        while (abelianize(v) == abelianize(u)) v = random_word(rng, g, 10);
        if (equal(u, v, p)) return false;
      }
    }
    CheckConfig config;
    config.genus_list = {1, 2, 3, 4, 5, 6};
    auto const start = Clock::now();
    VerificationReport const report = run_checks(config);
    double const t = seconds_since(start);
    // every pass record carrying claims re-verifies
    for (auto const &gr : report.genera) {
      Presentation const p(gr.genus);
      for (auto const &rec : gr.checks) {
        if (rec.status != CheckStatus::Pass) return false;
        for (auto const &cl : rec.claims) {
          Word const image = conjugate(parse_word(cl.u, gr.genus), parse_word(*rec.witness, gr.genus));
          Word const v = parse_word(cl.v, gr.genus);
          if (!(cl.free_group ? image == v : equal(image, v, p))) return false;
        }
      }
    }
    note = "suite for g = 1..6 in " + std::to_string(t) + " s";
    return exit_code(report) == 0 && t < 600.0;
  });

  return failures == 0 ? 0 : 1;
}
