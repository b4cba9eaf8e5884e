#include "surfmc/report.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "surfmc/autos.h"
#include "surfmc/catalog.h"
#include "surfmc/sphere.h"

namespace surfmc {

namespace {

using Clock = std::chrono::steady_clock;

CheckRecord make(CheckStatus st, std::string detail = {}) {
  CheckRecord r;
  r.status = st;
  r.detail = std::move(detail);
  return r;
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

/// Runs selected checks, timing each and turning exceptions into failures.
class Recorder {
 public:
  Recorder(CheckConfig const &config, GenusReport &out) : config_(config), out_(out) {}

  void run(std::string const &name, std::function<CheckRecord()> const &body) {
    if (!check_selected(config_.checks, name)) return;
    auto const start = Clock::now();
    CheckRecord rec;
    try {
      rec = body();
    } catch (std::exception const &e) {
      rec = make(CheckStatus::Fail, std::string("error: ") + e.what());
    }
    rec.name = name;
    rec.ms = config_.record_timing
                 ? std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count()
                 : 0;
    out_.checks.push_back(std::move(rec));
  }

 private:
  CheckConfig const &config_;
  GenusReport &out_;
};

CheckRecord out_record(OutEqualityResult const &res, GeneratorImages const &phi,
                       GeneratorImages const &psi) {
  CheckRecord r;
  switch (res.status) {
    case OutStatus::Equal: r.status = CheckStatus::Pass; break;
    case OutStatus::NotEqual: r.status = CheckStatus::Fail; break;
    case OutStatus::Inconclusive: r.status = CheckStatus::Inconclusive; break;
  }
  r.detail = "explored=" + std::to_string(res.explored);
  if (res.witness) {
    r.witness = format_word(*res.witness);
    for (int o = 0; o < 2 * phi.genus(); ++o) r.claims.push_back({format_word(psi.at(o)), format_word(phi.at(o)), false});
  }
  return r;
}

CheckRecord sign_record(GeneratorImages const &phi, int expected, Presentation const &p,
                        SearchCaps const &caps) {
  auto const sign = orientation_sign(phi, p, caps);
  if (!sign) return make(CheckStatus::Inconclusive, "image of R freely conjugate to neither R nor R^-1");
  CheckRecord r = make(pass_if(sign->sign == expected), std::string("sign=") + (sign->sign > 0 ? "+1" : "-1"));
  r.witness = format_word(sign->witness);
  Word const base = sign->sign > 0 ? p.relator() : p.relator().inverse();
  r.claims.push_back({format_word(base), format_word(substitute(phi, p.relator())), true});
  return r;
}

Word random_word(std::mt19937_64 &rng, int genus, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, 2 * genus - 1);
  std::bernoulli_distribution flip(0.5);
  std::vector<Letter> letters;
  std::size_t const n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Letter x = generator_at(gen(rng));
    if (flip(rng)) x = x.inverse();
    letters.push_back(x);
  }
  return Word(genus, std::move(letters));
}

/// u with a few conjugated relators spliced in at random cut points.
Word insert_relators(std::mt19937_64 &rng, Word const &u, Presentation const &p) {
  std::uniform_int_distribution<int> count(1, 3);
  std::bernoulli_distribution flip(0.5);
  Word w = u;
  int const k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> cut(0, w.size());
    std::size_t const c = cut(rng);
    auto const l = w.letters();
    Word const head(p.genus(), std::vector<Letter>(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(c)));
    Word const tail(p.genus(), std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(c), l.end()));
    Word const rel = flip(rng) ? p.relator() : p.relator().inverse();
    w = multiply(multiply(head, conjugate(rel, random_word(rng, p.genus(), 6))), tail);
  }
  return w;
}

std::uint64_t genus_seed(std::uint64_t seed, int genus) {
  return seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(genus);
}

void engine_checks(Recorder &rec, int g, Presentation const &p, std::uint64_t seed) {
  rec.run("engine.relator_insertion", [&] {
    std::mt19937_64 rng(genus_seed(seed, g));
    int fails = 0;
    for (int i = 0; i < 200; ++i) {
      Word const u = random_word(rng, g, 12);
      if (!equal(insert_relators(rng, u, p), u, p)) ++fails;
    }
    return make(pass_if(fails == 0), "cases=200 failures=" + std::to_string(fails));
  });
  rec.run("engine.abelian_distinct", [&] {
    std::mt19937_64 rng(genus_seed(seed, g) ^ 0xABCDEFull);
    int fails = 0;
    for (int i = 0; i < 200; ++i) {
      Word u = random_word(rng, g, 12), v = random_word(rng, g, 12);
      while (abelianize(u) == abelianize(v)) v = random_word(rng, g, 12);
      if (equal(u, v, p)) ++fails;
    }
    return make(pass_if(fails == 0), "cases=200 failures=" + std::to_string(fails));
  });
}

void sphere_checks(Recorder &rec, int g) {
  rec.run("sphere.rotation", [&] {
    MarkedPermutation const m = rotation_perm(g);
    bool ok = m(1) == 1 && m(2 * g + 2) == 2 && m.order() == 2 * g + 1;
    for (int i = 2; i <= 2 * g + 1; ++i) ok = ok && m(i) == i + 1;
    return make(pass_if(ok), "perm=" + format_perm(m) + " order=" + std::to_string(m.order()));
  });
  rec.run("sphere.reflections", [&] {
    ReflectionPair const f = reflection_factorization(g);
    bool const ok = f.e1.is_involution() && f.e2.is_involution() && f.e1 * f.e2 == rotation_perm(g) &&
                    f.e1(1) == 1;
    auto fixed = [](MarkedPermutation const &q) {
      std::string s;
      for (int x : q.fixed_points()) s += (s.empty() ? "P" : ",P") + std::to_string(x);
      return s;
    };
    return make(pass_if(ok), "e1=" + format_perm(f.e1) + " fixes " + fixed(f.e1) + "; e2=" +
                                 format_perm(f.e2) + " fixes " + fixed(f.e2));
  });
}

void torus_checks(Recorder &rec, CheckConfig const &config) {
  int const g = 1;
  Presentation const p(g);
  rec.run("presentation.abelian_fallback", [&] {
    return make(pass_if(!p.certified() && p.relator() == surface_relator(1)),
                "relator=" + format_word(p.relator()) + " max_piece=" + std::to_string(p.max_piece()) +
                    "; free abelian of rank 2, decided by abelianization");
  });
  rec.run("torus.relations", [&] {
    TorusCatalog const tc = torus_catalog();
    IntMatrix const id = IntMatrix::identity(2);
    IntMatrix const u_inv = sl2_product({{TorusTwist::U1, -1}});
    IntMatrix const c_inv = sl2_product({{TorusTwist::C1, -1}});
    bool const ok = tc.tau * tc.tau == id && (tc.tau * tc.u1) * (tc.tau * tc.u1) == id &&
                    (tc.tau * tc.c1) * (tc.tau * tc.c1) == id && tc.tau.determinant() == -1 &&
                    tc.tau * tc.u1 * tc.tau == u_inv && tc.tau * tc.c1 * tc.tau == c_inv &&
                    symplectic_sign(tc.tau) == -1;
    CheckRecord r = make(pass_if(ok), "tau^2 = (tau U1)^2 = (tau C1)^2 = I, det(tau) = -1");
    r.matrix = tc.tau;
    return r;
  });
  rec.run("torus.sl2_roundtrip", [&] {
    std::mt19937_64 rng(genus_seed(config.seed, 1) ^ 0x5151ull);
    std::uniform_int_distribution<int> len(0, 20);
    std::bernoulli_distribution coin(0.5);
    int fails = 0;
    for (int i = 0; i < 100; ++i) {
      std::vector<Sl2Factor> word;
      int const n = len(rng);
      for (int k = 0; k < n; ++k)
        word.push_back({coin(rng) ? TorusTwist::U1 : TorusTwist::C1, coin(rng) ? 1 : -1});
      IntMatrix const a = sl2_product(word);
      if (sl2_product(sl2_decompose(a)) != a) ++fails;
    }
    return make(pass_if(fails == 0), "cases=100 failures=" + std::to_string(fails));
  });
  GeneratorImages const m = build_M(1);
  rec.run("order.homology", [&] {
    auto const d = matrix_order(matrix_of(m), 6);
    CheckRecord r = make(pass_if(d && *d == 6), "order=" + (d ? std::to_string(*d) : std::string(">6")));
    r.matrix = matrix_of(m);
    return r;
  });
  rec.run("rho.homology", [&] {
    IntMatrix const a = matrix_of(power(m, 3));
    CheckRecord r = make(pass_if(a == -IntMatrix::identity(2)), "M^3 on homology");
    r.matrix = a;
    return r;
  });
  rec.run("sign.M", [&] {
    CheckRecord r = sign_record(m, 1, p, config.caps);
    if (symplectic_sign(matrix_of(m)) != 1) r.status = CheckStatus::Fail;
    return r;
  });
  engine_checks(rec, g, p, config.seed);
  sphere_checks(rec, g);
}

void surface_checks(Recorder &rec, int g, CheckConfig const &config) {
  Presentation const p(g);
  SearchCaps const &caps = config.caps;
  IntMatrix const minus_id = -IntMatrix::identity(2 * static_cast<std::size_t>(g));
  GeneratorImages const id = GeneratorImages::identity(g);

  rec.run("presentation.certified", [&] {
    return make(pass_if(p.certified() && p.symmetrized().size() == 8 * static_cast<std::size_t>(g)),
                "max_piece=" + std::to_string(p.max_piece()) + " relator_length=" +
                    std::to_string(p.relator().size()) + " symmetrized=" + std::to_string(p.symmetrized().size()));
  });

  std::optional<Catalog> cat;
  std::string cat_error;
  try {
    cat = build_catalog(g, SearchCaps{});
  } catch (std::exception const &e) {
    cat_error = e.what();
  }
  rec.run("catalog.build", [&] {
    if (!cat) return make(CheckStatus::Fail, cat_error);
    return make(CheckStatus::Pass, "eps1, eps2 self-validated; rho = M^" + std::to_string(2 * g + 1));
  });

  auto with_catalog = [&](std::string const &name, std::function<CheckRecord(Catalog const &)> const &body) {
    rec.run(name, [&] {
      if (!cat) return make(CheckStatus::Fail, "catalog unavailable: " + cat_error);
      return body(*cat);
    });
  };

  auto involution = [&](std::string const &name, GeneratorImages Catalog::*member) {
    with_catalog("involution." + name, [&](Catalog const &c) {
      GeneratorImages const &phi = c.*member;
      GeneratorImages const sq = compose(phi, phi);
      CheckRecord r = out_record(out_equal(sq, id, p, caps), sq, id);
      r.detail += sq == id ? " square=identity in Aut" : " square=inner in Out";
      return r;
    });
  };
  involution("eps1", &Catalog::eps1);
  involution("eps2", &Catalog::eps2_explicit);
  involution("eps3", &Catalog::eps3);
  involution("rho", &Catalog::rho);

  struct Expect {
    char const *name;
    GeneratorImages Catalog::*member;
    int sign;
  };
  std::vector<Expect> const expects = {
      {"M", &Catalog::m, 1},          {"eps1", &Catalog::eps1, -1}, {"eps2", &Catalog::eps2_explicit, -1},
      {"eps2c", &Catalog::eps2_composed, -1}, {"eps3", &Catalog::eps3, -1}, {"rho", &Catalog::rho, 1},
      {"C", &Catalog::twist_c, 1}};
  for (auto const &e : expects)
    with_catalog(std::string("sign.") + e.name,
                 [&](Catalog const &c) { return sign_record(c.*(e.member), e.sign, p, caps); });

  with_catalog("sign.symplectic_coherence", [&](Catalog const &c) {
    std::string bad;
    for (auto const &e : expects)
      if (symplectic_sign(matrix_of(c.*(e.member))) != e.sign) bad += std::string(bad.empty() ? "" : ",") + e.name;
    return make(pass_if(bad.empty()), bad.empty() ? "all catalog signs agree with A^T J A" : "mismatch: " + bad);
  });

  with_catalog("homology.eps1_determinant", [&](Catalog const &c) {
    std::int64_t const det = matrix_of(c.eps1).determinant();
    CheckRecord r = make(pass_if(det == (g % 2 == 0 ? 1 : -1)), "det=" + std::to_string(det));
    r.matrix = matrix_of(c.eps1);
    return r;
  });

  with_catalog("eps2.explicit_equals_composed", [&](Catalog const &c) {
    return out_record(out_equal(c.eps2_explicit, c.eps2_composed, p, caps), c.eps2_explicit, c.eps2_composed);
  });
  with_catalog("proof.eps1_eps2_is_M", [&](Catalog const &c) {
    GeneratorImages const prod = compose(c.eps1, c.eps2_explicit);
    return out_record(out_equal(prod, c.m, p, caps), prod, c.m);
  });
  with_catalog("proof.eps1_eps3_is_C", [&](Catalog const &c) {
    GeneratorImages const prod = compose(c.eps1, c.eps3);
    return out_record(out_equal(prod, c.twist_c, p, caps), prod, c.twist_c);
  });
  with_catalog("twist.handedness", [&](Catalog const &c) {
    std::string d = "delta=" + std::to_string(c.twist.delta) + ";";
    int admissible = 0;
    for (auto const &tr : c.twist.trials) {
      d += " delta=" + std::to_string(tr.delta) + ": eps3_involution=" + (tr.eps3_involution ? "yes" : "no") +
           " right_twist_homology=" + (tr.matches_right_twist ? "yes" : "no") + ";";
      admissible += tr.eps3_involution && tr.matches_right_twist;
    }
    CheckRecord r = make(pass_if(admissible == 1), d);
    r.matrix = matrix_of(c.twist_c);
    return r;
  });

  rec.run("order.homology", [&] {
    IntMatrix const a = matrix_of(build_M(g));
    auto const d = matrix_order(a, 4 * g + 2);
    CheckRecord r = make(pass_if(d && *d == 4 * g + 2), "order=" + (d ? std::to_string(*d) : std::string("exceeds")));
    r.matrix = a;
    return r;
  });
  if (g <= config.word_order_max_genus) {
    rec.run("order.word", [&] {
      GeneratorImages const m = build_M(g);
      OrderResult const o = order_in_out(m, p, caps, 4 * g + 2);
      CheckRecord r;
      if (o.status == OrderStatus::Found) {
        r = make(pass_if(o.order == 4 * g + 2), "order=" + std::to_string(o.order));
        if (o.witness) {
          r.witness = format_word(*o.witness);
          GeneratorImages const mk = power(m, o.order);
          for (int x = 0; x < 2 * g; ++x) r.claims.push_back({format_word(id.at(x)), format_word(mk.at(x)), false});
        }
      } else if (o.status == OrderStatus::Exceeds) {
        r = make(CheckStatus::Fail, "no power up to " + std::to_string(4 * g + 2) + " is inner");
      } else {
        r = make(CheckStatus::Inconclusive, "search caps reached");
      }
      return r;
    });
  }
  with_catalog("rho.homology", [&](Catalog const &c) {
    IntMatrix const a = matrix_of(c.rho);
    CheckRecord r = make(pass_if(a == minus_id && c.rho == power(c.m, 2 * g + 1)), "rho = M^(2g+1) acts as -I");
    r.matrix = a;
    return r;
  });
  rec.run("twist_chain.product", [&] {
    IntMatrix const prod = transvection_product(chain_classes(g));
    CheckRecord r = make(pass_if(prod == matrix_of(build_M(g))), "u_i = s_i, z_i = t_i - t_{i+1}");
    r.matrix = prod;
    return r;
  });

  engine_checks(rec, g, p, config.seed);
  sphere_checks(rec, g);
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "fail";
}

void validate(CheckConfig const &config) {
  if (config.genus_list.empty()) throw std::invalid_argument("genus list is empty");
  for (int g : config.genus_list)
    if (g < 1) throw std::invalid_argument("genus must be >= 1, got " + std::to_string(g));
}

bool check_selected(std::vector<std::string> const &filter, std::string const &name) {
  if (filter.empty()) return true;
  return std::any_of(filter.begin(), filter.end(), [&](std::string const &f) {
    return f == name || (name.size() > f.size() && name.compare(0, f.size(), f) == 0 && name[f.size()] == '.');
  });
}

std::vector<std::string> check_names(int genus, int word_order_max_genus) {
  std::vector<std::string> out;
  if (genus == 1) {
    out = {"presentation.abelian_fallback", "torus.relations", "torus.sl2_roundtrip", "order.homology",
           "rho.homology", "sign.M", "engine.relator_insertion", "engine.abelian_distinct",
           "sphere.rotation", "sphere.reflections"};
  } else {
    out = {"presentation.certified", "catalog.build", "involution.eps1", "involution.eps2",
           "involution.eps3", "involution.rho", "sign.M", "sign.eps1", "sign.eps2", "sign.eps2c",
           "sign.eps3", "sign.rho", "sign.C", "sign.symplectic_coherence", "homology.eps1_determinant",
           "eps2.explicit_equals_composed", "proof.eps1_eps2_is_M", "proof.eps1_eps3_is_C",
           "twist.handedness", "order.homology", "rho.homology", "twist_chain.product",
           "engine.relator_insertion", "engine.abelian_distinct", "sphere.rotation", "sphere.reflections"};
    if (genus <= word_order_max_genus) out.push_back("order.word");
  }
  std::sort(out.begin(), out.end());
  return out;
}

GenusReport run_genus(int genus, CheckConfig const &config) {
  GenusReport out{genus, {}};
  Recorder rec(config, out);
  if (genus == 1)
    torus_checks(rec, config);
  else
    surface_checks(rec, genus, config);
  std::sort(out.checks.begin(), out.checks.end(),
            [](CheckRecord const &a, CheckRecord const &b) { return a.name < b.name; });
  return out;
}

VerificationReport run_checks(CheckConfig const &config) {
  validate(config);
  VerificationReport report;
  report.config = config;
  std::vector<int> genera = config.genus_list;
  std::sort(genera.begin(), genera.end());
  genera.erase(std::unique(genera.begin(), genera.end()), genera.end());

  std::vector<std::future<GenusReport>> jobs;
  for (int g : genera) jobs.push_back(std::async(std::launch::async, run_genus, g, std::cref(config)));
  for (auto &j : jobs) report.genera.push_back(j.get());
  return report;
}

std::string report_json(VerificationReport const &report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["version"] = report.version;
  auto const &c = report.config;
  doc["config"] = {{"genus_list", c.genus_list},
                   {"checks", c.checks},
                   {"max_bfs_nodes", c.caps.max_nodes},
                   {"length_slack", c.caps.length_slack},
                   {"centralizer_k", c.caps.centralizer_k},
                   {"seed", c.seed},
                   {"word_order_max_genus", c.word_order_max_genus},
                   {"record_timing", c.record_timing}};
  doc["genera"] = ordered_json::array();
  for (auto const &gr : report.genera) {
    ordered_json checks = ordered_json::array();
    for (auto const &r : gr.checks) {
      ordered_json rec;
      rec["name"] = r.name;
      rec["status"] = to_string(r.status);
      rec["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
      rec["matrix"] = r.matrix ? ordered_json(r.matrix->rows()) : ordered_json(nullptr);
      rec["ms"] = r.ms;
      rec["detail"] = r.detail;
      if (!r.claims.empty()) {
        rec["claims"] = ordered_json::array();
        for (auto const &cl : r.claims)
          rec["claims"].push_back({{"u", cl.u}, {"v", cl.v}, {"scope", cl.free_group ? "free" : "group"}});
      }
      checks.push_back(std::move(rec));
    }
    doc["genera"].push_back({{"genus", gr.genus}, {"checks", std::move(checks)}});
  }
  return doc.dump(2) + "\n";
}

std::string format_table(VerificationReport const &report) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "genus" << std::setw(34) << "check" << std::setw(14) << "status"
      << std::setw(8) << "ms" << "detail\n";
  for (auto const &gr : report.genera)
    for (auto const &r : gr.checks)
      out << std::left << std::setw(6) << gr.genus << std::setw(34) << r.name << std::setw(14)
          << to_string(r.status) << std::setw(8) << r.ms << r.detail << '\n';
  out << "exit code " << exit_code(report) << '\n';
  return out.str();
}

void emit_report(VerificationReport const &report, std::filesystem::path const &path,
                 std::ostream &table_out) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open report file " + path.string());
  f << report_json(report);
  if (!f) throw std::runtime_error("failed writing report file " + path.string());
  table_out << format_table(report);
}

int exit_code(VerificationReport const &report) {
  bool fail = false, inconclusive = false;
  for (auto const &gr : report.genera)
    for (auto const &r : gr.checks) {
      fail = fail || r.status == CheckStatus::Fail;
      inconclusive = inconclusive || r.status == CheckStatus::Inconclusive;
    }
  return fail ? 1 : inconclusive ? 2 : 0;
}

}  // namespace surfmc
