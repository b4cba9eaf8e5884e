#include "surfmc/catalog.h"

#include "surfmc/autos.h"
#include "surfmc/homology.h"

namespace surfmc {

namespace {

std::string join_details(std::string const &element, std::vector<std::string> const &details) {
  std::string out = element + " failed self-validation";
  for (auto const &d : details) out += "; " + d;
  return out;
}

void require_genus(int genus, int least, char const *what) {
  if (genus < least)
    throw std::invalid_argument(std::string(what) + " needs genus >= " + std::to_string(least) +
                                ", got " + std::to_string(genus));
}

/// Accumulates letters and conjugated blocks, reducing on construction.
class Builder {
 public:
  explicit Builder(int genus) : genus_(genus) {}

  Builder &operator<<(Letter x) {
    letters_.push_back(x);
    return *this;
  }
  Builder &operator<<(Word const &w) {
    letters_.insert(letters_.end(), w.letters().begin(), w.letters().end());
    return *this;
  }
  /// s_i^{t_i} raised to e = t_i s_i^e t_i^-1.
  Builder &sc(int i, int e = 1) { return *this << t(i) << s(i, e) << t(i, -1); }

  Word word() const { return Word(genus_, letters_); }

 private:
  int genus_;
  std::vector<Letter> letters_;
};

/// s_i^{t_i} ... s_1^{t_1} t_1
Word m_tail(int genus, int i) {
  Builder b(genus);
  for (int k = i; k >= 1; --k) b.sc(k);
  b << t(1);
  return b.word();
}

}  // namespace

FormulaFault::FormulaFault(std::string const &element, std::vector<std::string> details)
    : std::runtime_error(join_details(element, details)), details_(std::move(details)) {}

HandednessAmbiguity::HandednessAmbiguity(std::string const &what) : std::runtime_error(what) {}

GeneratorImages build_M(int genus) {
  require_genus(genus, 1, "build_M");
  int const g = genus;
  GeneratorImages m(g);
  for (int i = 1; i <= g; ++i) {
    Word const tail = m_tail(g, i);
    m.set(t(i), tail);
    Builder b(g);
    b << tail.inverse();
    if (i < g)
      b << t(i + 1) << t(i, -1);
    else
      b << t(g, -1);
    b << tail;
    m.set(s(i), b.word());
  }
  return m;
}

GeneratorImages transcribe_eps1(int genus) {
  require_genus(genus, 2, "eps1");
  int const g = genus;
  GeneratorImages e(g);
  for (int i = 1; i <= g - 2; ++i) {
    Builder ti(g);
    ti << t(g - 1, -1);
    for (int k = 1; k <= g - 1 - i; ++k) ti << s(k, -1);
    e.set(t(i), ti.word());
    e.set(s(i), Word(g, {t(g - 1 - i, -1), t(g - i)}));
  }
  e.set(t(g - 1), Word(g, {t(g - 1, -1)}));
  Builder sg1(g);
  for (int k = g; k >= 1; --k) sg1 << s(k);
  sg1 << t(1);
  e.set(s(g - 1), sg1.word());
  e.set(t(g), Word(g, {t(g - 1, -1), t(g)}));
  e.set(s(g), Word(g, {s(g, -1)}));
  return e;
}

std::vector<std::string> symmetry_diagnostics(GeneratorImages const &phi, Presentation const &p,
                                              SearchCaps const &caps) {
  std::vector<std::string> out;
  OutEqualityResult const inv = is_involution_in_out(phi, p, caps);
  if (inv.status != OutStatus::Equal) {
    out.push_back(inv.status == OutStatus::NotEqual ? "square is not inner"
                                                    : "square inconclusive within caps");
    GeneratorImages const sq = compose(phi, phi);
    for (int o = 0; o < 2 * p.genus(); ++o) {
      Word const x(p.genus(), {generator_at(o)});
      auto const r = conjugacy_witness(x, sq.at(o), p, caps);
      if (r.status != SearchStatus::Found)
        out.push_back("square sends " + format_word(x) + " to " + format_word(sq.at(o)) +
                      ", not a conjugate of it");
    }
  }
  auto const sign = orientation_sign(phi, p, caps);
  if (!sign)
    out.push_back("image of R is freely conjugate to neither R nor R^-1: " +
                  format_word(substitute(phi, p.relator())));
  else if (sign->sign != -1)
    out.push_back("orientation preserving, expected reversing");
  return out;
}

GeneratorImages build_eps1(int genus, SearchCaps const &caps) {
  GeneratorImages e = transcribe_eps1(genus);
  Presentation const p(genus);
  if (auto d = symmetry_diagnostics(e, p, caps); !d.empty()) throw FormulaFault("eps1", std::move(d));
  return e;
}

GeneratorImages transcribe_eps2(int genus) {
  require_genus(genus, 2, "eps2");
  int const g = genus;
  GeneratorImages e(g);
  for (int i = 1; i <= g - 2; ++i) {
    Builder ti(g);
    ti << t(g - 1, -1);
    for (int k = 1; k <= g - 1 - i; ++k) ti << s(k, -1);
    ti << t(g - 1 - i, -1);
    for (int k = g - i; k <= g - 1; ++k) ti.sc(k, -1);
    ti << t(g - 1) << s(g - 1);
    e.set(t(i), ti.word());

    Builder si(g);
    si << s(g - 1, -1) << t(g - 1, -1);
    for (int k = g - 1; k >= g - i; --k) si.sc(k);
    si.sc(g - 1 - i);
    for (int k = g - i; k <= g - 1; ++k) si.sc(k, -1);
    si << t(g - 1) << s(g - 1);
    e.set(s(i), si.word());
  }
  Builder tg1(g);
  tg1 << t(g - 1, -1);
  tg1.sc(g);
  tg1 << t(g - 1) << s(g - 1);
  e.set(t(g - 1), tg1.word());

  Builder sg1(g);
  sg1 << s(g - 1, -1) << t(g - 1, -1);
  sg1.sc(g, -1);
  sg1 << t(g);
  sg1.sc(g);
  sg1 << t(g - 1) << s(g - 1);
  e.set(s(g - 1), sg1.word());

  e.set(t(g), Word(g, {s(g - 1)}));
  e.set(s(g), Word(g, {s(g - 1, -1), t(g, -1), t(g - 1), s(g - 1)}));
  return e;
}

GeneratorImages build_eps2(int genus, Eps2Mode mode, SearchCaps const &caps) {
  require_genus(genus, 2, "eps2");
  GeneratorImages const composed = compose(build_eps1(genus, caps), build_M(genus));
  if (mode == Eps2Mode::Composed) return composed;
  GeneratorImages e = transcribe_eps2(genus);
  Presentation const p(genus);
  auto d = symmetry_diagnostics(e, p, caps);
  OutEqualityResult const same = out_equal(e, composed, p, caps);
  if (same.status != OutStatus::Equal) {
    d.push_back("explicit images differ from eps1 o M in Out");
    for (int o = 0; o < 2 * genus; ++o)
      if (abelianize(e.at(o)) != abelianize(composed.at(o)))
        d.push_back("homology of the image of " + format_word(Word(genus, {generator_at(o)})) +
                    " disagrees");
  }
  if (!d.empty()) throw FormulaFault("eps2", std::move(d));
  return e;
}

GeneratorImages twist_C(int genus, int delta) {
  require_genus(genus, 2, "twist C");
  if (delta != 1 && delta != -1) throw std::invalid_argument("twist handedness must be +1 or -1");
  int const g = genus;
  int const k = g - 1;
  GeneratorImages c(g);
  c.set(s(k), Word(g, {s(k), t(k, delta)}));
  for (int i = 1; i < k; ++i) {
    c.set(t(i), Word(g, {t(k, -delta), t(i), t(k, delta)}));
    c.set(s(i), Word(g, {t(k, -delta), s(i), t(k, delta)}));
  }
  return c;
}

TwistBuild build_twist_C_detailed(int genus, SearchCaps const &caps) {
  require_genus(genus, 2, "twist C");
  Presentation const p(genus);
  GeneratorImages const eps1 = transcribe_eps1(genus);
  HomologyMatrix const right = transvection(basis_vector(genus, t(genus - 1)));

  TwistBuild out{GeneratorImages(genus), 0, {}};
  int chosen = 0;
  for (int delta : {1, -1}) {
    GeneratorImages c = twist_C(genus, delta);
    HandednessTrial trial{delta, false, false};
    trial.eps3_involution = is_involution_in_out(compose(eps1, c), p, caps).status == OutStatus::Equal;
    trial.matches_right_twist = matrix_of(c) == right;
    out.trials.push_back(trial);
    if (trial.eps3_involution && trial.matches_right_twist) {
      ++chosen;
      out.delta = delta;
      out.images = std::move(c);
    }
  }
  if (chosen != 1)
    throw HandednessAmbiguity("twist handedness selection found " + std::to_string(chosen) +
                              " admissible signs at genus " + std::to_string(genus));
  return out;
}

GeneratorImages build_twist_C(int genus, SearchCaps const &caps) {
  return build_twist_C_detailed(genus, caps).images;
}

GeneratorImages build_rho(int genus) {
  require_genus(genus, 2, "rho");
  GeneratorImages rho = power(build_M(genus), 2 * genus + 1);
  if (matrix_of(rho) != -IntMatrix::identity(2 * static_cast<std::size_t>(genus)))
    throw FormulaFault("rho", {"M^(2g+1) does not act as -I on homology"});
  return rho;
}

Catalog build_catalog(int genus, SearchCaps const &caps) {
  require_genus(genus, 2, "catalog");
  Catalog c;
  c.genus = genus;
  c.m = build_M(genus);
  c.eps1 = build_eps1(genus, caps);
  c.eps2_composed = compose(c.eps1, c.m);
  c.eps2_explicit = build_eps2(genus, Eps2Mode::Explicit, caps);
  c.twist = build_twist_C_detailed(genus, caps);
  c.twist_c = c.twist.images;
  c.eps3 = compose(c.eps1, c.twist_c);
  c.rho = build_rho(genus);
  return c;
}

std::vector<std::string> catalog_names() { return {"M", "eps1", "eps2", "eps2c", "eps3", "rho", "C"}; }

GeneratorImages const &element_by_name(Catalog const &c, std::string const &name) {
  if (name == "M") return c.m;
  if (name == "eps1") return c.eps1;
  if (name == "eps2") return c.eps2_explicit;
  if (name == "eps2c") return c.eps2_composed;
  if (name == "eps3") return c.eps3;
  if (name == "rho") return c.rho;
  if (name == "C") return c.twist_c;
  throw std::invalid_argument("unknown catalog element: " + name);
}

}  // namespace surfmc
