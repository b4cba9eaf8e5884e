#include "surfmc/autos.h"

#include "surfmc/homology.h"

namespace surfmc {

OrientationConflict::OrientationConflict()
    : std::logic_error("phi(R) is conjugate to both R and R^-1") {}

GeneratorImages compose(GeneratorImages const &phi, GeneratorImages const &psi) {
  if (phi.genus() != psi.genus()) throw GenusMismatch(phi.genus(), psi.genus());
  GeneratorImages out(phi.genus());
  for (int o = 0; o < 2 * phi.genus(); ++o) out.set(generator_at(o), substitute(phi, psi.at(o)));
  return out;
}

GeneratorImages power(GeneratorImages const &phi, int k) {
  if (k < 0) throw std::invalid_argument("power: exponent must be >= 0");
  GeneratorImages out = GeneratorImages::identity(phi.genus());
  for (int i = 0; i < k; ++i) out = compose(phi, out);
  return out;
}

GeneratorImages inner(Word const &w) {
  GeneratorImages out(w.genus());
  for (int o = 0; o < 2 * w.genus(); ++o)
    out.set(generator_at(o), conjugate(Word(w.genus(), {generator_at(o)}), w));
  return out;
}

OutEqualityResult out_equal(GeneratorImages const &phi, GeneratorImages const &psi,
                            Presentation const &p, SearchCaps const &caps) {
  if (phi.genus() != psi.genus()) throw GenusMismatch(phi.genus(), psi.genus());
  if (phi.genus() != p.genus()) throw GenusMismatch(phi.genus(), p.genus());
  int const g = p.genus();

  OutEqualityResult result;
  result.homology_checked = true;
  if (matrix_of(phi) != matrix_of(psi)) {
    result.status = OutStatus::NotEqual;
    return result;
  }

  auto conjugates_all = [&](Word const &w) {
    for (int o = 0; o < 2 * g; ++o)
      if (!equal(phi.at(o), conjugate(psi.at(o), w), p)) return false;
    return true;
  };

  if (g == 1) {
    // abelian: Inn is trivial, and matching matrices mean matching images
    Word const id(g);
    result.status = conjugates_all(id) ? OutStatus::Equal : OutStatus::NotEqual;
    if (result.status == OutStatus::Equal) result.witness = id;
    return result;
  }

  Word const &base = psi.at(0);
  ConjugacyResult const search = conjugacy_witness(base, phi.at(0), p, caps);
  result.explored = search.explored;
  if (search.status == SearchStatus::NotFound) {
    // phi(t1) and psi(t1) are not conjugate, so no inner element relates them
    result.status = OutStatus::NotEqual;
    return result;
  }
  if (search.status != SearchStatus::Found || !search.found || !search.found->verified) return result;

  // any conjugator is w0 times an element of the centralizer <psi(t1)>
  Word const &w0 = search.found->witness;
  for (int k = 0; k <= caps.centralizer_k; ++k) {
    for (int sgn : {1, -1}) {
      if (k == 0 && sgn < 0) continue;
      Word const w = multiply(w0, word_power(base, sgn * k));
      if (conjugates_all(w)) {
        result.status = OutStatus::Equal;
        result.witness = w;
        return result;
      }
    }
  }
  return result;
}

OutEqualityResult is_involution_in_out(GeneratorImages const &phi, Presentation const &p,
                                       SearchCaps const &caps) {
  return out_equal(compose(phi, phi), GeneratorImages::identity(phi.genus()), p, caps);
}

std::optional<OrientationSign> orientation_sign(GeneratorImages const &phi, Presentation const &p,
                                                SearchCaps const &) {
  if (phi.genus() != p.genus()) throw GenusMismatch(phi.genus(), p.genus());
  Word const &r = p.relator();
  Word const image = substitute(phi, r);
  // witness w with image = w R^e w^-1, checked letter for letter
  auto const plus = free_conjugator(r, image);
  auto const minus = free_conjugator(r.inverse(), image);
  if (plus && minus) throw OrientationConflict();
  if (plus && conjugate(r, *plus) == image) return OrientationSign{1, *plus};
  if (minus && conjugate(r.inverse(), *minus) == image) return OrientationSign{-1, *minus};
  return std::nullopt;
}

OrderResult order_in_out(GeneratorImages const &phi, Presentation const &p, SearchCaps const &caps,
                         int max_order) {
  if (max_order < 1) throw std::invalid_argument("order_in_out: max_order must be >= 1");
  OrderResult result;
  auto const d = matrix_order(matrix_of(phi), max_order);
  if (!d) {
    result.status = OrderStatus::Exceeds;
    return result;
  }
  GeneratorImages const step = power(phi, *d);
  GeneratorImages acc = step;
  GeneratorImages const id = GeneratorImages::identity(phi.genus());
  bool uncertain = false;
  for (int k = *d; k <= max_order; k += *d) {
    OutEqualityResult const eq = out_equal(acc, id, p, caps);
    if (eq.status == OutStatus::Equal) {
      if (uncertain) return result;
      result.status = OrderStatus::Found;
      result.order = k;
      result.witness = eq.witness;
      return result;
    }
    if (eq.status == OutStatus::Inconclusive) uncertain = true;
    acc = compose(step, acc);
  }
  result.status = uncertain ? OrderStatus::Inconclusive : OrderStatus::Exceeds;
  return result;
}

}  // namespace surfmc
