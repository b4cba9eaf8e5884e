#pragma once

#include <optional>
#include <stdexcept>

#include "surfmc/dehn.h"
#include "surfmc/word.h"

namespace surfmc {

/// (phi o psi)(x) = phi(psi(x)); psi is applied first.
GeneratorImages compose(GeneratorImages const &phi, GeneratorImages const &psi);

/// phi^k by iterated composition, k >= 0.
GeneratorImages power(GeneratorImages const &phi, int k);

/// The inner automorphism x -> w x w^-1.
GeneratorImages inner(Word const &w);

enum class OutStatus { Equal, NotEqual, Inconclusive };

struct OutEqualityResult {
  OutStatus status = OutStatus::Inconclusive;
  std::optional<Word> witness;  // phi(x) == w psi(x) w^-1 for every generator x
  bool homology_checked = false;
  std::size_t explored = 0;
};

/// Decides whether phi and psi agree in Out(pi_1).
///
/// Differing homology matrices give a sound NotEqual. Otherwise a conjugator
/// w0 with phi(t1) = w0 psi(t1) w0^-1 is searched for, and the candidates
/// w0 psi(t1)^k, |k| <= caps.centralizer_k, are tested on every generator.
OutEqualityResult out_equal(GeneratorImages const &phi, GeneratorImages const &psi,
                            Presentation const &p, SearchCaps const &caps = {});

OutEqualityResult is_involution_in_out(GeneratorImages const &phi, Presentation const &p,
                                       SearchCaps const &caps = {});

/// Both R and R^-1 were reachable from phi(R); the orientation dichotomy is
/// broken.
class OrientationConflict : public std::logic_error {
 public:
  OrientationConflict();
};

struct OrientationSign {
  int sign = 1;
  Word witness;  // phi(R) == witness R^sign witness^-1
};

/// Orientation character of phi: +1 if phi(R) is conjugate to R, -1 if to
/// R^-1. Conjugacy is decided in the free group on the lifted images, which
/// is exact; nullopt means phi(R) is freely conjugate to neither.
std::optional<OrientationSign> orientation_sign(GeneratorImages const &phi, Presentation const &p,
                                                SearchCaps const &caps = {});

enum class OrderStatus { Found, Exceeds, Inconclusive };

struct OrderResult {
  OrderStatus status = OrderStatus::Inconclusive;
  int order = 0;
  std::optional<Word> witness;  // phi^order == conjugation by witness
};

/// Smallest k <= max_order with phi^k inner. Only multiples of the homology
/// order are tested.
OrderResult order_in_out(GeneratorImages const &phi, Presentation const &p, SearchCaps const &caps,
                         int max_order);

}  // namespace surfmc
