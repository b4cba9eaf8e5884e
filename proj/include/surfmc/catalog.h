#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "surfmc/dehn.h"
#include "surfmc/word.h"

namespace surfmc {

/// A transcribed formula failed its self-validation. `details()` names the
/// generator images responsible.
class FormulaFault : public std::runtime_error {
 public:
  FormulaFault(std::string const &element, std::vector<std::string> details);
  std::vector<std::string> const &details() const noexcept { return details_; }

 private:
  std::vector<std::string> details_;
};

/// The right twist sign could not be pinned to exactly one value.
class HandednessAmbiguity : public std::runtime_error {
 public:
  explicit HandednessAmbiguity(std::string const &what);
};

/// The order 4g+2 rotation M:
///   t_i -> s_i^{t_i} ... s_1^{t_1} t_1
///   s_i -> (s_i^{t_i} ... s_1^{t_1} t_1)^-1 t_{i+1} t_i^-1 s_i^{t_i} ... s_1^{t_1} t_1   (i < g)
///   s_g -> (s_g^{t_g} ... s_1^{t_1} t_1)^-1 t_g^-1 s_g^{t_g} ... s_1^{t_1} t_1
GeneratorImages build_M(int genus);

/// The first reflection, exactly as transcribed (g >= 2):
///   t_i -> t_{g-1}^-1 s_1^-1 ... s_{g-1-i}^-1,  s_i -> t_{g-1-i}^-1 t_{g-i}   (i <= g-2)
///   t_{g-1} -> t_{g-1}^-1,  s_{g-1} -> s_g ... s_1 t_1,
///   t_g -> t_{g-1}^-1 t_g,  s_g -> s_g^-1
GeneratorImages transcribe_eps1(int genus);

/// Problems found when checking that phi is an orientation reversing
/// involution in Out. Empty means the element passed.
std::vector<std::string> symmetry_diagnostics(GeneratorImages const &phi, Presentation const &p,
                                              SearchCaps const &caps = {});

/// transcribe_eps1 followed by self-validation; throws FormulaFault.
GeneratorImages build_eps1(int genus, SearchCaps const &caps = {});

enum class Eps2Mode { Explicit, Composed };

/// Explicit transcribes the displayed images of eps2; Composed is eps1 o M.
GeneratorImages transcribe_eps2(int genus);
GeneratorImages build_eps2(int genus, Eps2Mode mode, SearchCaps const &caps = {});

/// Twist about the curve in the class of t_{g-1} with handedness delta:
///   s_{g-1} -> s_{g-1} t_{g-1}^delta,
///   x -> t_{g-1}^-delta x t_{g-1}^delta for the generators of index < g-1,
/// all other generators fixed. The relator is preserved letter for letter.
GeneratorImages twist_C(int genus, int delta);

struct HandednessTrial {
  int delta = 0;
  bool eps3_involution = false;        // eps1 o C is an involution in Out
  bool matches_right_twist = false;    // homology equals transvection(t_{g-1})
};

struct TwistBuild {
  GeneratorImages images;
  int delta = 0;
  std::vector<HandednessTrial> trials;
};

/// Selects the single delta passing both trials.
TwistBuild build_twist_C_detailed(int genus, SearchCaps const &caps = {});
GeneratorImages build_twist_C(int genus, SearchCaps const &caps = {});

/// M^{2g+1}; checked to act as -I on homology.
GeneratorImages build_rho(int genus);

/// Every named element for one genus >= 2.
struct Catalog {
  int genus = 0;
  GeneratorImages m{1};
  GeneratorImages eps1{1};
  GeneratorImages eps2_explicit{1};
  GeneratorImages eps2_composed{1};
  GeneratorImages twist_c{1};
  GeneratorImages eps3{1};
  GeneratorImages rho{1};
  TwistBuild twist{GeneratorImages{1}, 0, {}};
};

Catalog build_catalog(int genus, SearchCaps const &caps = {});

/// Names accepted by element_by_name: M, eps1, eps2, eps2c, eps3, rho, C.
GeneratorImages const &element_by_name(Catalog const &c, std::string const &name);
std::vector<std::string> catalog_names();

}  // namespace surfmc
