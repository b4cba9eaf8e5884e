#pragma once

#include <string>
#include <vector>

namespace surfmc {

/// A bijection of the marked points P_1, ..., P_n of the sphere.
/// Points are 1-based in the public interface.
class MarkedPermutation {
 public:
  explicit MarkedPermutation(int n);  // identity
  explicit MarkedPermutation(std::vector<int> images);

  int points() const noexcept { return static_cast<int>(images_.size()); }
  /// Image of P_i.
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  std::vector<int> const &images() const noexcept { return images_; }

  bool is_identity() const;
  bool is_involution() const;
  std::vector<int> fixed_points() const;
  /// Cycle lengths in ascending order, fixed points included.
  std::vector<int> cycle_type() const;
  int order() const;

  /// (a * b)(x) = a(b(x)); b is applied first.
  friend MarkedPermutation operator*(MarkedPermutation const &a, MarkedPermutation const &b);
  friend bool operator==(MarkedPermutation const &, MarkedPermutation const &) = default;

 private:
  std::vector<int> images_;
};

MarkedPermutation perm_power(MarkedPermutation const &p, int k);

/// The transposition (P_i P_{i+1}) underlying the half twist sigma_i on the
/// sphere with 2g+2 marked points.
MarkedPermutation sigma_perm(int i, int genus);

/// sigma_2 sigma_3 ... sigma_{2g+1}: fixes P_1 and sends P_i to P_{i+1},
/// P_{2g+2} to P_2.
MarkedPermutation rotation_perm(int genus);

struct ReflectionPair {
  MarkedPermutation e1;
  MarkedPermutation e2;  // e1 * e2 == rotation_perm(g)
};

/// Two reflections of the (2g+1)-cycle whose product is the rotation. e1
/// fixes P_1 and the cycle point P_g when g >= 2, P_2 when g = 1.
ReflectionPair reflection_factorization(int genus);

/// All reflections of the (2g+1)-gon on P_2..P_{2g+2}, fixing P_1.
std::vector<MarkedPermutation> dihedral_reflections(int genus);

std::string format_perm(MarkedPermutation const &p);

}  // namespace surfmc
