#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfmc/word.h"

namespace surfmc {

/// Coordinates in the ordered basis (t1, s1, t2, s2, ..., tg, sg).
using HomologyVector = std::vector<std::int64_t>;

/// Dense square integer matrix. Arithmetic throws std::overflow_error
/// rather than wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  std::int64_t &operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  HomologyVector column(std::size_t c) const;
  std::vector<std::vector<std::int64_t>> rows() const;

  IntMatrix transpose() const;
  IntMatrix operator-() const;
  std::int64_t determinant() const;
  bool is_identity() const;

  friend IntMatrix operator*(IntMatrix const &a, IntMatrix const &b);
  friend HomologyVector operator*(IntMatrix const &a, HomologyVector const &x);
  friend bool operator==(IntMatrix const &, IntMatrix const &) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

using HomologyMatrix = IntMatrix;

IntMatrix matrix_power(IntMatrix const &a, int k);
std::string format_matrix(IntMatrix const &a);

/// Block diagonal with [[0,1],[-1,0]] on each (t_i, s_i) pair.
IntMatrix intersection_form(int genus);

/// <x, y> = x^T J y.
std::int64_t pairing(HomologyVector const &x, HomologyVector const &y);

HomologyVector basis_vector(int genus, Letter generator);

HomologyVector abelianize(Word const &w);

/// Column j is the abelianized image of the j-th basis generator.
HomologyMatrix matrix_of(GeneratorImages const &phi);

/// +1 if A^T J A = J, -1 if A^T J A = -J. Throws std::domain_error otherwise.
int symplectic_sign(HomologyMatrix const &a);

/// x -> x + <x,a> a, the homology action of a right Dehn twist.
HomologyMatrix transvection(HomologyVector const &a);

/// Chain classes (u_1, z_1, ..., u_g, z_g) whose ordered transvection product
/// is the homology matrix of the rotation M. Frozen from a constraint search:
/// u_i = s_i and z_i = t_i - t_{i+1}, with t_{g+1} = 0.
std::vector<HomologyVector> chain_classes(int genus);

/// T(a_1) T(a_2) ... T(a_n).
HomologyMatrix transvection_product(std::vector<HomologyVector> const &classes);

/// Least k <= cap with A^k = I, or nullopt if none.
std::optional<int> matrix_order(HomologyMatrix const &a, int cap);

/// The torus twists and the sandwich reflection.
struct TorusCatalog {
  IntMatrix u1;   // [[1,0],[1,1]]
  IntMatrix c1;   // [[1,-1],[0,1]]
  IntMatrix tau;  // [[1,0],[0,-1]]
};

TorusCatalog torus_catalog();

enum class TorusTwist { U1, C1 };

struct Sl2Factor {
  TorusTwist twist;
  std::int64_t exponent;
  friend bool operator==(Sl2Factor const &, Sl2Factor const &) = default;
};

/// Writes a determinant-one 2x2 matrix as a product of U1 and C1 powers.
std::vector<Sl2Factor> sl2_decompose(IntMatrix const &a);
IntMatrix sl2_product(std::vector<Sl2Factor> const &factors);
std::string format_sl2(std::vector<Sl2Factor> const &factors);

}  // namespace surfmc
