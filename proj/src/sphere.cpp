#include "surfmc/sphere.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace surfmc {

MarkedPermutation::MarkedPermutation(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::invalid_argument("permutation needs at least one point");
  std::iota(images_.begin(), images_.end(), 1);
}

MarkedPermutation::MarkedPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > static_cast<int>(images_.size()) || hit[static_cast<std::size_t>(x - 1)])
      throw std::invalid_argument("not a bijection");
    hit[static_cast<std::size_t>(x - 1)] = true;
  }
}

bool MarkedPermutation::is_identity() const { return *this == MarkedPermutation(points()); }

bool MarkedPermutation::is_involution() const { return (*this * *this).is_identity(); }

std::vector<int> MarkedPermutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 1; i <= points(); ++i)
    if ((*this)(i) == i) out.push_back(i);
  return out;
}

std::vector<int> MarkedPermutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 1; i <= points(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int MarkedPermutation::order() const {
  int o = 1;
  for (int len : cycle_type()) o = std::lcm(o, len);
  return o;
}

MarkedPermutation operator*(MarkedPermutation const &a, MarkedPermutation const &b) {
  if (a.points() != b.points()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(a.images_.size());
  for (int i = 1; i <= a.points(); ++i) out[static_cast<std::size_t>(i - 1)] = a(b(i));
  return MarkedPermutation(std::move(out));
}

MarkedPermutation perm_power(MarkedPermutation const &p, int k) {
  if (k < 0) throw std::invalid_argument("negative permutation power");
  MarkedPermutation out(p.points());
  for (int i = 0; i < k; ++i) out = p * out;
  return out;
}

MarkedPermutation sigma_perm(int i, int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  int const n = 2 * genus + 2;
  if (i < 1 || i > n - 1)
    throw std::out_of_range("sigma index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
  return MarkedPermutation(std::move(img));
}

MarkedPermutation rotation_perm(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  // rightmost factor first
  MarkedPermutation m(2 * genus + 2);
  for (int i = 2; i <= 2 * genus + 1; ++i) m = m * sigma_perm(i, genus);
  return m;
}

std::vector<MarkedPermutation> dihedral_reflections(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  int const n = 2 * genus + 1;  // cycle P_2 .. P_{2g+2}, position j is P_{j+2}
  std::vector<MarkedPermutation> out;
  for (int c = 0; c < n; ++c) {
    std::vector<int> img(static_cast<std::size_t>(n + 1));
    img[0] = 1;
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j + 1)] = ((c - j) % n + n) % n + 2;
    out.emplace_back(std::move(img));
  }
  return out;
}

ReflectionPair reflection_factorization(int genus) {
  MarkedPermutation const rot = rotation_perm(genus);
  int const axis = genus >= 2 ? genus : 2;
  for (auto const &e1 : dihedral_reflections(genus)) {
    if (e1(1) != 1 || e1(axis) != axis) continue;
    MarkedPermutation e2 = e1 * rot;  // e1 is its own inverse
    if (e1.is_involution() && e2.is_involution() && e1 * e2 == rot) return {e1, std::move(e2)};
  }
  throw std::logic_error("no reflection pair factors the rotation");
}

std::string format_perm(MarkedPermutation const &p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.images().size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p.images()[i]);
  }
  return out + "]";
}

}  // namespace surfmc
