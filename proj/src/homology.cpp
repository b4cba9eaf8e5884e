#include "surfmc/homology.h"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace surfmc {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (auto const &row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntMatrix must be square");
    std::size_t c = 0;
    for (auto x : row) (*this)(r, c++) = x;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

HomologyVector IntMatrix::column(std::size_t c) const {
  HomologyVector v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * n_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto &x : m.data_) x = -x;
  return m;
}

std::int64_t IntMatrix::determinant() const {
  // fraction-free Bareiss elimination
  std::size_t const n = n_;
  if (n == 0) return 1;
  std::vector<__int128> a(data_.begin(), data_.end());
  auto at = [&](std::size_t r, std::size_t c) -> __int128 & { return a[r * n + c]; };
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  return static_cast<std::int64_t>(sign * at(n - 1, n - 1));
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

IntMatrix operator*(IntMatrix const &a, IntMatrix const &b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix m(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r)
    for (std::size_t k = 0; k < a.n_; ++k) {
      std::int64_t const x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < a.n_; ++c) m(r, c) = checked_add(m(r, c), checked_mul(x, b(k, c)));
    }
  return m;
}

HomologyVector operator*(IntMatrix const &a, HomologyVector const &x) {
  if (a.n_ != x.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
  HomologyVector y(a.n_, 0);
  for (std::size_t r = 0; r < a.n_; ++r)
    for (std::size_t c = 0; c < a.n_; ++c) y[r] = checked_add(y[r], checked_mul(a(r, c), x[c]));
  return y;
}

IntMatrix matrix_power(IntMatrix const &a, int k) {
  if (k < 0) throw std::invalid_argument("negative matrix power");
  IntMatrix out = IntMatrix::identity(a.dim());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

std::string format_matrix(IntMatrix const &a) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < a.dim(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < a.dim(); ++c) out << (c ? ", " : "") << a(r, c);
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix intersection_form(int genus) {
  IntMatrix j(2 * static_cast<std::size_t>(genus));
  for (std::size_t i = 0; i < static_cast<std::size_t>(genus); ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

std::int64_t pairing(HomologyVector const &x, HomologyVector const &y) {
  if (x.size() != y.size() || x.size() % 2 != 0) throw std::invalid_argument("pairing dimension");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); i += 2) sum += x[i] * y[i + 1] - x[i + 1] * y[i];
  return sum;
}

HomologyVector basis_vector(int genus, Letter generator) {
  HomologyVector v(2 * static_cast<std::size_t>(genus), 0);
  v.at(static_cast<std::size_t>(generator.ordinal())) = 1;
  return v;
}

HomologyVector abelianize(Word const &w) {
  HomologyVector v(2 * static_cast<std::size_t>(w.genus()), 0);
  for (Letter x : w.letters()) v[static_cast<std::size_t>(x.ordinal())] += x.sign;
  return v;
}

HomologyMatrix matrix_of(GeneratorImages const &phi) {
  std::size_t const n = 2 * static_cast<std::size_t>(phi.genus());
  IntMatrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    HomologyVector const col = abelianize(phi.at(static_cast<int>(c)));
    for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
  }
  return m;
}

int symplectic_sign(HomologyMatrix const &a) {
  if (a.dim() == 0 || a.dim() % 2 != 0) throw std::domain_error("odd-dimensional homology matrix");
  IntMatrix const j = intersection_form(static_cast<int>(a.dim() / 2));
  IntMatrix const x = a.transpose() * j * a;
  if (x == j) return 1;
  if (x == -j) return -1;
  throw std::domain_error("matrix neither preserves nor reverses the intersection form");
}

HomologyMatrix transvection(HomologyVector const &a) {
  if (a.empty() || a.size() % 2 != 0) throw std::invalid_argument("transvection dimension");
  bool zero = true;
  for (auto x : a) zero = zero && x == 0;
  if (zero) throw std::invalid_argument("transvection along the zero class");
  std::size_t const n = a.size();
  IntMatrix const j = intersection_form(static_cast<int>(n / 2));
  HomologyVector const ja = j * a;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) += a[r] * ja[c];
  return m;
}

std::vector<HomologyVector> chain_classes(int genus) {
  if (genus < 2) throw std::invalid_argument("chain_classes needs genus >= 2");
  std::vector<HomologyVector> chain;
  for (int i = 1; i <= genus; ++i) {
    chain.push_back(basis_vector(genus, s(i)));
    HomologyVector z = basis_vector(genus, t(i));
    if (i < genus) z[static_cast<std::size_t>(t(i + 1).ordinal())] = -1;
    chain.push_back(std::move(z));
  }
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t k = i + 1; k < chain.size(); ++k) {
      auto const p = std::llabs(pairing(chain[i], chain[k]));
      if (p != (k == i + 1 ? 1 : 0)) throw std::logic_error("chain classes do not form a chain");
    }
  return chain;
}

HomologyMatrix transvection_product(std::vector<HomologyVector> const &classes) {
  if (classes.empty()) throw std::invalid_argument("empty transvection product");
  IntMatrix out = IntMatrix::identity(classes.front().size());
  for (auto const &a : classes) out = out * transvection(a);
  return out;
}

std::optional<int> matrix_order(HomologyMatrix const &a, int cap) {
  if (cap < 1) throw std::invalid_argument("matrix_order cap must be >= 1");
  IntMatrix p = a;
  for (int k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    if (k < cap) p = p * a;
  }
  return std::nullopt;
}

TorusCatalog torus_catalog() {
  return {IntMatrix{{1, 0}, {1, 1}}, IntMatrix{{1, -1}, {0, 1}}, IntMatrix{{1, 0}, {0, -1}}};
}

namespace {

void push_factor(std::vector<Sl2Factor> &out, TorusTwist tw, std::int64_t e) {
  if (e == 0) return;
  if (!out.empty() && out.back().twist == tw) {
    out.back().exponent += e;
    if (out.back().exponent == 0) out.pop_back();
    return;
  }
  out.push_back({tw, e});
}

IntMatrix twist_power(TorusTwist tw, std::int64_t e) {
  return tw == TorusTwist::U1 ? IntMatrix{{1, 0}, {e, 1}} : IntMatrix{{1, -e}, {0, 1}};
}

}  // namespace

std::vector<Sl2Factor> sl2_decompose(IntMatrix const &m) {
  if (m.dim() != 2) throw std::invalid_argument("sl2_decompose needs a 2x2 matrix");
  if (m.determinant() != 1) throw std::invalid_argument("sl2_decompose needs determinant 1");
  std::int64_t a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);

  // Left multiplications L_1, ..., L_n bringing m to upper triangular form.
  std::vector<Sl2Factor> steps;
  while (c != 0) {
    if (a != 0 && std::llabs(a) <= std::llabs(c)) {
      // U1^k: row2 += k row1
      std::int64_t const k = -(c / a);
      c += k * a;
      d += k * b;
      steps.push_back({TorusTwist::U1, k});
    } else {
      // C1^q: row1 -= q row2
      std::int64_t const q = a == 0 ? -c : a / c;
      a -= q * c;
      b -= q * d;
      steps.push_back({TorusTwist::C1, q});
    }
  }

  std::vector<Sl2Factor> out;
  for (auto const &st : steps) push_factor(out, st.twist, -st.exponent);
  if (a == 1) {
    push_factor(out, TorusTwist::C1, -b);
  } else {
    // -I = (U1 C1)^3
    for (int i = 0; i < 3; ++i) {
      push_factor(out, TorusTwist::U1, 1);
      push_factor(out, TorusTwist::C1, 1);
    }
    push_factor(out, TorusTwist::C1, b);
  }
  return out;
}

IntMatrix sl2_product(std::vector<Sl2Factor> const &factors) {
  IntMatrix out = IntMatrix::identity(2);
  for (auto const &f : factors) out = out * twist_power(f.twist, f.exponent);
  return out;
}

std::string format_sl2(std::vector<Sl2Factor> const &factors) {
  std::string out;
  for (auto const &f : factors) {
    if (!out.empty()) out += ' ';
    out += f.twist == TorusTwist::U1 ? "U1" : "C1";
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

}  // namespace surfmc
