#include "surfmc/dehn.h"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "surfmc/homology.h"

namespace surfmc {

UncertifiedPresentation::UncertifiedPresentation(int genus)
    : std::logic_error("presentation for genus " + std::to_string(genus) +
                       " is not C'(1/6); Dehn mode refused") {}

namespace {

using Codes = std::vector<int>;

struct CodesHash {
  std::size_t operator()(Codes const &c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : c) {
      h ^= static_cast<std::size_t>(x + 0x9e37);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Pushes `x` onto a reduced stack; returns false if it cancelled.
bool push_reduced(Codes &stack, int x) {
  if (!stack.empty() && stack.back() == -x) {
    stack.pop_back();
    return false;
  }
  stack.push_back(x);
  return true;
}

Codes rotate(Codes const &w, std::size_t k) {
  Codes out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

std::size_t least_rotation(Codes const &w) {
  std::size_t const n = w.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      int const a = w[(k + i) % n];
      int const b = w[(best + i) % n];
      if (a != b) {
        if (a < b) best = k;
        break;
      }
    }
  }
  return best;
}

/// Common prefix of the cyclic word `w` read from `start` and relator `r`.
std::size_t cyclic_lcp(Codes const &w, std::size_t start, Codes const &r) {
  std::size_t const n = w.size();
  std::size_t l = 0;
  while (l < r.size() && l < n && w[(start + l) % n] == r[l]) ++l;
  return l;
}

void dehn_codes(Codes &w, Presentation const &p) {
  std::size_t const rlen = p.relator().size();
  std::size_t pos = 0;
  while (pos < w.size()) {
    bool replaced = false;
    for (Codes const &r : p.starting_with(w[pos])) {
      std::size_t l = 0;
      while (l < r.size() && pos + l < w.size() && w[pos + l] == r[l]) ++l;
      if (2 * l <= r.size()) continue;
      Codes out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      std::size_t low = out.size();
      auto track = [&](int x) {
        push_reduced(out, x);
        low = std::min(low, out.size() - (out.empty() ? 0 : 1));
      };
      for (std::size_t i = r.size(); i-- > l;) track(-r[i]);
      for (std::size_t i = pos + l; i < w.size(); ++i) track(w[i]);
      w = std::move(out);
      pos = low > rlen ? low - rlen : 0;
      replaced = true;
      break;
    }
    if (!replaced) ++pos;
  }
}

/// Freely and cyclically reduces `z`, left-multiplying `conj` so that
/// z == conj * u * conj^-1 keeps holding.
void cyclic_free_reduce(Codes &z, Codes &conj) {
  std::size_t k = 0;
  while (2 * k + 1 < z.size() && z[k] == -z[z.size() - 1 - k]) ++k;
  if (k == 0) return;
  // z = y z0 y^-1  =>  z0 = y^-1 z y
  Codes next;
  for (std::size_t i = k; i-- > 0;) push_reduced(next, -z[i]);
  for (int x : conj) push_reduced(next, x);
  conj = std::move(next);
  z = Codes(z.begin() + static_cast<std::ptrdiff_t>(k), z.end() - static_cast<std::ptrdiff_t>(k));
}

/// Rotates z left by k and updates the conjugator accordingly.
void rotate_tracked(Codes &z, Codes &conj, std::size_t k) {
  if (k == 0) return;
  Codes next;
  for (std::size_t i = k; i-- > 0;) push_reduced(next, -z[i]);
  for (int x : conj) push_reduced(next, x);
  conj = std::move(next);
  z = rotate(z, k);
}

/// Cyclic Dehn reduction. Returns the number of rewrite steps taken.
std::size_t cyclic_dehn(Codes &z, Codes &conj, Presentation const &p) {
  std::size_t steps = 0;
  for (;;) {
    std::size_t const before = z.size();
    dehn_codes(z, p);
    cyclic_free_reduce(z, conj);
    if (z.size() < before) ++steps;
    // whatever survives linear reduction must wrap around the end
    bool rotated = false;
    for (std::size_t start = 1; start < z.size() && !rotated; ++start) {
      for (Codes const &r : p.starting_with(z[start])) {
        if (2 * cyclic_lcp(z, start, r) > r.size()) {
          rotate_tracked(z, conj, start);
          rotated = true;
          break;
        }
      }
    }
    if (!rotated) return steps;
  }
}

Word to_word(int genus, Codes const &c) { return Word::from_codes(genus, c); }

}  // namespace

Word surface_relator(int genus) {
  std::vector<Letter> r;
  for (int i = genus; i >= 1; --i) {
    r.push_back(t(i));
    r.push_back(s(i));
    r.push_back(t(i, -1));
  }
  for (int i = 1; i <= genus; ++i) r.push_back(s(i, -1));
  return Word(genus, std::move(r));
}

Presentation::Presentation(int genus) : genus_(genus), relator_(genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  relator_ = surface_relator(genus);

  std::vector<Codes> sym;
  for (Codes const &base : {relator_.codes(), relator_.inverse().codes()}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Codes c = rotate(base, k);
      if (std::find(sym.begin(), sym.end(), c) == sym.end()) sym.push_back(std::move(c));
    }
  }

  for (std::size_t i = 0; i < sym.size(); ++i) {
    for (std::size_t j = i + 1; j < sym.size(); ++j) {
      std::size_t l = 0;
      while (l < sym[i].size() && sym[i][l] == sym[j][l]) ++l;
      max_piece_ = std::max(max_piece_, l);
    }
  }

  by_first_.assign(4 * static_cast<std::size_t>(genus) + 1, {});
  for (Codes const &c : sym) {
    by_first_[static_cast<std::size_t>(c.front() + 2 * genus)].push_back(c);
    symmetrized_.push_back(to_word(genus, c));
  }
}

std::vector<std::vector<int>> const &Presentation::starting_with(int code) const {
  return by_first_.at(static_cast<std::size_t>(code + 2 * genus_));
}

Presentation build_presentation(int genus) { return Presentation(genus); }

Word dehn_reduce(Word const &w, Presentation const &p) {
  if (w.genus() != p.genus()) throw GenusMismatch(w.genus(), p.genus());
  if (!p.certified()) throw UncertifiedPresentation(p.genus());
  Codes c = w.codes();
  dehn_codes(c, p);
  return to_word(p.genus(), c);
}

bool equal(Word const &u, Word const &v, Presentation const &p) {
  if (u.genus() != p.genus()) throw GenusMismatch(u.genus(), p.genus());
  if (v.genus() != p.genus()) throw GenusMismatch(v.genus(), p.genus());
  if (p.genus() == 1) return abelianize(u) == abelianize(v);
  return dehn_reduce(multiply(u, v.inverse()), p).empty();
}

ConjugacyResult conjugacy_witness(Word const &u, Word const &v, Presentation const &p,
                                  SearchCaps const &caps) {
  if (u.genus() != p.genus()) throw GenusMismatch(u.genus(), p.genus());
  if (v.genus() != p.genus()) throw GenusMismatch(v.genus(), p.genus());
  int const g = p.genus();
  ConjugacyResult result;

  auto verify = [&](Word w) {
    bool const ok = equal(v, conjugate(u, w), p);
    result.status = ok ? SearchStatus::Found : SearchStatus::Inconclusive;
    result.found = ConjugacyWitness{std::move(w), ok};
  };

  if (abelianize(u) != abelianize(v)) {
    result.status = SearchStatus::NotFound;
    return result;
  }
  if (g == 1) {
    // free abelian: conjugate iff equal
    result.explored = 1;
    if (caps.max_nodes < 1) return result;
    verify(Word(g));
    return result;
  }
  if (!p.certified()) throw UncertifiedPresentation(g);

  Codes zu = u.codes(), cu;
  Codes zv = v.codes(), cv;
  result.explored = cyclic_dehn(zu, cu, p);
  cyclic_dehn(zv, cv, p);

  std::size_t const kv = zv.empty() ? 0 : least_rotation(zv);
  Codes const target = rotate(zv, kv);
  Codes const x(zv.begin(), zv.begin() + static_cast<std::ptrdiff_t>(kv));
  // target = x^-1 zv x and zv = cv v cv^-1, so v = cv^-1 x target x^-1 cv
  Word const lead = multiply(to_word(g, cv).inverse(), to_word(g, x));

  std::size_t const max_len =
      std::max(zu.size(), zv.size()) + caps.length_slack * p.relator().size();

  std::unordered_set<Codes, CodesHash> seen;
  std::deque<std::pair<Codes, Codes>> queue;
  queue.emplace_back(std::move(zu), std::move(cu));

  while (!queue.empty()) {
    auto [z, c] = std::move(queue.front());
    queue.pop_front();
    std::size_t const k = z.empty() ? 0 : least_rotation(z);
    rotate_tracked(z, c, k);
    if (seen.contains(z)) continue;
    if (result.explored >= caps.max_nodes) return result;
    ++result.explored;
    seen.insert(z);

    if (z == target) {
      verify(multiply(lead, to_word(g, c)));
      return result;
    }

    std::size_t const m = z.size();
    for (std::size_t shift = 0; shift < m; ++shift) {
      Codes rz = z;
      Codes cs = c;
      rotate_tracked(rz, cs, shift);
      for (Codes const &r : p.starting_with(rz[0])) {
        std::size_t const lmax = cyclic_lcp(rz, 0, r);
        for (std::size_t l = 1; l <= lmax; ++l) {
          Codes nz;
          for (std::size_t i = r.size(); i-- > l;) push_reduced(nz, -r[i]);
          for (std::size_t i = l; i < m; ++i) push_reduced(nz, rz[i]);
          Codes nc = cs;
          cyclic_free_reduce(nz, nc);
          if (nz.size() <= max_len) queue.emplace_back(std::move(nz), std::move(nc));
        }
      }
    }
  }
  return result;
}

}  // namespace surfmc
