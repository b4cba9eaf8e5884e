#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace surfmc {

/// Thrown when two operands live in surface groups of different genus.
class GenusMismatch : public std::invalid_argument {
 public:
  GenusMismatch(int lhs, int rhs);
};

/// Malformed word text. `token()` is the 0-based token position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t token, std::string const &text, std::string const &why);
  std::size_t token() const noexcept { return token_; }

 private:
  std::size_t token_;
};

enum class Gen : std::uint8_t { T, S };

/// A signed generator letter t_i^{±1} or s_i^{±1}.
struct Letter {
  Gen kind = Gen::T;
  int index = 1;
  int sign = 1;

  constexpr Letter inverse() const noexcept { return {kind, index, -sign}; }

  /// Position of the generator in the basis (t1, s1, t2, s2, ...), 0-based.
  constexpr int ordinal() const noexcept {
    return 2 * (index - 1) + (kind == Gen::S ? 1 : 0);
  }

  /// Nonzero signed code: +(ordinal+1) or -(ordinal+1).
  constexpr int code() const noexcept { return sign * (ordinal() + 1); }

  static constexpr Letter from_code(int code) noexcept {
    int const o = (code > 0 ? code : -code) - 1;
    return {o % 2 == 0 ? Gen::T : Gen::S, o / 2 + 1, code > 0 ? 1 : -1};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
};

constexpr Letter t(int i, int sign = 1) noexcept { return {Gen::T, i, sign}; }
constexpr Letter s(int i, int sign = 1) noexcept { return {Gen::S, i, sign}; }

/// Freely reduced word in the generators of the genus-g surface group.
///
/// Every constructor reduces, so a `Word` never holds an adjacent cancelling
/// pair. The empty word is the identity.
class Word {
 public:
  explicit Word(int genus = 1);
  Word(int genus, std::vector<Letter> letters);
  Word(int genus, std::initializer_list<Letter> letters);

  static Word identity(int genus) { return Word(genus); }
  static Word from_codes(int genus, std::span<const int> codes);

  int genus() const noexcept { return genus_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::vector<int> codes() const;

  Word inverse() const;

  friend bool operator==(Word const &, Word const &) = default;
  friend auto operator<=>(Word const &a, Word const &b) {
    if (auto c = a.genus_ <=> b.genus_; c != 0) return c;
    return a.codes() <=> b.codes();
  }

 private:
  int genus_;
  std::vector<Letter> letters_;
};

/// Parses whitespace- or '*'-separated tokens `t<k>`, `s<k>`, optionally
/// suffixed `^-1`.
Word parse_word(std::string_view text, int genus);

/// Canonical text: tokens joined by single spaces, identity as "".
std::string format_word(Word const &w);

Word multiply(Word const &u, Word const &v);
Word invert(Word const &w);

/// a^b = b a b^-1.
Word conjugate(Word const &a, Word const &b);

/// w^k for any integer k.
Word word_power(Word const &w, int k);

struct CyclicReduction {
  Word core;
  Word conj;  // w == conj * core * conj^-1 in the free group
};

CyclicReduction cyclic_reduce(Word const &w);

/// Some x with v == x u x^-1 in the free group, if u and v are freely
/// conjugate.
std::optional<Word> free_conjugator(Word const &u, Word const &v);

/// An endomorphism of the surface group given by the images of the 2g
/// generators, stored in basis order (t1, s1, ..., tg, sg).
class GeneratorImages {
 public:
  explicit GeneratorImages(int genus);
  static GeneratorImages identity(int genus) { return GeneratorImages(genus); }

  int genus() const noexcept { return genus_; }
  Word const &image(Letter generator) const;
  Word const &image_t(int i) const { return image(t(i)); }
  Word const &image_s(int i) const { return image(s(i)); }
  Word const &at(int ordinal) const { return images_.at(ordinal); }
  void set(Letter generator, Word w);
  std::size_t size() const noexcept { return images_.size(); }

  friend bool operator==(GeneratorImages const &, GeneratorImages const &) = default;

 private:
  int genus_;
  std::vector<Word> images_;
};

/// The generator letter (positive) at a basis position.
Letter generator_at(int ordinal);

Word substitute(GeneratorImages const &phi, Word const &w);

/// One line per generator: `<gen> -> <word>`.
std::string format_images(GeneratorImages const &phi);
GeneratorImages parse_images(std::string_view text, int genus);

}  // namespace surfmc
