#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "surfmc/word.h"

namespace surfmc {

/// Raised when Dehn mode is requested on a presentation that is not C'(1/6).
class UncertifiedPresentation : public std::logic_error {
 public:
  explicit UncertifiedPresentation(int genus);
};

/// Limits for witness searches. `centralizer_k` bounds the centralizer
/// stepping used by Out-equality on top of the conjugacy search.
struct SearchCaps {
  std::size_t max_nodes = 1'000'000;
  std::size_t length_slack = 2;  // max length = |u| + length_slack * |R|
  int centralizer_k = 8;
};

/// The one-relator presentation of the genus-g surface group with relator
/// R = s_g^{t_g} ... s_1^{t_1} s_1^-1 ... s_g^-1 and its symmetrized closure.
class Presentation {
 public:
  explicit Presentation(int genus);

  int genus() const noexcept { return genus_; }
  Word const &relator() const noexcept { return relator_; }
  std::vector<Word> const &symmetrized() const noexcept { return symmetrized_; }
  std::size_t max_piece() const noexcept { return max_piece_; }

  /// max_piece < |R|/6, the small cancellation condition C'(1/6).
  bool certified() const noexcept { return 6 * max_piece_ < relator_.size(); }

  /// Symmetrized relators (as letter codes) whose first letter has `code`.
  std::vector<std::vector<int>> const &starting_with(int code) const;

 private:
  int genus_;
  Word relator_;
  std::vector<Word> symmetrized_;
  std::size_t max_piece_ = 0;
  std::vector<std::vector<std::vector<int>>> by_first_;
};

Presentation build_presentation(int genus);

/// The relator word R for genus g.
Word surface_relator(int genus);

/// Dehn's algorithm: replace any subword covering more than half of a
/// symmetrized relator by the shorter complement until none remains.
Word dehn_reduce(Word const &w, Presentation const &p);

/// Word problem in the surface group. Genus 1 uses the abelianization.
bool equal(Word const &u, Word const &v, Presentation const &p);

enum class SearchStatus { Found, NotFound, Inconclusive };

struct ConjugacyWitness {
  Word witness;  // v == witness * u * witness^-1 in the group
  bool verified = false;
};

struct ConjugacyResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<ConjugacyWitness> found;
  std::size_t explored = 0;
};

/// Searches for w with v = w u w^-1 in the group.
///
/// Both words are cyclically Dehn-reduced, then a breadth-first search runs
/// over cyclic words reachable from u by replacing a cyclic subword that is
/// a prefix of a symmetrized relator with the inverse of the remaining
/// suffix. NotFound is returned only when the abelianizations differ.
ConjugacyResult conjugacy_witness(Word const &u, Word const &v, Presentation const &p,
                                  SearchCaps const &caps = {});

}  // namespace surfmc
