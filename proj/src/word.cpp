#include "surfmc/word.h"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace surfmc {

GenusMismatch::GenusMismatch(int lhs, int rhs)
    : std::invalid_argument("genus mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

ParseError::ParseError(std::size_t token, std::string const &text, std::string const &why)
    : std::invalid_argument("token " + std::to_string(token) + " '" + text + "': " + why),
      token_(token) {}

namespace {

void check_genus(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1, got " + std::to_string(genus));
}

void require_same(int a, int b) {
  if (a != b) throw GenusMismatch(a, b);
}

void append_reduced(std::vector<Letter> &out, Letter x) {
  if (!out.empty() && out.back() == x.inverse())
    out.pop_back();
  else
    out.push_back(x);
}

}  // namespace

Word::Word(int genus) : genus_(genus) { check_genus(genus); }

Word::Word(int genus, std::vector<Letter> letters) : genus_(genus) {
  check_genus(genus);
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x.index < 1 || x.index > genus)
      throw std::out_of_range("generator index " + std::to_string(x.index) +
                              " outside 1.." + std::to_string(genus));
    if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    append_reduced(letters_, x);
  }
}

Word::Word(int genus, std::initializer_list<Letter> letters)
    : Word(genus, std::vector<Letter>(letters)) {}

Word Word::from_codes(int genus, std::span<const int> codes) {
  std::vector<Letter> letters;
  letters.reserve(codes.size());
  for (int c : codes) {
    if (c == 0) throw std::invalid_argument("letter code 0");
    letters.push_back(Letter::from_code(c));
  }
  return Word(genus, std::move(letters));
}

std::vector<int> Word::codes() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(x.code());
  return out;
}

Word Word::inverse() const {
  Word out(genus_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

Word parse_word(std::string_view text, int genus) {
  check_genus(genus);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  std::size_t token = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '*'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string tok(text.substr(pos, end - pos));
    pos = end;

    if (tok[0] != 't' && tok[0] != 's') throw ParseError(token, tok, "expected 't' or 's'");
    Gen const kind = tok[0] == 't' ? Gen::T : Gen::S;
    std::string_view rest(tok);
    rest.remove_prefix(1);
    int sign = 1;
    if (auto caret = rest.find('^'); caret != std::string_view::npos) {
      if (rest.substr(caret) != "^-1") throw ParseError(token, tok, "only the suffix ^-1 is allowed");
      sign = -1;
      rest = rest.substr(0, caret);
    }
    int index = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
    if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size())
      throw ParseError(token, tok, "bad generator index");
    if (index < 1 || index > genus)
      throw ParseError(token, tok, "index out of range 1.." + std::to_string(genus));
    letters.push_back({kind, index, sign});
    ++token;
  }
  return Word(genus, std::move(letters));
}

std::string format_word(Word const &w) {
  std::string out;
  for (Letter x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += x.kind == Gen::T ? 't' : 's';
    out += std::to_string(x.index);
    if (x.sign < 0) out += "^-1";
  }
  return out;
}

Word multiply(Word const &u, Word const &v) {
  require_same(u.genus(), v.genus());
  // cancel across the seam only; both halves are already reduced
  auto const a = u.letters();
  auto const b = v.letters();
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == b[k].inverse()) ++k;
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * k);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
  return Word(u.genus(), std::move(out));
}

Word invert(Word const &w) { return w.inverse(); }

Word conjugate(Word const &a, Word const &b) { return multiply(multiply(b, a), b.inverse()); }

Word word_power(Word const &w, int k) {
  Word base = k < 0 ? w.inverse() : w;
  Word out(w.genus());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, base);
  return out;
}

CyclicReduction cyclic_reduce(Word const &w) {
  auto const l = w.letters();
  std::size_t k = 0;
  while (2 * k + 1 < l.size() && l[k] == l[l.size() - 1 - k].inverse()) ++k;
  std::vector<Letter> conj(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Letter> core(l.begin() + static_cast<std::ptrdiff_t>(k),
                           l.end() - static_cast<std::ptrdiff_t>(k));
  return {Word(w.genus(), std::move(core)), Word(w.genus(), std::move(conj))};
}

std::optional<Word> free_conjugator(Word const &u, Word const &v) {
  require_same(u.genus(), v.genus());
  auto const [cu, au] = cyclic_reduce(u);
  auto const [cv, av] = cyclic_reduce(v);
  if (cu.size() != cv.size()) return std::nullopt;
  auto const x = cu.letters();
  auto const y = cv.letters();
  std::size_t const n = x.size();
  for (std::size_t k = 0; k < std::max<std::size_t>(n, 1); ++k) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = x[(k + i) % n] == y[i];
    if (!same) continue;
    // y = p^-1 x p with p = x[0..k)
    Word p(u.genus(), std::vector<Letter>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k)));
    // v = av y av^-1 = av p^-1 au^-1 u au p av^-1
    return multiply(multiply(av, p.inverse()), au.inverse());
  }
  return std::nullopt;
}

Letter generator_at(int ordinal) { return {ordinal % 2 == 0 ? Gen::T : Gen::S, ordinal / 2 + 1, 1}; }

GeneratorImages::GeneratorImages(int genus) : genus_(genus) {
  check_genus(genus);
  images_.reserve(2 * static_cast<std::size_t>(genus));
  for (int o = 0; o < 2 * genus; ++o) images_.push_back(Word(genus, {generator_at(o)}));
}

Word const &GeneratorImages::image(Letter generator) const {
  if (generator.index < 1 || generator.index > genus_)
    throw std::out_of_range("generator index out of range");
  return images_[generator.ordinal()];
}

void GeneratorImages::set(Letter generator, Word w) {
  require_same(genus_, w.genus());
  if (generator.index < 1 || generator.index > genus_)
    throw std::out_of_range("generator index out of range");
  images_[generator.ordinal()] = std::move(w);
}

Word substitute(GeneratorImages const &phi, Word const &w) {
  require_same(phi.genus(), w.genus());
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    auto const img = phi.at(x.ordinal()).letters();
    if (x.sign > 0) {
      for (Letter y : img) append_reduced(out, y);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) append_reduced(out, it->inverse());
    }
  }
  return Word(w.genus(), std::move(out));
}

std::string format_images(GeneratorImages const &phi) {
  std::string out;
  for (int o = 0; o < 2 * phi.genus(); ++o) {
    out += format_word(Word(phi.genus(), {generator_at(o)}));
    out += " -> ";
    out += format_word(phi.at(o));
    out += '\n';
  }
  return out;
}

GeneratorImages parse_images(std::string_view text, int genus) {
  GeneratorImages phi(genus);
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<bool> seen(2 * static_cast<std::size_t>(genus), false);
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto const arrow = line.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("missing '->' in: " + line);
    Word const lhs = parse_word(line.substr(0, arrow), genus);
    if (lhs.size() != 1 || lhs[0].sign != 1)
      throw std::invalid_argument("left side must be a single generator: " + line);
    phi.set(lhs[0], parse_word(line.substr(arrow + 2), genus));
    seen[lhs[0].ordinal()] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("image list does not cover every generator");
  return phi;
}

}  // namespace surfmc
