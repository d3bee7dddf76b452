#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace richwords {

/// Symbols are small integers 0..q-1; text is mapped at the tool boundary.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

/// Smallest alphabet size that covers every symbol of `w` (1 for the empty word).
unsigned alphabet_span(WordView w);

/// 'a' -> 0, 'b' -> 1, ... ; throws std::invalid_argument on anything outside a-z.
Word word_from_letters(std::string_view text);

/// Inverse of word_from_letters for symbols < 26.
std::string letters_from_word(WordView w);

inline bool lex_less(WordView a, WordView b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Maps arbitrary lowercase input onto a compact alphabet: distinct letters in
/// sorted order become symbols 0..k-1, so rendering restores the original text.
class SymbolTable {
 public:
  explicit SymbolTable(std::string_view text);

  unsigned alphabet_size() const { return static_cast<unsigned>(letters_.size()); }
  const Word& word() const { return word_; }
  std::string render(WordView w) const;

 private:
  std::string letters_;  // sorted distinct letters; index == symbol
  Word word_;
};

}  // namespace richwords
