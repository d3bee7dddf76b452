#include "richwords/word.hpp"

#include <algorithm>

namespace richwords {

unsigned alphabet_span(WordView w) {
  Symbol mx = 0;
  for (Symbol s : w) mx = std::max(mx, s);
  return w.empty() ? 1u : static_cast<unsigned>(mx) + 1u;
}

Word word_from_letters(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument("word must consist of lowercase letters a-z");
    }
    w.push_back(static_cast<Symbol>(c - 'a'));
  }
  return w;
}

std::string letters_from_word(WordView w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (s >= 26) throw std::invalid_argument("symbol out of a-z range");
    out.push_back(static_cast<char>('a' + s));
  }
  return out;
}

SymbolTable::SymbolTable(std::string_view text) {
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument("word must consist of lowercase letters a-z");
    }
  }
  letters_.assign(text.begin(), text.end());
  std::sort(letters_.begin(), letters_.end());
  letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
  word_.reserve(text.size());
  for (char c : text) {
    const auto pos = letters_.find(c);
    word_.push_back(static_cast<Symbol>(pos));
  }
}

std::string SymbolTable::render(WordView w) const {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (s >= letters_.size()) throw std::invalid_argument("symbol outside table");
    out.push_back(letters_[s]);
  }
  return out;
}

}  // namespace richwords
