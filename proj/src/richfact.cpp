#include "richwords/richfact.hpp"

#include <algorithm>
#include <limits>
#include <string_view>
#include <unordered_set>

#include "richwords/eertree.hpp"

namespace richwords {

bool is_rich(WordView w) {
  if (w.empty()) return true;
  Eertree tree(alphabet_span(w));
  for (Symbol s : w) {
    if (!tree.push(s).created_new_node) return false;
  }
  return true;
}

bool longest_pal_suffix_unioccurrent(WordView w) {
  if (w.empty()) throw std::invalid_argument("empty word has no palindromic suffix");
  Eertree tree(alphabet_span(w));
  tree.assign(w);
  const auto& occ = tree.finalize_occurrences();
  return occ[static_cast<std::size_t>(tree.last_suffix_node())] == 1;
}

namespace detail {

std::vector<std::pair<std::uint32_t, std::uint32_t>> ups_ranges_unchecked(WordView w) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ranges;
  Eertree tree(alphabet_span(w));
  std::size_t len = w.size();
  while (len > 0) {
    // longest palindromic suffix of the remaining prefix via a fresh build;
    // O(n) amortized per strip and the strip count is small for rich words
    tree.assign(w.first(len));
    const auto l = static_cast<std::size_t>(tree.longest_pal_suffix_length());
    ranges.emplace_back(static_cast<std::uint32_t>(len - l), static_cast<std::uint32_t>(len));
    len -= l;
  }
  std::reverse(ranges.begin(), ranges.end());
  return ranges;
}

}  // namespace detail

UpsFactorization ups_factorize(WordView w) {
  if (w.empty()) throw std::invalid_argument("cannot factorize the empty word");
  if (!is_rich(w)) throw NotRichError("word is not rich; UPS-factorization not defined");
  UpsFactorization f;
  f.word.assign(w.begin(), w.end());
  f.ranges = detail::ups_ranges_unchecked(w);
  return f;
}

std::size_t luf(WordView w) { return ups_factorize(w).size(); }

std::size_t palindromic_length(WordView w) {
  if (w.empty()) return 0;
  const auto n = w.size();
  constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dp(n + 1, kInf);
  dp[0] = 0;
  Eertree tree(alphabet_span(w));
  for (std::size_t j = 0; j < n; ++j) {
    tree.push(w[j]);
    // every way to end a palindrome at j+1 is a palindromic suffix of the prefix
    tree.for_each_palindromic_suffix([&](std::int32_t l) {
      const auto prev = dp[j + 1 - static_cast<std::size_t>(l)];
      if (prev != kInf && prev + 1 < dp[j + 1]) dp[j + 1] = prev + 1;
    });
  }
  return dp[n];
}

namespace {

std::string_view window(WordView w, std::size_t begin, std::size_t len) {
  return {reinterpret_cast<const char*>(w.data()) + begin, len};
}

}  // namespace

std::size_t factor_complexity(WordView w, std::size_t m) {
  if (m == 0) throw std::invalid_argument("factor length must be positive");
  if (m > w.size()) return 0;
  std::unordered_set<std::string_view> seen;
  seen.reserve(w.size() - m + 1);
  for (std::size_t i = 0; i + m <= w.size(); ++i) seen.insert(window(w, i, m));
  return seen.size();
}

std::vector<std::uint64_t> factor_complexity_profile(WordView w) {
  std::vector<std::uint64_t> profile(w.size(), 0);
  std::unordered_set<std::string_view> seen;
  for (std::size_t m = 1; m <= w.size(); ++m) {
    seen.clear();
    for (std::size_t i = 0; i + m <= w.size(); ++i) seen.insert(window(w, i, m));
    profile[m - 1] = seen.size();
  }
  return profile;
}

}  // namespace richwords
