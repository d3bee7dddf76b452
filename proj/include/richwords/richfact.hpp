#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "richwords/errors.hpp"
#include "richwords/word.hpp"

namespace richwords {

/// Factorization of a rich word into w_p w_{p-1} ... w_1 where each w_i is the
/// longest palindromic suffix of w_p ... w_i. Factors are stored as [begin,end)
/// ranges into `word`, in concatenation order (w_p first).
struct UpsFactorization {
  Word word;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ranges;

  std::size_t size() const { return ranges.size(); }
  WordView factor(std::size_t i) const {
    return WordView(word).subspan(ranges[i].first, ranges[i].second - ranges[i].first);
  }
};

/// True iff w has |w|+1 distinct palindromic factors counting the empty word.
bool is_rich(WordView w);

/// True iff the longest palindromic suffix of w occurs exactly once in w.
/// Throws std::invalid_argument for the empty word.
bool longest_pal_suffix_unioccurrent(WordView w);

/// Greedy longest-palindromic-suffix factorization. Throws
/// std::invalid_argument for the empty word and NotRichError for non-rich
/// input (existence and distinctness are only guaranteed for rich words).
UpsFactorization ups_factorize(WordView w);

/// Number of factors of the UPS-factorization.
std::size_t luf(WordView w);

/// Minimal number of palindromes whose concatenation equals w; 0 for the
/// empty word. Defined for every word, rich or not.
std::size_t palindromic_length(WordView w);

/// Number of distinct length-m factors of w; 0 when m > |w|.
/// Throws std::invalid_argument for m = 0.
std::size_t factor_complexity(WordView w, std::size_t m);

/// factor_complexity for every m in 1..|w| at once (index m-1).
std::vector<std::uint64_t> factor_complexity_profile(WordView w);

namespace detail {
// UPS factor ranges without the richness re-check; callers guarantee w rich.
std::vector<std::pair<std::uint32_t, std::uint32_t>> ups_ranges_unchecked(WordView w);
}  // namespace detail

}  // namespace richwords
