#include "oracles.hpp"

#include <algorithm>
#include <limits>

namespace richwords::oracle {

bool is_palindrome(WordView w) {
  for (std::size_t i = 0, j = w.size(); i + 1 < j--; ++i) {
    if (w[i] != w[j]) return false;
  }
  return true;
}

std::set<Word> palindromic_factor_set(WordView w) {
  std::set<Word> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      const auto f = w.subspan(i, j - i);
      if (is_palindrome(f)) out.emplace(f.begin(), f.end());
    }
  }
  return out;
}

bool brute_is_rich(WordView w) { return palindromic_factor_set(w).size() == w.size(); }

std::size_t brute_longest_pal_suffix_len(WordView w) {
  for (std::size_t l = w.size(); l >= 1; --l) {
    if (is_palindrome(w.subspan(w.size() - l, l))) return l;
  }
  return 0;
}

std::size_t brute_occurrences(WordView w, WordView f) {
  if (f.empty() || f.size() > w.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
    if (std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
  }
  return count;
}

std::size_t brute_palindromic_length(WordView w) {
  const std::size_t n = w.size();
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dp(n + 1, kInf);
  dp[0] = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (dp[i] != kInf && is_palindrome(w.subspan(i, j - i))) {
        dp[j] = std::min(dp[j], dp[i] + 1);
      }
    }
  }
  return dp[n];
}

std::vector<Word> brute_ups_greedy(WordView w) {
  std::vector<Word> factors;
  std::size_t len = w.size();
  while (len > 0) {
    const std::size_t l = brute_longest_pal_suffix_len(w.first(len));
    const auto f = w.subspan(len - l, l);
    factors.emplace_back(f.begin(), f.end());
    len -= l;
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::size_t brute_factor_complexity(WordView w, std::size_t m) {
  std::set<Word> seen;
  for (std::size_t i = 0; i + m <= w.size(); ++i) {
    const auto f = w.subspan(i, m);
    seen.emplace(f.begin(), f.end());
  }
  return seen.size();
}

void all_words(unsigned q, unsigned n, const std::function<void(WordView)>& fn) {
  Word w(n, 0);
  for (;;) {
    fn(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == q - 1) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

std::uint64_t brute_rwc(unsigned q, unsigned n) {
  std::uint64_t count = 0;
  all_words(q, n, [&](WordView w) { count += brute_is_rich(w) ? 1 : 0; });
  return count;
}

UpsCheckResult check_ups_invariants(const UpsFactorization& f) {
  UpsCheckResult r;
  // concatenation: ranges tile [0, |w|) in order, each nonempty
  r.concatenation = true;
  std::size_t cursor = 0;
  for (const auto& [b, e] : f.ranges) {
    if (b != cursor || e <= b) r.concatenation = false;
    cursor = e;
  }
  if (cursor != f.word.size() || f.ranges.empty()) r.concatenation = false;

  r.palindromic = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!is_palindrome(f.factor(i))) r.palindromic = false;
  }

  std::set<Word> uniq;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto v = f.factor(i);
    uniq.emplace(v.begin(), v.end());
  }
  r.distinct = uniq.size() == f.size();

  // each factor must be the longest palindromic suffix of the prefix it ends
  r.longest_suffix = true;
  for (const auto& [b, e] : f.ranges) {
    if (brute_longest_pal_suffix_len(WordView(f.word).first(e)) != e - b) {
      r.longest_suffix = false;
    }
  }
  return r;
}

}  // namespace richwords::oracle
