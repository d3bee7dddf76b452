#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "richwords/richfact.hpp"
#include "richwords/word.hpp"

using namespace richwords;

namespace {

std::vector<std::string> factor_strings(const UpsFactorization& f) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(letters_from_word(f.factor(i)));
  return out;
}

}  // namespace

TEST_CASE("is_rich examples") {
  CHECK(is_rich(word_from_letters("abba")));
  CHECK(is_rich(Word{}));
  CHECK_FALSE(is_rich(word_from_letters("abca")));
}

TEST_CASE("is_rich matches brute force, binary <= 10 and ternary <= 7") {
  for (unsigned n = 1; n <= 10; ++n) {
    oracle::all_words(2, n, [&](WordView w) { REQUIRE(is_rich(w) == oracle::brute_is_rich(w)); });
  }
  for (unsigned n = 1; n <= 7; ++n) {
    oracle::all_words(3, n, [&](WordView w) { REQUIRE(is_rich(w) == oracle::brute_is_rich(w)); });
  }
}

TEST_CASE("every prefix of a rich word is rich") {
  for (unsigned n = 1; n <= 10; ++n) {
    oracle::all_words(2, n, [&](WordView w) {
      if (!is_rich(w)) return;
      for (std::size_t k = 0; k <= w.size(); ++k) REQUIRE(is_rich(w.first(k)));
    });
  }
}

TEST_CASE("unioccurrence of the longest palindromic suffix") {
  CHECK(longest_pal_suffix_unioccurrent(word_from_letters("abba")));
  CHECK_FALSE(longest_pal_suffix_unioccurrent(word_from_letters("abca")));
  CHECK_THROWS_AS(longest_pal_suffix_unioccurrent(Word{}), std::invalid_argument);
  // holds for every rich word
  for (unsigned n = 1; n <= 12; ++n) {
    oracle::all_words(2, n, [&](WordView w) {
      if (is_rich(w)) REQUIRE(longest_pal_suffix_unioccurrent(w));
    });
  }
}

TEST_CASE("ups_factorize examples") {
  CHECK(factor_strings(ups_factorize(word_from_letters("abba"))) ==
        std::vector<std::string>{"abba"});
  CHECK(factor_strings(ups_factorize(word_from_letters("abab"))) ==
        std::vector<std::string>{"a", "bab"});
  CHECK(factor_strings(ups_factorize(word_from_letters("aabb"))) ==
        std::vector<std::string>{"aa", "bb"});
  CHECK_THROWS_AS(ups_factorize(Word{}), std::invalid_argument);
  CHECK_THROWS_AS(ups_factorize(word_from_letters("abca")), NotRichError);
}

TEST_CASE("luf examples") {
  CHECK(luf(word_from_letters("abba")) == 1);
  CHECK(luf(word_from_letters("abab")) == 2);
  CHECK(luf(word_from_letters("aab")) == 2);
}

TEST_CASE("ups invariants and brute greedy agreement, rich binary <= 12") {
  for (unsigned n = 1; n <= 12; ++n) {
    oracle::all_words(2, n, [&](WordView w) {
      if (!is_rich(w)) return;
      const auto f = ups_factorize(w);
      REQUIRE(oracle::check_ups_invariants(f).all());
      const auto brute = oracle::brute_ups_greedy(w);
      REQUIRE(brute.size() == f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        const auto v = f.factor(i);
        REQUIRE(brute[i] == Word(v.begin(), v.end()));
      }
    });
  }
}

TEST_CASE("palindromic_length examples") {
  CHECK(palindromic_length(Word{}) == 0);
  CHECK(palindromic_length(word_from_letters("abba")) == 1);
  CHECK(palindromic_length(word_from_letters("zzz")) == 1);
  CHECK(palindromic_length(word_from_letters("abab")) == 2);
}

TEST_CASE("palindromic_length matches brute minimal splitting, all binary <= 10") {
  for (unsigned n = 1; n <= 10; ++n) {
    oracle::all_words(2, n, [&](WordView w) {
      REQUIRE(palindromic_length(w) == oracle::brute_palindromic_length(w));
    });
  }
}

TEST_CASE("PL <= LUF for rich words") {
  for (unsigned n = 1; n <= 12; ++n) {
    oracle::all_words(2, n, [&](WordView w) {
      if (is_rich(w)) REQUIRE(palindromic_length(w) <= luf(w));
    });
  }
}

TEST_CASE("factor_complexity examples and bounds") {
  CHECK(factor_complexity(word_from_letters("aabb"), 2) == 3);
  CHECK(factor_complexity(word_from_letters("aabb"), 5) == 0);
  CHECK(factor_complexity(word_from_letters("aaaa"), 1) == 1);
  CHECK_THROWS_AS(factor_complexity(word_from_letters("ab"), 0), std::invalid_argument);

  for (unsigned n = 1; n <= 9; ++n) {
    oracle::all_words(2, n, [&](WordView w) {
      const auto profile = factor_complexity_profile(w);
      for (std::size_t m = 1; m <= w.size(); ++m) {
        const auto fc = factor_complexity(w, m);
        REQUIRE(fc == oracle::brute_factor_complexity(w, m));
        REQUIRE(fc == profile[m - 1]);
        // counting bound: at most q^m and at most the window count
        const std::uint64_t windows = w.size() - m + 1;
        REQUIRE(fc <= windows);
        if (m < 20) REQUIRE(fc <= (1ull << m));
      }
    });
  }
}
