// Deterministic synthesis of English-looking wordlists.
//
// Benchmarks and large fixtures need a dictionary-scale corpus, but no real
// dictionary can be assumed on the machine. Words are assembled from common
// English onset/vowel/coda patterns plus derivational suffixes, so prefixes
// share heavily, as they do in a natural lexicon. Output depends only on
// (count, seed).

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "detail/rng.hpp"

namespace wordex {

/// `count` distinct lowercase words, deterministic in `seed`.
inline std::vector<std::string> synth_corpus(std::size_t count,
                                             std::uint64_t seed) {
  static constexpr std::string_view onsets[] = {
      "b",  "bl", "br", "c",  "ch", "cl", "cr", "d",  "dr", "f",  "fl",
      "fr", "g",  "gl", "gr", "h",  "j",  "k",  "l",  "m",  "n",  "p",
      "pl", "pr", "qu", "r",  "s",  "sc", "sh", "sk", "sl", "sm", "sn",
      "sp", "st", "str", "sw", "t",  "th", "tr", "tw", "v",  "w",  "wh",
      "wr", "y",  "z"};
  static constexpr std::string_view vowels[] = {
      "a", "ai", "au", "e", "ea", "ee", "i", "ie", "io",
      "o", "oa", "oo", "ou", "u", "ue", "y"};
  static constexpr std::string_view codas[] = {
      "",   "b",  "ck", "d",  "ft", "g",  "k",  "l",  "ld", "ll", "m",
      "mp", "n",  "nd", "ng", "nk", "nt", "p",  "r",  "rd", "rk", "rm",
      "rn", "rt", "s",  "sh", "sk", "ss", "st", "t",  "th", "x"};
  static constexpr std::string_view suffixes[] = {
      "s",   "es",  "ed",   "ing", "er",   "ers", "est",
      "ly",  "y",   "ness", "ment", "ful", "less", "ion",
      "al",  "ous", "ish",  "able"};

  detail::splitmix64 rng(seed);
  std::vector<std::string> out;
  out.reserve(count);
  std::unordered_set<std::string> seen;
  seen.reserve(count * 2);

  while (out.size() < count) {
    std::string w;
    const std::uint64_t syllables = 1 + rng.bounded(3);
    for (std::uint64_t s = 0; s < syllables; ++s) {
      w += onsets[rng.bounded(std::size(onsets))];
      w += vowels[rng.bounded(std::size(vowels))];
      // Inner syllables usually run straight into the next onset.
      if (s + 1 == syllables || rng.chance(1, 4))
        w += codas[rng.bounded(std::size(codas))];
    }
    if (rng.chance(2, 5)) w += suffixes[rng.bounded(std::size(suffixes))];
    if (seen.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace wordex
