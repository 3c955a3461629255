#pragma once

#include <string>
#include <string_view>

namespace polar::stem_detail {

// Suffix regions for the Romance-language stemmers. Values are indices into
// the word; a suffix starting at or after the index is "in" the region.
struct Regions {
  std::size_t r1;
  std::size_t r2;
  std::size_t rv;
};

inline bool has_cp(std::u32string_view set, char32_t cp) {
  return set.find(cp) != std::u32string_view::npos;
}

// R1: after the first non-vowel following a vowel. R2: the same, computed
// inside R1. RV: after the next vowel when the second letter is a consonant;
// after the next consonant when the word starts with two vowels; after the
// third letter otherwise. All default to the end of the word.
Regions compute_regions(const std::u32string& w, std::u32string_view vowels);

inline bool ends_with(const std::u32string& w, std::u32string_view suffix) {
  return w.size() >= suffix.size() &&
         std::u32string_view(w).substr(w.size() - suffix.size()) == suffix;
}

// True when the suffix of the given length lies entirely inside the region.
inline bool suffix_in(const std::u32string& w, std::size_t region_start,
                      std::size_t suffix_len) {
  return w.size() - suffix_len >= region_start;
}

}  // namespace polar::stem_detail
