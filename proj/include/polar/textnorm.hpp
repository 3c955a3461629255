#pragma once

#include <string>
#include <string_view>

#include "polar/emoticons.hpp"

namespace polar {

// Cross-language transformation switches. del_punc is carried by the text
// pipeline but pinned to false in the searchable configuration space.
struct CrossLangParams {
  bool del_d1 = false;
  bool del_diac = false;
  bool del_punc = false;
  bool lc = false;
  EntityAction emo = EntityAction::none;
  EntityAction num = EntityAction::none;
  EntityAction url = EntityAction::none;
  EntityAction usr = EntityAction::none;
};

namespace textnorm {

enum class EntityKind { url, usr, num };

// Strips combining marks and maps precomposed letters (Latin-1 Supplement,
// Latin Extended-A, Vietnamese vowel blocks, Greek tonos forms, Cyrillic
// short-i/yo) to their base letters. Letters without a base-letter
// decomposition (ø, æ, ß, đ, ...) pass through unchanged. Idempotent.
std::string remove_diacritics(std::string_view text);

// Collapses every maximal run of >= 2 identical codepoints to one. Applies
// to all characters, letters and punctuation alike. Idempotent.
std::string collapse_repeats(std::string_view text);

// Lowercases ASCII, Latin-1, Latin Extended-A, Greek and Cyrillic letters;
// other codepoints are unchanged. Idempotent.
std::string lowercase(std::string_view text);

// Deletes punctuation codepoints (ASCII punctuation except '_', plus common
// Unicode punctuation). '_' survives so grouped entity tags stay intact.
std::string remove_punctuation(std::string_view text);

// Matches one entity kind and removes / replaces-with-tag / keeps each match.
//   url -> scheme-prefixed addresses (scheme "://" non-space*), tag _url
//   usr -> @handles at word boundaries, tag _usr
//   num -> maximal digit runs with optional sign and decimal point, tag _num
std::string handle_entity(std::string_view text, EntityKind kind, EntityAction action);

// Full cross-language pass in pinned order:
//   url -> usr -> emo -> num -> del-diac -> del-d1 -> lc -> del-punc
// followed by whitespace-run collapsing and trimming. Entity matchers run
// before the character-level passes so they see original punctuation/case.
std::string normalize(std::string_view text, const CrossLangParams& params,
                      const EmoticonMap& emoticons);

// Collapses runs of Unicode whitespace to single spaces and trims.
std::string collapse_whitespace(std::string_view text);

bool is_space(char32_t cp);

}  // namespace textnorm
}  // namespace polar
