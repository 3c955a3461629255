#include "polar/textnorm.hpp"

#include <unordered_map>

#include "polar/utf8.hpp"

namespace polar::textnorm {

namespace {

bool is_combining_mark(char32_t cp) {
  return (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x0483 && cp <= 0x0489) ||
         (cp >= 0x1AB0 && cp <= 0x1AFF) || (cp >= 0x1DC0 && cp <= 0x1DFF) ||
         (cp >= 0x20D0 && cp <= 0x20FF) || (cp >= 0xFE20 && cp <= 0xFE2F);
}

// Precomposed letter -> base letter. Covers Latin-1 Supplement and Latin
// Extended-A (minus the letters with no decomposition), a few Extended-B
// letters, Greek tonos/dialytika forms and the two precomposed Cyrillic
// letters. Vietnamese vowels (U+1EA0..U+1EF9) are handled by range below.
const std::unordered_map<char32_t, char32_t>& base_letter_table() {
  static const std::unordered_map<char32_t, char32_t> table = [] {
    std::unordered_map<char32_t, char32_t> t;
    auto put = [&t](std::u32string_view from, char32_t to) {
      for (char32_t c : from) t.emplace(c, to);
    };
    // Latin-1 Supplement.
    put(U"ÀÁÂÃÄÅ", U'A');
    put(U"àáâãäå", U'a');
    put(U"Ç", U'C');
    put(U"ç", U'c');
    put(U"ÈÉÊË", U'E');
    put(U"èéêë", U'e');
    put(U"ÌÍÎÏ", U'I');
    put(U"ìíîï", U'i');
    put(U"Ñ", U'N');
    put(U"ñ", U'n');
    put(U"ÒÓÔÕÖ", U'O');
    put(U"òóôõö", U'o');
    put(U"ÙÚÛÜ", U'U');
    put(U"ùúûü", U'u');
    put(U"Ý", U'Y');
    put(U"ýÿ", U'y');
    // Latin Extended-A (decomposable letters only).
    put(U"ĀĂĄ", U'A');
    put(U"āăą", U'a');
    put(U"ĆĈĊČ", U'C');
    put(U"ćĉċč", U'c');
    put(U"Ď", U'D');
    put(U"ď", U'd');
    put(U"ĒĔĖĘĚ", U'E');
    put(U"ēĕėęě", U'e');
    put(U"ĜĞĠĢ", U'G');
    put(U"ĝğġģ", U'g');
    put(U"Ĥ", U'H');
    put(U"ĥ", U'h');
    put(U"ĨĪĬĮİ", U'I');
    put(U"ĩīĭį", U'i');
    put(U"Ĵ", U'J');
    put(U"ĵ", U'j');
    put(U"Ķ", U'K');
    put(U"ķ", U'k');
    put(U"ĹĻĽ", U'L');
    put(U"ĺļľ", U'l');
    put(U"ŃŅŇ", U'N');
    put(U"ńņň", U'n');
    put(U"ŌŎŐ", U'O');
    put(U"ōŏő", U'o');
    put(U"ŔŖŘ", U'R');
    put(U"ŕŗř", U'r');
    put(U"ŚŜŞŠ", U'S');
    put(U"śŝşš", U's');
    put(U"ŢŤ", U'T');
    put(U"ţť", U't');
    put(U"ŨŪŬŮŰŲ", U'U');
    put(U"ũūŭůűų", U'u');
    put(U"Ŵ", U'W');
    put(U"ŵ", U'w');
    put(U"ŶŸ", U'Y');
    put(U"ŷ", U'y');
    put(U"ŹŻŽ", U'Z');
    put(U"źżž", U'z');
    // Selected Extended-B: caron vowels, Romanian comma letters.
    put(U"Ǎ", U'A');
    put(U"ǎ", U'a');
    put(U"Ǐ", U'I');
    put(U"ǐ", U'i');
    put(U"Ǒ", U'O');
    put(U"ǒ", U'o');
    put(U"ǓǕǗǙǛ", U'U');
    put(U"ǔǖǘǚǜ", U'u');
    put(U"Ș", U'S');
    put(U"ș", U's');
    put(U"Ț", U'T');
    put(U"ț", U't');
    // Greek tonos / dialytika.
    put(U"Ά", U'Α');
    put(U"ά", U'α');
    put(U"Έ", U'Ε');
    put(U"έ", U'ε');
    put(U"Ή", U'Η');
    put(U"ή", U'η');
    put(U"ΊΪ", U'Ι');
    put(U"ίϊΐ", U'ι');
    put(U"Ό", U'Ο');
    put(U"ό", U'ο');
    put(U"ΎΫ", U'Υ');
    put(U"ύϋΰ", U'υ');
    put(U"Ώ", U'Ω');
    put(U"ώ", U'ω');
    // Cyrillic precomposed letters.
    put(U"Ё", U'Е');
    put(U"ё", U'е');
    put(U"Й", U'И');
    put(U"й", U'и');
    return t;
  }();
  return table;
}

char32_t vietnamese_base(char32_t cp) {
  if (cp >= 0x1EA0 && cp <= 0x1EB7) return (cp % 2 == 0) ? U'A' : U'a';
  if (cp >= 0x1EB8 && cp <= 0x1EC7) return (cp % 2 == 0) ? U'E' : U'e';
  if (cp >= 0x1EC8 && cp <= 0x1ECB) return (cp % 2 == 0) ? U'I' : U'i';
  if (cp >= 0x1ECC && cp <= 0x1EE3) return (cp % 2 == 0) ? U'O' : U'o';
  if (cp >= 0x1EE4 && cp <= 0x1EF1) return (cp % 2 == 0) ? U'U' : U'u';
  if (cp >= 0x1EF2 && cp <= 0x1EF9) return (cp % 2 == 0) ? U'Y' : U'y';
  return 0;
}

char32_t base_letter(char32_t cp) {
  if (char32_t v = vietnamese_base(cp); v != 0) return v;
  const auto& table = base_letter_table();
  auto it = table.find(cp);
  return it == table.end() ? cp : it->second;
}

char32_t to_lower_cp(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;  // Y with diaeresis
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;  // Greek
  if (cp == 0x386) return 0x3AC;
  if (cp >= 0x388 && cp <= 0x38A) return cp + 0x25;
  if (cp == 0x38C) return 0x3CC;
  if (cp == 0x38E || cp == 0x38F) return cp + 0x3F;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;  // Cyrillic
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

bool is_punct_cp(char32_t cp) {
  if (cp < 0x80) {
    if (cp == U'_') return false;  // grouped-entity tags must survive
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xA1:    // inverted exclamation
    case 0xBF:    // inverted question
    case 0xAB:    // left guillemet
    case 0xBB:    // right guillemet
    case 0x2010:  // hyphen
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2018:
    case 0x2019:
    case 0x201A:
    case 0x201C:
    case 0x201D:
    case 0x201E:
    case 0x2026:  // ellipsis
    case 0x00B7:  // middle dot
      return true;
    default:
      return false;
  }
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ascii_alnum(char c) {
  return is_ascii_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_word_byte(char c) { return is_ascii_alnum(c) || c == '_'; }

// Writes `replacement` for a match of [begin, end) per action.
void emit_entity(std::string& out, std::string_view tag, EntityAction action) {
  if (action == EntityAction::group) out += tag;
}

std::string replace_urls(std::string_view text, EntityAction action) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    // Candidate scheme start: an ASCII letter at a word boundary.
    bool boundary = (i == 0) || !is_word_byte(text[i - 1]);
    if (boundary && ((text[i] >= 'a' && text[i] <= 'z') || (text[i] >= 'A' && text[i] <= 'Z'))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (is_ascii_alnum(text[j]) || text[j] == '+' || text[j] == '.' || text[j] == '-')) {
        ++j;
      }
      if (j + 2 < text.size() && text[j] == ':' && text[j + 1] == '/' && text[j + 2] == '/') {
        std::size_t k = j + 3;
        while (k < text.size() && static_cast<unsigned char>(text[k]) > 0x20) ++k;
        emit_entity(out, "_url", action);
        i = k;
        continue;
      }
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

std::string replace_users(std::string_view text, EntityAction action) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    bool boundary = (i == 0) || !is_word_byte(text[i - 1]);
    if (text[i] == '@' && boundary && i + 1 < text.size() && is_word_byte(text[i + 1])) {
      std::size_t k = i + 1;
      while (k < text.size() && is_word_byte(text[k])) ++k;
      emit_entity(out, "_usr", action);
      i = k;
      continue;
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

std::string replace_numbers(std::string_view text, EntityAction action) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    std::size_t digits = i;
    if ((text[i] == '+' || text[i] == '-') && i + 1 < text.size() && is_ascii_digit(text[i + 1]) &&
        (i == 0 || !is_ascii_alnum(text[i - 1]))) {
      digits = i + 1;
    }
    if (digits < text.size() && is_ascii_digit(text[digits])) {
      std::size_t k = digits;
      while (k < text.size() && is_ascii_digit(text[k])) ++k;
      if (k + 1 < text.size() && text[k] == '.' && is_ascii_digit(text[k + 1])) {
        ++k;
        while (k < text.size() && is_ascii_digit(text[k])) ++k;
      }
      (void)start;
      emit_entity(out, "_num", action);
      i = k;
      continue;
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

}  // namespace

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200B;
  }
}

std::string remove_diacritics(std::string_view text) {
  std::u32string cps = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : cps) {
    if (is_combining_mark(cp)) continue;
    utf8::append(out, base_letter(cp));
  }
  return out;
}

std::string collapse_repeats(std::string_view text) {
  std::u32string cps = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  char32_t prev = 0;
  bool first = true;
  for (char32_t cp : cps) {
    if (!first && cp == prev) continue;
    utf8::append(out, cp);
    prev = cp;
    first = false;
  }
  return out;
}

std::string lowercase(std::string_view text) {
  std::u32string cps = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : cps) utf8::append(out, to_lower_cp(cp));
  return out;
}

std::string remove_punctuation(std::string_view text) {
  std::u32string cps = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : cps) {
    if (is_punct_cp(cp)) continue;
    utf8::append(out, cp);
  }
  return out;
}

std::string handle_entity(std::string_view text, EntityKind kind, EntityAction action) {
  if (action == EntityAction::none) return std::string(text);
  switch (kind) {
    case EntityKind::url:
      return replace_urls(text, action);
    case EntityKind::usr:
      return replace_users(text, action);
    case EntityKind::num:
      return replace_numbers(text, action);
  }
  return std::string(text);
}

std::string collapse_whitespace(std::string_view text) {
  std::u32string cps = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool emitted = false;
  for (char32_t cp : cps) {
    if (is_space(cp)) {
      pending_space = emitted;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    utf8::append(out, cp);
    emitted = true;
  }
  return out;
}

std::string normalize(std::string_view text, const CrossLangParams& params,
                      const EmoticonMap& emoticons) {
  std::string s(text);
  if (params.url != EntityAction::none) s = handle_entity(s, EntityKind::url, params.url);
  if (params.usr != EntityAction::none) s = handle_entity(s, EntityKind::usr, params.usr);
  if (params.emo != EntityAction::none) s = emoticons.apply(s, params.emo);
  if (params.num != EntityAction::none) s = handle_entity(s, EntityKind::num, params.num);
  if (params.del_diac) s = remove_diacritics(s);
  if (params.del_d1) s = collapse_repeats(s);
  if (params.lc) s = lowercase(s);
  if (params.del_punc) s = remove_punctuation(s);
  return collapse_whitespace(s);
}

}  // namespace polar::textnorm
