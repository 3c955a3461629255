#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polar {

// Token extractors: word n-grams (n in {1,2}) and character q-grams
// (q in {1..7}), nine token types total.
enum class TokenType : std::uint8_t { W1, W2, Q1, Q2, Q3, Q4, Q5, Q6, Q7 };

inline constexpr int kTokenTypeCount = 9;

std::string_view to_string(TokenType t);
TokenType token_type_from_string(std::string_view name);  // throws Error

// Subset of the nine token types, at most 511 non-empty values. The empty
// set is representable for construction/parsing; configuration-space code
// rejects it.
class TokenTypeSet {
 public:
  TokenTypeSet() = default;
  explicit TokenTypeSet(std::initializer_list<TokenType> types) {
    for (TokenType t : types) add(t);
  }
  static TokenTypeSet from_bits(std::uint16_t bits);
  static TokenTypeSet parse(std::string_view names);  // "W1+Q3", throws Error

  void add(TokenType t) { bits_ |= bit(t); }
  void remove(TokenType t) { bits_ &= static_cast<std::uint16_t>(~bit(t)); }
  bool contains(TokenType t) const { return (bits_ & bit(t)) != 0; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::uint16_t bits() const { return bits_; }

  std::vector<TokenType> items() const;  // canonical order W1,W2,Q1..Q7
  std::string to_string() const;         // canonical, '+'-joined

  friend bool operator==(TokenTypeSet a, TokenTypeSet b) = default;

 private:
  static std::uint16_t bit(TokenType t) {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(t));
  }
  std::uint16_t bits_ = 0;
};

// Term multiset. Keys are token strings prefixed with their token type
// ("W1:", "Q3:", ...) so terms from different types never collide.
using TermBag = std::unordered_map<std::string, std::uint32_t>;

std::vector<std::string> split_whitespace(std::string_view text);

// Contiguous n-word sequences joined by single spaces; empty when there are
// fewer than n words.
std::vector<std::string> word_ngrams(std::span<const std::string> words, int n);

// All contiguous codepoint substrings of length q, spaces included,
// duplicates preserved; empty when the text is shorter than q codepoints.
std::vector<std::string> char_qgrams(std::string_view text, int q);

// Union-with-counts of every selected extractor: word n-grams run over
// `words` (the language-stage output), q-grams over `normalized_text`.
// `types` must be non-empty; the resulting bag may legitimately be empty.
TermBag build_term_bag(std::string_view normalized_text, std::span<const std::string> words,
                       TokenTypeSet types);

}  // namespace polar
