#include "polar/tokenizer.hpp"

#include <array>
#include <bit>

#include "polar/error.hpp"
#include "polar/textnorm.hpp"
#include "polar/utf8.hpp"

namespace polar {

namespace {
constexpr std::array<std::string_view, kTokenTypeCount> kTypeNames = {
    "W1", "W2", "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7"};
}

std::string_view to_string(TokenType t) { return kTypeNames[static_cast<unsigned>(t)]; }

TokenType token_type_from_string(std::string_view name) {
  for (unsigned i = 0; i < kTypeNames.size(); ++i) {
    if (kTypeNames[i] == name) return static_cast<TokenType>(i);
  }
  throw Error("unknown token type: '" + std::string(name) + "' (expected W1,W2,Q1..Q7)");
}

TokenTypeSet TokenTypeSet::from_bits(std::uint16_t bits) {
  if (bits >= (1u << kTokenTypeCount)) throw Error("token type bits out of range");
  TokenTypeSet s;
  s.bits_ = bits;
  return s;
}

TokenTypeSet TokenTypeSet::parse(std::string_view names) {
  TokenTypeSet s;
  std::size_t pos = 0;
  while (pos < names.size()) {
    std::size_t sep = names.find_first_of("+, ", pos);
    std::string_view part = names.substr(pos, sep == std::string_view::npos ? std::string_view::npos
                                                                            : sep - pos);
    if (!part.empty()) s.add(token_type_from_string(part));
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  return s;
}

int TokenTypeSet::size() const { return std::popcount(static_cast<unsigned>(bits_)); }

std::vector<TokenType> TokenTypeSet::items() const {
  std::vector<TokenType> out;
  for (int i = 0; i < kTokenTypeCount; ++i) {
    auto t = static_cast<TokenType>(i);
    if (contains(t)) out.push_back(t);
  }
  return out;
}

std::string TokenTypeSet::to_string() const {
  std::string out;
  for (TokenType t : items()) {
    if (!out.empty()) out.push_back('+');
    out += polar::to_string(t);
  }
  return out;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> words;
  std::u32string cps = utf8::decode(text);
  std::string current;
  for (char32_t cp : cps) {
    if (textnorm::is_space(cp)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      utf8::append(current, cp);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::vector<std::string> word_ngrams(std::span<const std::string> words, int n) {
  if (n < 1) throw Error("word_ngrams: n must be >= 1");
  std::vector<std::string> out;
  if (words.size() < static_cast<std::size_t>(n)) return out;
  out.reserve(words.size() - n + 1);
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    std::string gram = words[i];
    for (int j = 1; j < n; ++j) {
      gram.push_back(' ');
      gram += words[i + j];
    }
    out.push_back(std::move(gram));
  }
  return out;
}

std::vector<std::string> char_qgrams(std::string_view text, int q) {
  if (q < 1) throw Error("char_qgrams: q must be >= 1");
  std::vector<std::string> out;
  std::u32string cps = utf8::decode(text);
  if (cps.size() < static_cast<std::size_t>(q)) return out;
  out.reserve(cps.size() - q + 1);
  for (std::size_t i = 0; i + q <= cps.size(); ++i) {
    out.push_back(utf8::encode(std::u32string_view(cps).substr(i, q)));
  }
  return out;
}

TermBag build_term_bag(std::string_view normalized_text, std::span<const std::string> words,
                       TokenTypeSet types) {
  if (types.empty()) throw Error("build_term_bag: token type set must be non-empty");
  TermBag bag;
  auto insert_all = [&bag](std::string_view prefix, std::vector<std::string>&& terms) {
    for (auto& term : terms) {
      std::string key;
      key.reserve(prefix.size() + 1 + term.size());
      key += prefix;
      key.push_back(':');
      key += term;
      ++bag[key];
    }
  };
  for (TokenType t : types.items()) {
    switch (t) {
      case TokenType::W1:
        insert_all("W1", word_ngrams(words, 1));
        break;
      case TokenType::W2:
        insert_all("W2", word_ngrams(words, 2));
        break;
      default: {
        int q = static_cast<int>(t) - static_cast<int>(TokenType::Q1) + 1;
        insert_all(to_string(t), char_qgrams(normalized_text, q));
        break;
      }
    }
  }
  return bag;
}

}  // namespace polar
