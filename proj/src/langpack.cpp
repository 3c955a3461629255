#include "polar/langpack.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "builtin_data.hpp"
#include "polar/error.hpp"
#include "polar/textnorm.hpp"

namespace polar {

struct LanguagePack::CompiledRule {
  std::regex marker;
  std::regex skip;
  bool has_skip = false;
};

LanguagePack::LanguagePack() : compiled_(std::make_shared<std::vector<CompiledRule>>()) {}

void LanguagePack::compile() {
  auto compiled = std::make_shared<std::vector<CompiledRule>>();
  compiled->reserve(rules_.size());
  for (const NegationRule& r : rules_) {
    CompiledRule c;
    try {
      c.marker = std::regex(r.marker, std::regex::ECMAScript | std::regex::icase);
      if (!r.skip.empty()) {
        c.skip = std::regex(r.skip, std::regex::ECMAScript | std::regex::icase);
        c.has_skip = true;
      }
    } catch (const std::regex_error& e) {
      throw Error("invalid negation rule pattern '" + r.marker + "' / '" + r.skip +
                  "': " + e.what());
    }
    compiled->push_back(std::move(c));
  }
  compiled_ = std::move(compiled);
}

LanguagePack LanguagePack::parse(std::string_view content, std::string_view origin) {
  LanguagePack pack;
  enum class Section { none, language, stemmer, stopwords, rules };
  Section section = Section::none;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t') &&
           section != Section::rules) {
      line.remove_prefix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw Error(std::string(origin) + ":" + std::to_string(lineno) + ": " + msg);
    };
    if (line.front() == '[') {
      if (line == "[language]") {
        section = Section::language;
      } else if (line == "[stemmer]") {
        section = Section::stemmer;
      } else if (line == "[stopwords]") {
        section = Section::stopwords;
      } else if (line == "[negation-rules]") {
        section = Section::rules;
      } else {
        fail("unknown section " + std::string(line));
      }
      continue;
    }
    switch (section) {
      case Section::none:
        fail("content before any [section] header");
        break;
      case Section::language:
        pack.language_ = std::string(line);
        break;
      case Section::stemmer:
        if (!stemmer_registered(line)) fail("unknown stemmer id '" + std::string(line) + "'");
        pack.stemmer_id_ = std::string(line);
        break;
      case Section::stopwords:
        pack.stopwords_.emplace_back(line);
        break;
      case Section::rules: {
        std::size_t tab = line.find('\t');
        NegationRule rule;
        if (tab == std::string_view::npos) {
          rule.marker = std::string(line);
        } else {
          rule.marker = std::string(line.substr(0, tab));
          rule.skip = std::string(line.substr(tab + 1));
        }
        if (rule.marker.empty()) fail("empty negation marker pattern");
        pack.rules_.push_back(std::move(rule));
        break;
      }
    }
  }
  for (const std::string& w : pack.stopwords_) {
    pack.stopword_set_.insert(textnorm::lowercase(w));
  }
  pack.compile();
  return pack;
}

LanguagePack LanguagePack::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open language pack: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

bool LanguagePack::has_builtin(std::string_view code) {
  return !data::langpack_text(code).empty();
}

LanguagePack LanguagePack::builtin(std::string_view code) {
  std::string_view text = data::langpack_text(code);
  if (text.empty()) {
    throw Error("no built-in language pack for '" + std::string(code) +
                "' (available: en, es, it)");
  }
  return parse(text, "<builtin:" + std::string(code) + ">");
}

const Stemmer& LanguagePack::stemmer() const { return stemmer_by_id(stemmer_id_); }

bool LanguagePack::is_stopword(std::string_view word) const {
  if (stopword_set_.empty()) return false;
  return stopword_set_.contains(textnorm::lowercase(word));
}

std::string LanguagePack::serialize() const {
  std::string out;
  out += "[language]\n";
  if (!language_.empty()) {
    out += language_;
    out.push_back('\n');
  }
  out += "[stemmer]\n";
  out += stemmer_id_;
  out.push_back('\n');
  out += "[stopwords]\n";
  for (const std::string& w : stopwords_) {
    out += w;
    out.push_back('\n');
  }
  out += "[negation-rules]\n";
  for (const NegationRule& r : rules_) {
    out += r.marker;
    if (!r.skip.empty()) {
      out.push_back('\t');
      out += r.skip;
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<std::string> LanguagePack::apply_negation(std::vector<std::string> words) const {
  for (const CompiledRule& rule : *compiled_) {
    std::vector<std::string> out;
    out.reserve(words.size());
    std::size_t i = 0;
    while (i < words.size()) {
      if (!std::regex_match(words[i], rule.marker)) {
        out.push_back(std::move(words[i]));
        ++i;
        continue;
      }
      // Marker found: jump over skip words, fuse with the first content word.
      std::size_t j = i + 1;
      while (j < words.size() && rule.has_skip && std::regex_match(words[j], rule.skip)) ++j;
      if (j < words.size()) {
        out.push_back(words[i] + "_" + words[j]);
        i = j + 1;
      } else {
        out.push_back(std::move(words[i]));  // no following content word
        ++i;
      }
    }
    words = std::move(out);
  }
  return words;
}

std::vector<std::string> LanguagePack::handle_stopwords(std::vector<std::string> words,
                                                        EntityAction mode) const {
  if (mode == EntityAction::none || stopword_set_.empty()) return words;
  std::vector<std::string> out;
  out.reserve(words.size());
  for (auto& w : words) {
    // Fused tokens and grouped-entity tags carry '_' and are never stopwords.
    bool hit = w.find('_') == std::string::npos && is_stopword(w);
    if (!hit) {
      out.push_back(std::move(w));
    } else if (mode == EntityAction::group) {
      out.push_back("_sw");
    }
  }
  return out;
}

namespace {

std::string stem_token(const Stemmer& stemmer, const std::string& token) {
  if (!token.empty() && token.front() == '_') return token;  // grouped-entity tag
  std::size_t underscore = token.find('_');
  if (underscore != std::string::npos) {
    // Fused negation token: stem only the content half.
    std::string head = token.substr(0, underscore + 1);
    return head + stem_token(stemmer, token.substr(underscore + 1));
  }
  return stemmer.stem(token);
}

}  // namespace

std::vector<std::string> LanguagePack::stem_words(std::vector<std::string> words) const {
  const Stemmer& s = stemmer();
  for (auto& w : words) w = stem_token(s, w);
  return words;
}

std::vector<std::string> LanguagePack::word_stage(std::vector<std::string> words,
                                                  const LangParams& params) const {
  if (params.neg) words = apply_negation(std::move(words));
  if (params.sw != EntityAction::none) words = handle_stopwords(std::move(words), params.sw);
  if (params.stem) words = stem_words(std::move(words));
  return words;
}

}  // namespace polar
