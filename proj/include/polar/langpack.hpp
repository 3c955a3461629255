#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "polar/emoticons.hpp"
#include "polar/stemmer.hpp"

namespace polar {

// Language-dependent switches searched alongside the cross-language ones.
struct LangParams {
  bool stem = false;
  bool neg = false;
  EntityAction sw = EntityAction::none;
};

// One negation rule: `marker` is fused with the nearest following word that
// does not match `skip`; skipped words are consumed. Patterns are regexes
// matched against whole tokens, case-insensitively.
struct NegationRule {
  std::string marker;
  std::string skip;  // empty -> skip nothing
};

// Per-language resource bundle: stopword list, ordered negation rules and a
// registered stemmer. An empty pack turns all three features into no-ops.
//
// Pack file format (UTF-8, '#' comments):
//   [language]       one code line, e.g. "es"
//   [stemmer]        one id line: none | porter-en | snowball-es | snowball-it
//   [stopwords]      one word per line
//   [negation-rules] <marker-regex><TAB><skip-regex>, skip part optional
class LanguagePack {
 public:
  LanguagePack();  // empty pack, stemmer "none"

  static LanguagePack load_file(const std::string& path);
  static LanguagePack parse(std::string_view content, std::string_view origin = "<string>");
  static LanguagePack builtin(std::string_view code);  // "en", "es", "it"
  static bool has_builtin(std::string_view code);

  const std::string& language() const { return language_; }
  const std::string& stemmer_id() const { return stemmer_id_; }
  const std::vector<std::string>& stopwords() const { return stopwords_; }
  const std::vector<NegationRule>& negation_rules() const { return rules_; }
  const Stemmer& stemmer() const;

  bool is_stopword(std::string_view word) const;  // case-insensitive

  std::string serialize() const;  // parse(serialize()) reproduces the pack

 private:
  friend LanguagePack parse_pack(std::string_view, std::string_view);
  struct CompiledRule;
  std::string language_;
  std::string stemmer_id_ = "none";
  std::vector<std::string> stopwords_;
  std::unordered_set<std::string> stopword_set_;  // lowercased
  std::vector<NegationRule> rules_;
  std::shared_ptr<const std::vector<CompiledRule>> compiled_;
  void compile();

 public:
  // Word-level pipeline stages. Applied in the fixed order neg -> sw -> stem
  // by word_stage; negation markers are often stopwords, so fusing runs
  // first, and fused tokens ("no_bonito") are exempt from stopword handling
  // while only their content half is stemmed.
  std::vector<std::string> apply_negation(std::vector<std::string> words) const;
  std::vector<std::string> handle_stopwords(std::vector<std::string> words,
                                            EntityAction mode) const;
  std::vector<std::string> stem_words(std::vector<std::string> words) const;
  std::vector<std::string> word_stage(std::vector<std::string> words,
                                      const LangParams& params) const;
};

}  // namespace polar
