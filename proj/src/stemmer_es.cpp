// Spanish stemmer: Snowball-family rules (attached pronouns, standard
// suffixes, verb suffixes, residual vowels, final de-accenting).

#include <algorithm>
#include <string>
#include <vector>

#include "polar/stemmer.hpp"
#include "polar/textnorm.hpp"
#include "polar/utf8.hpp"
#include "stemmer_util.hpp"

namespace polar {

namespace {

using stem_detail::Regions;
using stem_detail::ends_with;
using stem_detail::suffix_in;

constexpr std::u32string_view kVowels = U"aeiouáéíóúü";

struct Rule {
  std::u32string_view suffix;
  int group;
};

// Longest matching suffix wins; rules are pre-sorted by length descending.
const Rule* longest_match(const std::vector<Rule>& rules, const std::u32string& w) {
  for (const Rule& r : rules) {
    if (ends_with(w, r.suffix)) return &r;
  }
  return nullptr;
}

std::vector<Rule> sorted_rules(std::initializer_list<Rule> rules) {
  std::vector<Rule> v(rules);
  std::stable_sort(v.begin(), v.end(),
                   [](const Rule& a, const Rule& b) { return a.suffix.size() > b.suffix.size(); });
  return v;
}

void drop(std::u32string& w, std::size_t n) { w.resize(w.size() - n); }

// Deletes `suffix_len` chars when the trailing pattern `p` sits in region
// `start`; returns true on deletion.
bool delete_if_in(std::u32string& w, std::u32string_view p, std::size_t start) {
  if (ends_with(w, p) && suffix_in(w, start, p.size())) {
    drop(w, p.size());
    return true;
  }
  return false;
}

bool step0_attached_pronoun(std::u32string& w, const Regions& rg) {
  static const std::vector<Rule> pronouns = sorted_rules({
      {U"me", 0},  {U"se", 0},  {U"sela", 0}, {U"selo", 0}, {U"selas", 0},
      {U"selos", 0}, {U"la", 0}, {U"le", 0},  {U"lo", 0},   {U"las", 0},
      {U"les", 0}, {U"los", 0}, {U"nos", 0},
  });
  const Rule* pr = longest_match(pronouns, w);
  if (pr == nullptr) return false;

  std::u32string base = w.substr(0, w.size() - pr->suffix.size());
  struct Pattern {
    std::u32string_view text;
    bool accented;
  };
  static const std::vector<Pattern> patterns = {
      {U"iéndo", true}, {U"iendo", false}, {U"uyendo", false}, {U"ándo", true},
      {U"ando", false}, {U"ár", true},     {U"ér", true},      {U"ír", true},
      {U"ar", false},   {U"er", false},    {U"ir", false},
  };
  for (const Pattern& p : patterns) {
    std::u32string_view pat = p.text;
    bool uyendo = pat == U"uyendo";
    std::u32string_view match = uyendo ? std::u32string_view(U"yendo") : pat;
    std::size_t required_u = uyendo ? 1 : 0;
    if (!ends_with(base, match)) continue;
    if (uyendo) {
      if (base.size() < match.size() + 1 || base[base.size() - match.size() - 1] != U'u') continue;
    }
    (void)required_u;
    // The verb pattern itself must lie in RV.
    if (base.size() - match.size() < rg.rv) continue;
    w = base;
    if (p.accented) {
      // iéndo -> iendo, ándo -> ando, ár/ér/ír -> ar/er/ir.
      for (std::size_t i = w.size() - match.size(); i < w.size(); ++i) {
        if (w[i] == U'á') w[i] = U'a';
        if (w[i] == U'é') w[i] = U'e';
        if (w[i] == U'í') w[i] = U'i';
      }
    }
    return true;
  }
  return false;
}

bool step1_standard_suffixes(std::u32string& w, const Regions& rg) {
  static const std::vector<Rule> rules = sorted_rules({
      // group 1: delete if in R2
      {U"anza", 1},     {U"anzas", 1},    {U"ico", 1},      {U"ica", 1},
      {U"icos", 1},     {U"icas", 1},     {U"ismo", 1},     {U"ismos", 1},
      {U"able", 1},     {U"ables", 1},    {U"ible", 1},     {U"ibles", 1},
      {U"ista", 1},     {U"istas", 1},    {U"oso", 1},      {U"osa", 1},
      {U"osos", 1},     {U"osas", 1},     {U"amiento", 1},  {U"amientos", 1},
      {U"imiento", 1},  {U"imientos", 1},
      // group 2: delete if in R2, then a preceding ic
      {U"adora", 2},    {U"ador", 2},     {U"ación", 2},    {U"adoras", 2},
      {U"adores", 2},   {U"aciones", 2},  {U"ante", 2},     {U"antes", 2},
      {U"ancia", 2},    {U"ancias", 2},
      // group 3..5: replacements if in R2
      {U"logía", 3},    {U"logías", 3},
      {U"ución", 4},    {U"uciones", 4},
      {U"encia", 5},    {U"encias", 5},
      // group 6/7: adverb endings
      {U"amente", 6},   {U"mente", 7},
      // group 8: delete if in R2, then abil/ic/iv
      {U"idad", 8},     {U"idades", 8},
      // group 9: delete if in R2, then at
      {U"iva", 9},      {U"ivo", 9},      {U"ivas", 9},     {U"ivos", 9},
  });
  const Rule* r = longest_match(rules, w);
  if (r == nullptr) return false;

  switch (r->group) {
    case 1:
      return delete_if_in(w, r->suffix, rg.r2);
    case 2:
      if (!delete_if_in(w, r->suffix, rg.r2)) return false;
      delete_if_in(w, U"ic", rg.r2);
      return true;
    case 3:
      if (!ends_with(w, r->suffix) || !suffix_in(w, rg.r2, r->suffix.size())) return false;
      drop(w, r->suffix.size());
      w += U"log";
      return true;
    case 4:
      if (!suffix_in(w, rg.r2, r->suffix.size())) return false;
      drop(w, r->suffix.size());
      w += U"u";
      return true;
    case 5:
      if (!suffix_in(w, rg.r2, r->suffix.size())) return false;
      drop(w, r->suffix.size());
      w += U"ente";
      return true;
    case 6:
      if (!delete_if_in(w, r->suffix, rg.r1)) return false;
      if (ends_with(w, U"iv") && suffix_in(w, rg.r2, 2)) {
        drop(w, 2);
        delete_if_in(w, U"at", rg.r2);
      } else if (!delete_if_in(w, U"os", rg.r2) && !delete_if_in(w, U"ic", rg.r2)) {
        delete_if_in(w, U"ad", rg.r2);
      }
      return true;
    case 7:
      if (!delete_if_in(w, r->suffix, rg.r2)) return false;
      if (!delete_if_in(w, U"ante", rg.r2) && !delete_if_in(w, U"able", rg.r2)) {
        delete_if_in(w, U"ible", rg.r2);
      }
      return true;
    case 8:
      if (!delete_if_in(w, r->suffix, rg.r2)) return false;
      if (!delete_if_in(w, U"abil", rg.r2) && !delete_if_in(w, U"ic", rg.r2)) {
        delete_if_in(w, U"iv", rg.r2);
      }
      return true;
    case 9:
      if (!delete_if_in(w, r->suffix, rg.r2)) return false;
      delete_if_in(w, U"at", rg.r2);
      return true;
    default:
      return false;
  }
}

bool step2a_y_verbs(std::u32string& w, const Regions& rg) {
  static const std::vector<Rule> rules = sorted_rules({
      {U"ya", 0}, {U"ye", 0}, {U"yan", 0}, {U"yen", 0}, {U"yeron", 0}, {U"yendo", 0},
      {U"yo", 0}, {U"yó", 0}, {U"yas", 0}, {U"yes", 0}, {U"yais", 0},  {U"yamos", 0},
  });
  const Rule* r = longest_match(rules, w);
  if (r == nullptr) return false;
  std::size_t start = w.size() - r->suffix.size();
  if (start < rg.rv) return false;
  if (start == 0 || w[start - 1] != U'u') return false;  // the u need not be in RV
  drop(w, r->suffix.size());
  return true;
}

bool step2b_verbs(std::u32string& w, const Regions& rg) {
  // group 1 also strips a preceding 'u' of "gu" after deletion.
  static const std::vector<Rule> rules = sorted_rules({
      {U"en", 1},      {U"es", 1},      {U"éis", 1},     {U"emos", 1},
      {U"arían", 2},   {U"arías", 2},   {U"arán", 2},    {U"arás", 2},
      {U"aríais", 2},  {U"aría", 2},    {U"aréis", 2},   {U"aríamos", 2},
      {U"aremos", 2},  {U"ará", 2},     {U"aré", 2},     {U"erían", 2},
      {U"erías", 2},   {U"erán", 2},    {U"erás", 2},    {U"eríais", 2},
      {U"ería", 2},    {U"eréis", 2},   {U"eríamos", 2}, {U"eremos", 2},
      {U"erá", 2},     {U"eré", 2},     {U"irían", 2},   {U"irías", 2},
      {U"irán", 2},    {U"irás", 2},    {U"iríais", 2},  {U"iría", 2},
      {U"iréis", 2},   {U"iríamos", 2}, {U"iremos", 2},  {U"irá", 2},
      {U"iré", 2},     {U"aba", 2},     {U"ada", 2},     {U"ida", 2},
      {U"ía", 2},      {U"ara", 2},     {U"iera", 2},    {U"ad", 2},
      {U"ed", 2},      {U"id", 2},      {U"ase", 2},     {U"iese", 2},
      {U"aste", 2},    {U"iste", 2},    {U"an", 2},      {U"aban", 2},
      {U"ían", 2},     {U"aran", 2},    {U"ieran", 2},   {U"asen", 2},
      {U"iesen", 2},   {U"aron", 2},    {U"ieron", 2},   {U"ado", 2},
      {U"ido", 2},     {U"ando", 2},    {U"iendo", 2},   {U"ió", 2},
      {U"ar", 2},      {U"er", 2},      {U"ir", 2},      {U"as", 2},
      {U"abas", 2},    {U"adas", 2},    {U"idas", 2},    {U"ías", 2},
      {U"aras", 2},    {U"ieras", 2},   {U"ases", 2},    {U"ieses", 2},
      {U"ís", 2},      {U"áis", 2},     {U"abais", 2},   {U"íais", 2},
      {U"arais", 2},   {U"ierais", 2},  {U"aseis", 2},   {U"ieseis", 2},
      {U"asteis", 2},  {U"isteis", 2},  {U"ados", 2},    {U"idos", 2},
      {U"amos", 2},    {U"ábamos", 2},  {U"íamos", 2},   {U"imos", 2},
      {U"áramos", 2},  {U"iéramos", 2}, {U"iésemos", 2}, {U"ásemos", 2},
  });
  const Rule* r = longest_match(rules, w);
  if (r == nullptr) return false;
  if (!suffix_in(w, rg.rv, r->suffix.size())) return false;
  drop(w, r->suffix.size());
  if (r->group == 1 && ends_with(w, U"gu")) drop(w, 1);  // the gu need not be in RV
  return true;
}

void step3_residual(std::u32string& w, const Regions& rg) {
  static const std::vector<Rule> rules = sorted_rules({
      {U"os", 1}, {U"a", 1}, {U"o", 1}, {U"á", 1}, {U"í", 1}, {U"ó", 1},
      {U"e", 2},  {U"é", 2},
  });
  const Rule* r = longest_match(rules, w);
  if (r == nullptr) return;
  if (!suffix_in(w, rg.rv, r->suffix.size())) return;
  drop(w, r->suffix.size());
  if (r->group == 2 && ends_with(w, U"gu") && w.size() - 1 >= rg.rv) drop(w, 1);
}

void postlude(std::u32string& w) {
  for (char32_t& c : w) {
    switch (c) {
      case U'á': c = U'a'; break;
      case U'é': c = U'e'; break;
      case U'í': c = U'i'; break;
      case U'ó': c = U'o'; break;
      case U'ú': c = U'u'; break;
      default: break;
    }
  }
}

class SpanishStemmer final : public Stemmer {
 public:
  std::string stem(std::string_view word) const override {
    std::u32string w = utf8::decode(textnorm::lowercase(word));
    if (w.size() < 2) return utf8::encode(w);
    const Regions rg = stem_detail::compute_regions(w, kVowels);
    step0_attached_pronoun(w, rg);
    bool changed = step1_standard_suffixes(w, rg);
    if (!changed && !step2a_y_verbs(w, rg)) step2b_verbs(w, rg);
    step3_residual(w, rg);
    postlude(w);
    return utf8::encode(w);
  }
  std::string_view id() const override { return "snowball-es"; }
};

}  // namespace

const Stemmer& snowball_es_stemmer() {
  static const SpanishStemmer instance;
  return instance;
}

}  // namespace polar
