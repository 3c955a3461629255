// Italian stemmer: Snowball-family rules. The prelude marks u/i that act as
// consonants (after q, between vowels) by uppercasing them; the postlude
// lowers them back.

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

constexpr std::u32string_view kVowels = U"aeiouàèìòù";

struct Rule {
  std::u32string_view suffix;
  int group;
};

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

bool delete_if_in(std::u32string& w, std::u32string_view p, std::size_t start) {
  if (ends_with(w, p) && suffix_in(w, start, p.size())) {
    drop(w, p.size());
    return true;
  }
  return false;
}

bool is_vowel(char32_t c) { return stem_detail::has_cp(kVowels, c); }

void prelude(std::u32string& w) {
  for (char32_t& c : w) {
    switch (c) {
      case U'á': c = U'à'; break;
      case U'é': c = U'è'; break;
      case U'í': c = U'ì'; break;
      case U'ó': c = U'ò'; break;
      case U'ú': c = U'ù'; break;
      default: break;
    }
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == U'q' && w[i + 1] == U'u') w[i + 1] = U'U';
  }
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if ((w[i] == U'u' || w[i] == U'i') && is_vowel(w[i - 1]) && is_vowel(w[i + 1])) {
      w[i] = w[i] == U'u' ? U'U' : U'I';
    }
  }
}

bool step0_attached_pronoun(std::u32string& w, const Regions& rg) {
  static const std::vector<Rule> pronouns = sorted_rules({
      {U"ci", 0},     {U"gli", 0},    {U"la", 0},     {U"le", 0},     {U"li", 0},
      {U"lo", 0},     {U"mi", 0},     {U"ne", 0},     {U"si", 0},     {U"ti", 0},
      {U"vi", 0},     {U"sene", 0},   {U"gliela", 0}, {U"gliele", 0}, {U"glieli", 0},
      {U"glielo", 0}, {U"gliene", 0}, {U"mela", 0},   {U"mele", 0},   {U"meli", 0},
      {U"melo", 0},   {U"mene", 0},   {U"tela", 0},   {U"tele", 0},   {U"teli", 0},
      {U"telo", 0},   {U"tene", 0},   {U"cela", 0},   {U"cele", 0},   {U"celi", 0},
      {U"celo", 0},   {U"cene", 0},   {U"vela", 0},   {U"vele", 0},   {U"veli", 0},
      {U"velo", 0},   {U"vene", 0},
  });
  const Rule* pr = longest_match(pronouns, w);
  if (pr == nullptr) return false;
  std::size_t base_len = w.size() - pr->suffix.size();
  std::u32string_view base(w.data(), base_len);

  static const std::vector<Rule> patterns = sorted_rules({
      {U"ando", 1}, {U"endo", 1}, {U"ar", 2}, {U"er", 2}, {U"ir", 2},
  });
  for (const Rule& p : patterns) {
    if (base.size() < p.suffix.size()) continue;
    if (base.substr(base.size() - p.suffix.size()) != p.suffix) continue;
    if (base.size() - p.suffix.size() < rg.rv) continue;
    if (p.group == 1) {
      w.resize(base_len);  // delete the pronoun
    } else {
      w.resize(base_len);
      w += U"e";  // replace the pronoun by e
    }
    return true;
  }
  return false;
}

bool step1_standard_suffixes(std::u32string& w, const Regions& rg) {
  static const std::vector<Rule> rules = sorted_rules({
      // group 1: delete if in R2
      {U"anza", 1},   {U"anze", 1},   {U"ico", 1},    {U"ici", 1},    {U"ica", 1},
      {U"ice", 1},    {U"iche", 1},   {U"ichi", 1},   {U"ismo", 1},   {U"ismi", 1},
      {U"abile", 1},  {U"abili", 1},  {U"ibile", 1},  {U"ibili", 1},  {U"ista", 1},
      {U"iste", 1},   {U"isti", 1},   {U"istà", 1},   {U"istè", 1},   {U"istì", 1},
      {U"oso", 1},    {U"osi", 1},    {U"osa", 1},    {U"ose", 1},    {U"mente", 1},
      {U"atrice", 1}, {U"atrici", 1}, {U"ante", 1},   {U"anti", 1},
      // group 2: delete if in R2, then a preceding ic
      {U"azione", 2}, {U"azioni", 2}, {U"atore", 2},  {U"atori", 2},
      // replacements
      {U"logia", 3},  {U"logie", 3},
      {U"uzione", 4}, {U"uzioni", 4}, {U"usione", 4}, {U"usioni", 4},
      {U"enza", 5},   {U"enze", 5},
      // group 6: delete if in RV
      {U"amento", 6}, {U"amenti", 6}, {U"imento", 6}, {U"imenti", 6},
      // adverb
      {U"amente", 7},
      // group 8: delete if in R2, then abil/ic/iv
      {U"ità", 8},
      // group 9: delete if in R2, then at (then ic)
      {U"ivo", 9},    {U"ivi", 9},    {U"iva", 9},    {U"ive", 9},
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
      if (!suffix_in(w, rg.r2, r->suffix.size())) return false;
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
      return delete_if_in(w, r->suffix, rg.rv);
    case 7:
      if (!delete_if_in(w, r->suffix, rg.r1)) return false;
      if (ends_with(w, U"iv") && suffix_in(w, rg.r2, 2)) {
        drop(w, 2);
        delete_if_in(w, U"at", rg.r2);
      } else if (!delete_if_in(w, U"os", rg.r2) && !delete_if_in(w, U"ic", rg.r2)) {
        delete_if_in(w, U"abil", rg.r2);
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
      if (ends_with(w, U"at") && suffix_in(w, rg.r2, 2)) {
        drop(w, 2);
        delete_if_in(w, U"ic", rg.r2);
      }
      return true;
    default:
      return false;
  }
}

bool step2_verbs(std::u32string& w, const Regions& rg) {
  static const std::vector<Rule> rules = sorted_rules({
      {U"ammo", 0},   {U"ando", 0},     {U"ano", 0},    {U"are", 0},    {U"arono", 0},
      {U"asse", 0},   {U"assero", 0},   {U"assi", 0},   {U"assimo", 0}, {U"ata", 0},
      {U"ate", 0},    {U"ati", 0},      {U"ato", 0},    {U"ava", 0},    {U"avamo", 0},
      {U"avano", 0},  {U"avate", 0},    {U"avi", 0},    {U"avo", 0},    {U"emmo", 0},
      {U"enda", 0},   {U"ende", 0},     {U"endi", 0},   {U"endo", 0},   {U"erà", 0},
      {U"erai", 0},   {U"eranno", 0},   {U"ere", 0},    {U"erebbe", 0}, {U"erebbero", 0},
      {U"erei", 0},   {U"eremmo", 0},   {U"eremo", 0},  {U"ereste", 0}, {U"eresti", 0},
      {U"erete", 0},  {U"erò", 0},      {U"erono", 0},  {U"essero", 0}, {U"ete", 0},
      {U"eva", 0},    {U"evamo", 0},    {U"evano", 0},  {U"evate", 0},  {U"evi", 0},
      {U"evo", 0},    {U"Iamo", 0},     {U"iamo", 0},   {U"immo", 0},   {U"irà", 0},
      {U"irai", 0},   {U"iranno", 0},   {U"ire", 0},    {U"irebbe", 0}, {U"irebbero", 0},
      {U"irei", 0},   {U"iremmo", 0},   {U"iremo", 0},  {U"ireste", 0}, {U"iresti", 0},
      {U"irete", 0},  {U"irò", 0},      {U"irono", 0},  {U"isca", 0},   {U"iscano", 0},
      {U"isce", 0},   {U"isci", 0},     {U"isco", 0},   {U"iscono", 0}, {U"issero", 0},
      {U"ita", 0},    {U"ite", 0},      {U"iti", 0},    {U"ito", 0},    {U"iva", 0},
      {U"ivamo", 0},  {U"ivano", 0},    {U"ivate", 0},  {U"ivi", 0},    {U"ivo", 0},
      {U"ono", 0},    {U"uta", 0},      {U"ute", 0},    {U"uti", 0},    {U"uto", 0},
      {U"ar", 0},     {U"ir", 0},
  });
  const Rule* r = longest_match(rules, w);
  if (r == nullptr) return false;
  if (!suffix_in(w, rg.rv, r->suffix.size())) return false;
  drop(w, r->suffix.size());
  return true;
}

void step3a_residual_vowel(std::u32string& w, const Regions& rg) {
  static constexpr std::u32string_view finals = U"aeioàèìò";
  if (w.empty()) return;
  if (stem_detail::has_cp(finals, w.back()) && suffix_in(w, rg.rv, 1)) {
    drop(w, 1);
    if (!w.empty() && w.back() == U'i' && suffix_in(w, rg.rv, 1)) drop(w, 1);
  }
}

void step3b_ch(std::u32string& w, const Regions& rg) {
  if ((ends_with(w, U"ch") || ends_with(w, U"gh")) && suffix_in(w, rg.rv, 2)) {
    drop(w, 1);  // ch -> c, gh -> g
  }
}

void postlude(std::u32string& w) {
  for (char32_t& c : w) {
    if (c == U'I') c = U'i';
    if (c == U'U') c = U'u';
  }
}

class ItalianStemmer final : public Stemmer {
 public:
  std::string stem(std::string_view word) const override {
    std::u32string w = utf8::decode(textnorm::lowercase(word));
    if (w.size() < 2) return utf8::encode(w);
    prelude(w);
    const Regions rg = stem_detail::compute_regions(w, kVowels);
    step0_attached_pronoun(w, rg);
    if (!step1_standard_suffixes(w, rg)) step2_verbs(w, rg);
    step3a_residual_vowel(w, rg);
    step3b_ch(w, rg);
    postlude(w);
    return utf8::encode(w);
  }
  std::string_view id() const override { return "snowball-it"; }
};

}  // namespace

const Stemmer& snowball_it_stemmer() {
  static const ItalianStemmer instance;
  return instance;
}

}  // namespace polar
