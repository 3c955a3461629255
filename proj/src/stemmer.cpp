#include "polar/stemmer.hpp"

#include "polar/error.hpp"
#include "stemmer_util.hpp"

namespace polar {

namespace stem_detail {

Regions compute_regions(const std::u32string& w, std::u32string_view vowels) {
  const std::size_t n = w.size();
  auto vowel = [&](std::size_t i) { return has_cp(vowels, w[i]); };

  Regions r{n, n, n};
  for (std::size_t i = 1; i < n; ++i) {
    if (!vowel(i) && vowel(i - 1)) {
      r.r1 = i + 1;
      break;
    }
  }
  for (std::size_t i = r.r1 + 1; i < n; ++i) {
    if (!vowel(i) && vowel(i - 1)) {
      r.r2 = i + 1;
      break;
    }
  }

  if (n >= 2) {
    if (!vowel(1)) {
      for (std::size_t i = 2; i < n; ++i) {
        if (vowel(i)) {
          r.rv = i + 1;
          break;
        }
      }
    } else if (vowel(0) && vowel(1)) {
      for (std::size_t i = 2; i < n; ++i) {
        if (!vowel(i)) {
          r.rv = i + 1;
          break;
        }
      }
    } else if (n > 3) {
      r.rv = 3;
    }
  }
  return r;
}

}  // namespace stem_detail

namespace {

class NoneStemmer final : public Stemmer {
 public:
  std::string stem(std::string_view word) const override { return std::string(word); }
  std::string_view id() const override { return "none"; }
};

}  // namespace

const Stemmer& porter_en_stemmer();    // stemmer_en.cpp
const Stemmer& snowball_es_stemmer();  // stemmer_es.cpp
const Stemmer& snowball_it_stemmer();  // stemmer_it.cpp

const Stemmer& stemmer_by_id(std::string_view id) {
  static const NoneStemmer none;
  if (id == "none") return none;
  if (id == "porter-en") return porter_en_stemmer();
  if (id == "snowball-es") return snowball_es_stemmer();
  if (id == "snowball-it") return snowball_it_stemmer();
  throw Error("unknown stemmer id: '" + std::string(id) +
              "' (registered: none, porter-en, snowball-es, snowball-it)");
}

bool stemmer_registered(std::string_view id) {
  return id == "none" || id == "porter-en" || id == "snowball-es" || id == "snowball-it";
}

}  // namespace polar
