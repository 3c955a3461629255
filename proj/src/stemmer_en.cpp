// English stemmer: the classic Porter algorithm (suffix stripping driven by
// the measure m of the stem, with the usual five steps).

#include <string>

#include "polar/stemmer.hpp"
#include "polar/textnorm.hpp"

namespace polar {

namespace {

class PorterContext {
 public:
  explicit PorterContext(std::string word) : b_(std::move(word)), k_(b_.size()) {}

  std::string run() {
    if (k_ <= 2) return b_;  // words of length 1 or 2 are left alone
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    b_.resize(k_);
    return b_;
  }

 private:
  std::string b_;
  std::size_t k_;  // length of the live prefix of b_
  std::size_t j_ = 0;

  bool is_consonant(std::size_t i) const {
    switch (b_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !is_consonant(i - 1);
      default:
        return true;
    }
  }

  // Measure of b_[0..j_): the m in [C](VC)^m[V].
  int measure() const {
    int m = 0;
    std::size_t i = 0;
    while (true) {
      if (i >= j_) return m;
      if (!is_consonant(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i >= j_) return m;
        if (is_consonant(i)) break;
        ++i;
      }
      ++i;
      ++m;
      while (true) {
        if (i >= j_) return m;
        if (!is_consonant(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (std::size_t i = 0; i < j_; ++i) {
      if (!is_consonant(i)) return true;
    }
    return false;
  }

  bool double_consonant(std::size_t i) const {
    return i >= 1 && b_[i] == b_[i - 1] && is_consonant(i);
  }

  // consonant-vowel-consonant ending at i, last consonant not w, x or y.
  bool cvc(std::size_t i) const {
    if (i < 2 || !is_consonant(i) || is_consonant(i - 1) || !is_consonant(i - 2)) return false;
    char c = b_[i];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view s) {
    if (s.size() > k_) return false;
    if (b_.compare(k_ - s.size(), s.size(), s) != 0) return false;
    j_ = k_ - s.size();
    return true;
  }

  void set_to(std::string_view s) {
    b_.replace(j_, s.size(), s);
    k_ = j_ + s.size();
  }

  void replace_if_m_positive(std::string_view s) {
    if (measure() > 0) set_to(s);
  }

  void step1ab() {
    if (b_[k_ - 1] == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (b_[k_ - 2] != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (measure() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_consonant(k_ - 1)) {
        char c = b_[k_ - 1];
        if (c != 'l' && c != 's' && c != 'z') --k_;
      } else {
        j_ = k_;
        if (measure() == 1 && cvc(k_ - 1)) set_to("e");
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[k_ - 1] = 'i';
  }

  void step2() {
    if (k_ < 2) return;
    switch (b_[k_ - 2]) {
      case 'a':
        if (ends("ational")) return replace_if_m_positive("ate");
        if (ends("tional")) return replace_if_m_positive("tion");
        break;
      case 'c':
        if (ends("enci")) return replace_if_m_positive("ence");
        if (ends("anci")) return replace_if_m_positive("ance");
        break;
      case 'e':
        if (ends("izer")) return replace_if_m_positive("ize");
        break;
      case 'l':
        if (ends("abli")) return replace_if_m_positive("able");
        if (ends("alli")) return replace_if_m_positive("al");
        if (ends("entli")) return replace_if_m_positive("ent");
        if (ends("eli")) return replace_if_m_positive("e");
        if (ends("ousli")) return replace_if_m_positive("ous");
        break;
      case 'o':
        if (ends("ization")) return replace_if_m_positive("ize");
        if (ends("ation")) return replace_if_m_positive("ate");
        if (ends("ator")) return replace_if_m_positive("ate");
        break;
      case 's':
        if (ends("alism")) return replace_if_m_positive("al");
        if (ends("iveness")) return replace_if_m_positive("ive");
        if (ends("fulness")) return replace_if_m_positive("ful");
        if (ends("ousness")) return replace_if_m_positive("ous");
        break;
      case 't':
        if (ends("aliti")) return replace_if_m_positive("al");
        if (ends("iviti")) return replace_if_m_positive("ive");
        if (ends("biliti")) return replace_if_m_positive("ble");
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (b_[k_ - 1]) {
      case 'e':
        if (ends("icate")) return replace_if_m_positive("ic");
        if (ends("ative")) return replace_if_m_positive("");
        if (ends("alize")) return replace_if_m_positive("al");
        break;
      case 'i':
        if (ends("iciti")) return replace_if_m_positive("ic");
        break;
      case 'l':
        if (ends("ical")) return replace_if_m_positive("ic");
        if (ends("ful")) return replace_if_m_positive("");
        break;
      case 's':
        if (ends("ness")) return replace_if_m_positive("");
        break;
      default:
        break;
    }
  }

  void step4() {
    if (k_ < 2) return;
    switch (b_[k_ - 2]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j_ >= 1 && (b_[j_ - 1] == 's' || b_[j_ - 1] == 't')) break;
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (measure() > 1) k_ = j_;
  }

  void step5() {
    j_ = k_;
    if (b_[k_ - 1] == 'e') {
      j_ = k_ - 1;
      int m = measure();
      if (m > 1 || (m == 1 && !cvc(k_ - 2))) --k_;
    }
    j_ = k_;
    if (k_ >= 2 && b_[k_ - 1] == 'l' && double_consonant(k_ - 1)) {
      j_ = k_;
      if (measure() > 1) --k_;
    }
  }
};

class PorterStemmer final : public Stemmer {
 public:
  std::string stem(std::string_view word) const override {
    PorterContext ctx(textnorm::lowercase(word));
    return ctx.run();
  }
  std::string_view id() const override { return "porter-en"; }
};

}  // namespace

const Stemmer& porter_en_stemmer() {
  static const PorterStemmer instance;
  return instance;
}

}  // namespace polar
