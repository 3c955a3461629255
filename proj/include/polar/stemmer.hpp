#pragma once

#include <string>
#include <string_view>

namespace polar {

// Rule-based stemmer interface. Implementations lowercase their input and
// are deterministic pure functions.
class Stemmer {
 public:
  virtual ~Stemmer() = default;
  virtual std::string stem(std::string_view word) const = 0;
  virtual std::string_view id() const = 0;
};

// Registered ids: "none", "porter-en", "snowball-es", "snowball-it".
// Throws Error for anything else (packs validate at load time).
const Stemmer& stemmer_by_id(std::string_view id);
bool stemmer_registered(std::string_view id);

}  // namespace polar
