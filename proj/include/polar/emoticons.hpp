#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polar {

enum class EntityAction : std::uint8_t { remove, group, none };

std::string_view to_string(EntityAction a);
EntityAction entity_action_from_string(std::string_view s);  // throws Error

// Emoticon inventory mapping surface patterns (":)", "U_U", unicode emoji)
// to one of the polarity tags _pos/_neg/_neu. Matching is longest-first,
// left-to-right, non-overlapping.
class EmoticonMap {
 public:
  // File format: UTF-8 lines `<pattern><TAB><pos|neg|neu>`. Blank lines and
  // lines starting with '#' are ignored.
  static EmoticonMap load_file(const std::string& path);
  static EmoticonMap parse(std::string_view content, std::string_view origin = "<string>");

  // Inventory compiled in from data/emoticons.tsv.
  static const EmoticonMap& builtin();

  void add(std::string pattern, std::string_view polarity_class);  // pos|neg|neu

  // Applies `action` to every match. remove deletes the match, group replaces
  // it with its tag, none returns the input unchanged.
  std::string apply(std::string_view text, EntityAction action) const;

  // Tag ("_pos"/"_neg"/"_neu") for an exact pattern, nullptr when absent.
  const std::string* tag_for(std::string_view pattern) const;

  std::size_t size() const { return count_; }
  std::string serialize() const;  // round-trips through parse

 private:
  struct Entry {
    std::string pattern;
    std::string tag;
  };
  // Buckets keyed by the first byte of the pattern, each sorted longest-first.
  std::array<std::vector<Entry>, 256> buckets_{};
  std::size_t count_ = 0;
};

}  // namespace polar
