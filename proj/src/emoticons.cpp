#include "polar/emoticons.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "builtin_data.hpp"
#include "polar/error.hpp"

namespace polar {

std::string_view to_string(EntityAction a) {
  switch (a) {
    case EntityAction::remove:
      return "remove";
    case EntityAction::group:
      return "group";
    case EntityAction::none:
      return "none";
  }
  return "?";
}

EntityAction entity_action_from_string(std::string_view s) {
  if (s == "remove") return EntityAction::remove;
  if (s == "group") return EntityAction::group;
  if (s == "none") return EntityAction::none;
  throw Error("unknown entity action: '" + std::string(s) + "' (expected remove|group|none)");
}

void EmoticonMap::add(std::string pattern, std::string_view polarity_class) {
  if (pattern.empty()) throw Error("emoticon pattern must be non-empty");
  std::string tag;
  if (polarity_class == "pos") {
    tag = "_pos";
  } else if (polarity_class == "neg") {
    tag = "_neg";
  } else if (polarity_class == "neu") {
    tag = "_neu";
  } else {
    throw Error("emoticon class must be pos|neg|neu, got '" + std::string(polarity_class) + "'");
  }
  auto& bucket = buckets_[static_cast<unsigned char>(pattern[0])];
  for (auto& e : bucket) {
    if (e.pattern == pattern) {
      e.tag = tag;  // last definition wins
      return;
    }
  }
  bucket.push_back({std::move(pattern), std::move(tag)});
  // Longest-first; ties resolved lexicographically so matching is stable.
  std::sort(bucket.begin(), bucket.end(), [](const Entry& a, const Entry& b) {
    if (a.pattern.size() != b.pattern.size()) return a.pattern.size() > b.pattern.size();
    return a.pattern < b.pattern;
  });
  ++count_;
}

EmoticonMap EmoticonMap::parse(std::string_view content, std::string_view origin) {
  EmoticonMap map;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line = content.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                              : eol - pos);
    pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(std::string(origin) + ":" + std::to_string(lineno) +
                  ": expected <pattern><TAB><pos|neg|neu>");
    }
    std::string_view pattern = line.substr(0, tab);
    std::string_view cls = line.substr(tab + 1);
    if (pattern.empty()) {
      throw Error(std::string(origin) + ":" + std::to_string(lineno) + ": empty pattern");
    }
    map.add(std::string(pattern), cls);
  }
  return map;
}

EmoticonMap EmoticonMap::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open emoticon map: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

const EmoticonMap& EmoticonMap::builtin() {
  static const EmoticonMap map = parse(data::emoticons_tsv(), "<builtin>");
  return map;
}

std::string EmoticonMap::apply(std::string_view text, EntityAction action) const {
  if (action == EntityAction::none) return std::string(text);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto& bucket = buckets_[static_cast<unsigned char>(text[i])];
    const Entry* hit = nullptr;
    for (const auto& e : bucket) {
      if (text.size() - i >= e.pattern.size() &&
          text.compare(i, e.pattern.size(), e.pattern) == 0) {
        hit = &e;
        break;  // buckets are longest-first
      }
    }
    if (hit != nullptr) {
      if (action == EntityAction::group) out += hit->tag;
      i += hit->pattern.size();
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return out;
}

const std::string* EmoticonMap::tag_for(std::string_view pattern) const {
  if (pattern.empty()) return nullptr;
  const auto& bucket = buckets_[static_cast<unsigned char>(pattern[0])];
  for (const auto& e : bucket) {
    if (e.pattern == pattern) return &e.tag;
  }
  return nullptr;
}

std::string EmoticonMap::serialize() const {
  // Deterministic order: by first byte, then bucket order (longest-first).
  std::string out;
  for (const auto& bucket : buckets_) {
    for (const auto& e : bucket) {
      out += e.pattern;
      out.push_back('\t');
      out += e.tag.substr(1);  // _pos -> pos
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace polar
