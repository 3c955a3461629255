#pragma once

#include <string_view>

// Data files compiled into the library (single source: data/ in the repo).
namespace polar::data {

std::string_view emoticons_tsv();

// Returns the pack file contents for "en", "es", "it"; empty view otherwise.
std::string_view langpack_text(std::string_view code);

}  // namespace polar::data
