#pragma once

#include <string>
#include <string_view>

namespace polar::utf8 {

// Decodes UTF-8 to codepoints. Malformed bytes are decoded as their own byte
// value (Latin-1 fallback) so decoding is total and never throws.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view cps);
void append(std::string& out, char32_t cp);

// Codepoint count of a UTF-8 string (with the same fallback as decode).
std::size_t length(std::string_view text);

}  // namespace polar::utf8
