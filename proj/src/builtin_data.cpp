#include "builtin_data.hpp"

#include <cstddef>

// Arrays generated at build time from data/ (see cmake/embed.cmake).
extern const unsigned char polar_data_emoticons[];
extern const std::size_t polar_data_emoticons_len;
extern const unsigned char polar_data_pack_en[];
extern const std::size_t polar_data_pack_en_len;
extern const unsigned char polar_data_pack_es[];
extern const std::size_t polar_data_pack_es_len;
extern const unsigned char polar_data_pack_it[];
extern const std::size_t polar_data_pack_it_len;

namespace polar::data {

namespace {
std::string_view view(const unsigned char* p, std::size_t n) {
  return {reinterpret_cast<const char*>(p), n};
}
}  // namespace

std::string_view emoticons_tsv() { return view(polar_data_emoticons, polar_data_emoticons_len); }

std::string_view langpack_text(std::string_view code) {
  if (code == "en") return view(polar_data_pack_en, polar_data_pack_en_len);
  if (code == "es") return view(polar_data_pack_es, polar_data_pack_es_len);
  if (code == "it") return view(polar_data_pack_it, polar_data_pack_it_len);
  return {};
}

}  // namespace polar::data
