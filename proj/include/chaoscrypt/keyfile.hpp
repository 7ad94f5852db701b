#pragma once

#include <cstddef>
#include <string>

#include "chaoscrypt/keygen.hpp"

namespace chaoscrypt {

// Line-oriented "key = value" text carrying the cipher key and the image
// geometry. Reals are written with 17 significant digits so parsing returns
// bit-identical doubles.
struct KeyFile {
  int schema = 1;
  std::string config_id = "case-i";
  KeyMaterial key;
  std::size_t width = 0;
  std::size_t height = 0;
  int channels = 1;

  bool operator==(const KeyFile&) const = default;
};

std::string serialize_key(const KeyFile& kf);
KeyFile parse_key(const std::string& text);

void write_key_file(const KeyFile& kf, const std::string& path);
KeyFile read_key_file(const std::string& path);

}  // namespace chaoscrypt
