#pragma once

#include <string>

#include "chaoscrypt/image.hpp"

namespace chaoscrypt {

// Binary netpbm reader: P5 (grayscale) and P6 (RGB), maxval 255 only.
// Header comments are tolerated; anything else is rejected with a
// descriptive error.
ImageBuffer read_pnm(const std::string& path);

// Writes P5/P6 according to the channel count. No comments are emitted, so
// write/read round trips are byte-exact.
void write_pnm(const ImageBuffer& image, const std::string& path);

}  // namespace chaoscrypt
