#pragma once

#include <string>
#include <string_view>

#include "relic/ccl.hpp"
#include "relic/integral2d.hpp"

// Minimal netpbm ingestion: P1/P4 bitmaps and P2/P5 grayscale with
// maxval <= 255. Header comments (# to end of line) are honored. The three
// failure classes carry distinct diagnostics: malformed header, truncated
// data, unsupported maxval.
namespace relic::pnm {

// Grayscale view; P1/P4 pixels arrive as 0/1.
img::Image parse_image(std::string_view data);
img::Image read_image(const std::string& path);

// Binary view. P1/P4 map bit 1 to foreground; P2/P5 threshold with
// pixel > threshold as foreground.
ccl::BinaryImage parse_binary(std::string_view data, long long threshold = 0);
ccl::BinaryImage read_binary(const std::string& path, long long threshold = 0);

}  // namespace relic::pnm
