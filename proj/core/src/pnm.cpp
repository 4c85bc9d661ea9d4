#include "relic/pnm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace relic::pnm {

namespace {

[[noreturn]] void fail_header(const std::string& detail) {
  throw std::runtime_error("malformed header: " + detail);
}

[[noreturn]] void fail_truncated(const std::string& detail) {
  throw std::runtime_error("truncated data: " + detail);
}

struct Cursor {
  std::string_view data;
  std::size_t pos = 0;

  bool done() const { return pos >= data.size(); }
  char peek() const { return data[pos]; }

  // Whitespace and # comments separate header tokens and ASCII samples.
  void skip_separators() {
    while (!done()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '#') {
        while (!done() && peek() != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  long long next_uint(const char* what) {
    skip_separators();
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail_header(std::string("expected ") + what);
    long long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000) fail_header(std::string(what) + " out of range");
      ++pos;
    }
    return value;
  }

  // The raster of a binary format begins after exactly one whitespace byte.
  void expect_raster_separator() {
    if (done() || !std::isspace(static_cast<unsigned char>(peek())))
      fail_header("missing whitespace before raster");
    ++pos;
  }
};

struct RawPnm {
  int magic = 0;  // 1, 2, 4 or 5
  int width = 0;
  int height = 0;
  long long maxval = 1;
  std::vector<long long> samples;  // row-major
};

RawPnm parse_raw(std::string_view data) {
  Cursor c{data};
  RawPnm out;

  if (data.size() < 2 || data[0] != 'P') fail_header("missing P1/P2/P4/P5 magic number");
  switch (data[1]) {
    case '1': out.magic = 1; break;
    case '2': out.magic = 2; break;
    case '4': out.magic = 4; break;
    case '5': out.magic = 5; break;
    default: fail_header(std::string("unsupported format P") + data[1]);
  }
  c.pos = 2;

  const long long w = c.next_uint("width");
  const long long h = c.next_uint("height");
  if (w < 1 || h < 1) fail_header("image dimensions must be positive");
  if (w > 65535 || h > 65535) fail_header("image dimensions out of range");
  out.width = static_cast<int>(w);
  out.height = static_cast<int>(h);

  if (out.magic == 2 || out.magic == 5) {
    out.maxval = c.next_uint("maxval");
    if (out.maxval < 1) fail_header("maxval must be positive");
    if (out.maxval > 255)
      throw std::runtime_error("unsupported maxval " + std::to_string(out.maxval) +
                               " (expected 1..255)");
  }

  const std::size_t count = static_cast<std::size_t>(out.width) * out.height;
  out.samples.reserve(count);

  switch (out.magic) {
    case 1:
      // ASCII bits; digits may run together, so read one character each.
      for (std::size_t i = 0; i < count; ++i) {
        c.skip_separators();
        if (c.done()) fail_truncated("P1 raster ended early");
        const char bit = c.peek();
        if (bit != '0' && bit != '1')
          throw std::runtime_error(std::string("malformed data: P1 sample '") + bit + "'");
        ++c.pos;
        out.samples.push_back(bit - '0');
      }
      break;
    case 2:
      for (std::size_t i = 0; i < count; ++i) {
        c.skip_separators();
        if (c.done()) fail_truncated("P2 raster ended early");
        const long long v = c.next_uint("P2 sample");
        if (v > out.maxval)
          throw std::runtime_error("malformed data: sample " + std::to_string(v) +
                                   " exceeds maxval " + std::to_string(out.maxval));
        out.samples.push_back(v);
      }
      break;
    case 4: {
      c.expect_raster_separator();
      // Packed rows, MSB first, each padded to a whole byte.
      const std::size_t row_bytes = (static_cast<std::size_t>(out.width) + 7) / 8;
      if (data.size() - c.pos < row_bytes * out.height) fail_truncated("P4 raster ended early");
      for (int y = 0; y < out.height; ++y) {
        const unsigned char* row =
            reinterpret_cast<const unsigned char*>(data.data()) + c.pos + y * row_bytes;
        for (int x = 0; x < out.width; ++x)
          out.samples.push_back((row[x / 8] >> (7 - x % 8)) & 1);
      }
      break;
    }
    case 5: {
      c.expect_raster_separator();
      if (data.size() - c.pos < count) fail_truncated("P5 raster ended early");
      for (std::size_t i = 0; i < count; ++i)
        out.samples.push_back(static_cast<unsigned char>(data[c.pos + i]));
      break;
    }
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace

img::Image parse_image(std::string_view data) {
  RawPnm raw = parse_raw(data);
  img::Image out(raw.width, raw.height);
  out.pixels = std::move(raw.samples);
  return out;
}

img::Image read_image(const std::string& path) { return parse_image(slurp(path)); }

ccl::BinaryImage parse_binary(std::string_view data, long long threshold) {
  RawPnm raw = parse_raw(data);
  ccl::BinaryImage out(raw.width, raw.height);
  const bool bitmap = raw.magic == 1 || raw.magic == 4;
  for (int y = 0; y < raw.height; ++y)
    for (int x = 0; x < raw.width; ++x) {
      const long long v = raw.samples[static_cast<std::size_t>(y) * raw.width + x];
      out.set(x, y, bitmap ? v != 0 : v > threshold);
    }
  return out;
}

ccl::BinaryImage read_binary(const std::string& path, long long threshold) {
  return parse_binary(slurp(path), threshold);
}

}  // namespace relic::pnm
