#include "signal_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "error.hpp"

namespace gtrans {

namespace {

constexpr long long kMaxPixels = 1LL << 26;

std::string line_prefix(int line) { return "line " + std::to_string(line) + ": "; }

// Scans whitespace-separated tokens, treating '#' through end of line as a
// comment. Keeps the current line number for error messages.
class TokenCursor {
public:
  explicit TokenCursor(const std::string& text) : text_(text) {}

  bool next(std::string& token) {
    skip_separators();
    if (pos_ >= text_.size()) return false;
    const size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '#') {
      ++pos_;
    }
    token.assign(text_, start, pos_ - start);
    return true;
  }

  bool at_end() {
    skip_separators();
    return pos_ >= text_.size();
  }

  int line() const { return line_; }

private:
  void skip_separators() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        if (ch == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
};

int parse_header_int(TokenCursor& cursor, const char* what) {
  std::string token;
  if (!cursor.next(token)) {
    fail(Status::ParseError, line_prefix(cursor.line()) + "unexpected end of header, missing " + what);
  }
  size_t consumed = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != token.size() || value < 0 || value > kMaxPixels) {
    fail(Status::ParseError, line_prefix(cursor.line()) + "malformed " + what + " \"" + token + "\"");
  }
  return static_cast<int>(value);
}

}  // namespace

std::vector<double> read_signal_csv(const std::string& text, int expected_size) {
  if (expected_size < 0) fail(Status::InvalidArgument, "expected signal length must be non-negative");
  std::vector<double> values;
  values.reserve(static_cast<size_t>(expected_size));
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
      fail(Status::ParseError, line_prefix(line_no) + "empty line in signal");
    }
    size_t end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(begin, end - begin + 1);
    // strtod instead of stod: subnormal values must parse back exactly, and
    // stod reports their underflow as out_of_range. Overflow comes back as
    // infinity and falls to the finiteness check.
    char* parse_end = nullptr;
    double value = std::strtod(token.c_str(), &parse_end);
    if (parse_end != token.c_str() + token.size()) {
      fail(Status::ParseError, line_prefix(line_no) + "not a number: \"" + token + "\"");
    }
    if (!std::isfinite(value)) {
      fail(Status::ParseError, line_prefix(line_no) + "signal values must be finite");
    }
    values.push_back(value);
  }
  if (static_cast<int>(values.size()) != expected_size) {
    fail(Status::ParseError, "expected " + std::to_string(expected_size) + " lines, got " +
                                 std::to_string(values.size()));
  }
  return values;
}

std::string write_signal_csv(const std::vector<double>& x) {
  std::string out;
  char buffer[64];
  for (double value : x) {
    if (!std::isfinite(value)) fail(Status::InvalidArgument, "signal values must be finite");
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    out += buffer;
    out += '\n';
  }
  return out;
}

PgmImage read_pgm(const std::string& text) {
  // The magic is read before comment handling starts; P2 is the plain-text
  // variant this reader supports.
  size_t magic_end = 0;
  while (magic_end < text.size() &&
         !std::isspace(static_cast<unsigned char>(text[magic_end]))) {
    ++magic_end;
  }
  const std::string magic = text.substr(0, magic_end);
  if (magic == "P5") {
    fail(Status::ParseError, "line 1: binary PGM (P5) is not supported, use plain P2");
  }
  if (magic != "P2") {
    fail(Status::ParseError, "line 1: expected PGM magic \"P2\", got \"" + magic + "\"");
  }

  TokenCursor cursor(text);
  std::string token;
  cursor.next(token);  // the magic, already validated

  PgmImage img;
  img.width = parse_header_int(cursor, "width");
  img.height = parse_header_int(cursor, "height");
  img.maxval = parse_header_int(cursor, "maxval");
  if (img.width < 1 || img.height < 1) {
    fail(Status::ParseError, line_prefix(cursor.line()) + "image dimensions must be positive");
  }
  if (img.maxval < 1 || img.maxval > 65535) {
    fail(Status::ParseError, line_prefix(cursor.line()) + "maxval out of range [1, 65535]");
  }
  const long long count = static_cast<long long>(img.width) * img.height;
  if (count > kMaxPixels) {
    fail(Status::ParseError, line_prefix(cursor.line()) + "image is too large");
  }

  img.pixels.reserve(static_cast<size_t>(count));
  for (long long i = 0; i < count; ++i) {
    if (!cursor.next(token)) {
      fail(Status::ParseError, line_prefix(cursor.line()) + "truncated pixel data at pixel " +
                                   std::to_string(i) + " of " + std::to_string(count));
    }
    size_t consumed = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != token.size()) {
      fail(Status::ParseError, line_prefix(cursor.line()) + "malformed pixel \"" + token + "\"");
    }
    if (value < 0 || value > img.maxval) {
      fail(Status::ParseError, line_prefix(cursor.line()) + "pixel " + std::to_string(i) +
                                   " out of range [0, " + std::to_string(img.maxval) + "]");
    }
    img.pixels.push_back(static_cast<int>(value));
  }
  if (!cursor.at_end()) {
    fail(Status::ParseError, line_prefix(cursor.line()) + "trailing content after pixel data");
  }
  return img;
}

std::string write_pgm(const PgmImage& img) {
  if (img.width < 1 || img.height < 1) {
    fail(Status::InvalidArgument, "image dimensions must be positive");
  }
  if (img.maxval < 1 || img.maxval > 65535) {
    fail(Status::InvalidArgument, "maxval out of range [1, 65535]");
  }
  if (img.pixels.size() != static_cast<size_t>(img.width) * img.height) {
    fail(Status::InvalidArgument, "pixel count does not match width * height");
  }
  std::string out = "P2\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                    "\n" + std::to_string(img.maxval) + "\n";
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      const int value = img.pixel(r, c);
      if (value < 0 || value > img.maxval) {
        fail(Status::InvalidArgument, "pixel (" + std::to_string(r) + ", " + std::to_string(c) +
                                          ") out of range [0, " + std::to_string(img.maxval) + "]");
      }
      if (c > 0) out += ' ';
      out += std::to_string(value);
    }
    out += '\n';
  }
  return out;
}

GridSignal image_to_signal(const PgmImage& img) {
  if (img.pixels.size() != static_cast<size_t>(img.width) * img.height) {
    fail(Status::InvalidArgument, "pixel count does not match width * height");
  }
  GridSignal result;
  result.spec = GridSpec{{img.width, img.height}, false};
  validate_grid_spec(result.spec);
  result.values.assign(static_cast<size_t>(img.width) * img.height, 0.0);
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      result.values[static_cast<size_t>(result.spec.index_of({c, r}))] = img.pixel(r, c);
    }
  }
  return result;
}

PgmImage signal_to_image(const GridSpec& spec, const std::vector<double>& x, int maxval) {
  validate_grid_spec(spec);
  if (spec.dims() != 2 || spec.cyclic) {
    fail(Status::InvalidArgument, "images need a 2-dimensional noncyclic grid");
  }
  if (static_cast<long long>(x.size()) != spec.vertex_count()) {
    fail(Status::InvalidArgument, "signal length does not match the grid");
  }
  if (maxval < 1 || maxval > 65535) {
    fail(Status::InvalidArgument, "maxval out of range [1, 65535]");
  }
  PgmImage img;
  img.width = spec.lengths[0];
  img.height = spec.lengths[1];
  img.maxval = maxval;
  img.pixels.assign(static_cast<size_t>(img.width) * img.height, 0);
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      const double value = std::clamp(x[static_cast<size_t>(spec.index_of({c, r}))], 0.0,
                                      static_cast<double>(maxval));
      img.pixels[static_cast<size_t>(r) * img.width + c] =
          static_cast<int>(std::floor(value + 0.5));
    }
  }
  return img;
}

std::string export_dot(const Graph& g, const VertexMap& f, const DotOptions& options) {
  if (f.size() != g.vertex_count()) {
    fail(Status::InvalidArgument, "map size does not match the graph");
  }
  std::string out = "digraph translation {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (f.image(v) == kOmega) out += " [style=filled, fillcolor=black, fontcolor=white]";
    out += ";\n";
  }
  if (options.include_edges) {
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) {
      out += "  " + std::to_string(u) + " -> " + std::to_string(v) +
             " [dir=none, color=gray];\n";
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (f.image(v) != kOmega) {
      out += "  " + std::to_string(v) + " -> " + std::to_string(f.image(v)) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace gtrans
