#ifndef GTRANS_SIGNAL_IO_HPP
#define GTRANS_SIGNAL_IO_HPP

#include <string>
#include <vector>

#include "graph.hpp"
#include "translation.hpp"

namespace gtrans {

// One real per line, expected_size lines. Written text re-reads to the same
// doubles (17 significant digits).
std::vector<double> read_signal_csv(const std::string& text, int expected_size);
std::string write_signal_csv(const std::vector<double>& x);

// Plain-text PGM (magic P2). pixels are row-major: pixels[r * width + c].
struct PgmImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<int> pixels;

  int pixel(int r, int c) const { return pixels[static_cast<size_t>(r) * width + c]; }
  bool operator==(const PgmImage& other) const = default;
};

PgmImage read_pgm(const std::string& text);
std::string write_pgm(const PgmImage& img);

// An image lives on the noncyclic (width, height) grid: pixel (r, c) is grid
// coordinate (c, r), so translating by +e1 shifts the picture one column to
// the right.
struct GridSignal {
  GridSpec spec;
  std::vector<double> values;
};

GridSignal image_to_signal(const PgmImage& img);

// Clamps to [0, maxval] and rounds half-up.
PgmImage signal_to_image(const GridSpec& spec, const std::vector<double>& x, int maxval);

struct DotOptions {
  bool include_edges = false;  // Figure-style rendering omits the graph edges
};

// DOT digraph with one arrow per domain vertex; vertices mapped to omega are
// filled black. Emission order is sorted so output is byte-stable.
std::string export_dot(const Graph& g, const VertexMap& f, const DotOptions& options = {});

}  // namespace gtrans

#endif
