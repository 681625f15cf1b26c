#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "error.hpp"

namespace gtrans {

namespace {

constexpr long long kMaxVertices = 1 << 24;

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::InvalidArgument: return "invalid argument";
    case Status::ParseError: return "parse error";
    case Status::Precondition: return "precondition violated";
    case Status::BudgetExceeded: return "budget exceeded";
    case Status::NoConvergence: return "no convergence";
    case Status::IoError: return "i/o error";
  }
  return "unknown";
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) fail(Status::InvalidArgument, "vertex count must be non-negative");
  n_ = n;
  adj_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Status::InvalidArgument, "edge endpoint out of range: (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
    if (u == v)
      fail(Status::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      fail(Status::InvalidArgument, "duplicate edge (" + std::to_string(key.first) + ", " +
                                        std::to_string(key.second) + ")");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  edge_count_ = static_cast<long long>(seen.size());
}

bool Graph::are_adjacent(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    fail(Status::InvalidArgument, "vertex out of range in adjacency query");
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

long long GridSpec::vertex_count() const {
  long long count = 1;
  for (int len : lengths) count *= len;
  return count;
}

int GridSpec::index_of(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) != dims())
    fail(Status::InvalidArgument, "coordinate dimension mismatch");
  long long index = 0;
  for (int i = 0; i < dims(); ++i) {
    if (coords[i] < 0 || coords[i] >= lengths[i])
      fail(Status::InvalidArgument, "coordinate out of range at dimension " + std::to_string(i + 1));
    index = index * lengths[i] + coords[i];
  }
  return static_cast<int>(index);
}

std::vector<int> GridSpec::coords_of(int index) const {
  if (index < 0 || index >= vertex_count())
    fail(Status::InvalidArgument, "vertex index out of range");
  std::vector<int> coords(dims());
  for (int i = dims() - 1; i >= 0; --i) {
    coords[i] = index % lengths[i];
    index /= lengths[i];
  }
  return coords;
}

void validate_grid_spec(const GridSpec& spec) {
  if (spec.lengths.empty())
    fail(Status::InvalidArgument, "grid spec needs at least one dimension");
  long long count = 1;
  for (int len : spec.lengths) {
    if (len < 1) fail(Status::InvalidArgument, "grid dimension length must be >= 1");
    if (spec.cyclic && len < 3)
      fail(Status::InvalidArgument,
           "cyclic grid requires every dimension length >= 3 (length " + std::to_string(len) +
               " would create a self-loop or a doubled wrap edge)");
    count *= len;
    if (count > kMaxVertices) fail(Status::InvalidArgument, "grid is too large");
  }
}

Graph grid_graph(const GridSpec& spec) {
  validate_grid_spec(spec);
  const int n = static_cast<int>(spec.vertex_count());
  const int d = spec.dims();
  std::vector<std::pair<int, int>> edges;
  std::vector<int> coords(d, 0);
  for (int v = 0; v < n; ++v) {
    // Emit the +e_i edge for each dimension; the -e_i edges are the same set
    // seen from the other endpoint.
    for (int i = 0; i < d; ++i) {
      int len = spec.lengths[i];
      if (coords[i] + 1 < len) {
        std::vector<int> w = coords;
        w[i] += 1;
        edges.emplace_back(v, spec.index_of(w));
      } else if (spec.cyclic) {
        std::vector<int> w = coords;
        w[i] = 0;
        int u = spec.index_of(w);
        if (u < v) edges.emplace_back(u, v);
      }
    }
    // Row-major odometer step.
    for (int i = d - 1; i >= 0; --i) {
      if (++coords[i] < spec.lengths[i]) break;
      coords[i] = 0;
    }
  }
  return Graph(n, edges);
}

std::vector<int> slice(const GridSpec& spec, int value, int dim) {
  validate_grid_spec(spec);
  if (dim < 0 || dim >= spec.dims())
    fail(Status::InvalidArgument, "slice dimension out of range");
  if (value < 0 || value >= spec.lengths[dim])
    fail(Status::InvalidArgument, "slice coordinate out of range");
  std::vector<int> out;
  const int n = static_cast<int>(spec.vertex_count());
  for (int v = 0; v < n; ++v)
    if (spec.coords_of(v)[dim] == value) out.push_back(v);
  return out;
}

bool satisfies_cyclic_hypotheses(const GridSpec& spec) {
  if (!spec.cyclic || spec.lengths.empty()) return false;
  return std::all_of(spec.lengths.begin(), spec.lengths.end(), [](int len) { return len >= 5; });
}

bool satisfies_noncyclic_hypotheses(const GridSpec& spec) {
  if (spec.cyclic || spec.lengths.empty()) return false;
  const int d = spec.dims();
  if (spec.lengths[d - 1] < 3) return false;
  for (int i = 0; i < d - 1; ++i) {
    long long tail = 1;
    for (int k = i + 1; k < d; ++k) tail *= spec.lengths[k];
    if (spec.lengths[i] < 2 * tail + 2) return false;
  }
  return true;
}

namespace {

// Splits text into lines, keeping 1-based numbering for error messages.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream in(line);
  std::string extra;
  if (!(in >> a >> b)) return false;
  if (in >> extra) return false;
  return true;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = split_lines(text);
  size_t idx = 0;
  auto next_line = [&](std::string& out) {
    while (idx < lines.size()) {
      const std::string& line = lines[idx++];
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string line;
  if (!next_line(line)) fail(Status::ParseError, "line 1: missing \"<n> <m>\" header");
  size_t header_line = idx;
  long long n = 0, m = 0;
  if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
    fail(Status::ParseError, "line " + std::to_string(header_line) + ": malformed header, expected \"<n> <m>\"");
  if (n > kMaxVertices)
    fail(Status::ParseError, "line " + std::to_string(header_line) + ": vertex count too large");

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<long long, long long>> seen;
  for (long long e = 0; e < m; ++e) {
    if (!next_line(line))
      fail(Status::ParseError, "line " + std::to_string(lines.size() + 1) + ": expected " +
                                   std::to_string(m) + " edge lines, got " + std::to_string(e));
    std::string where = "line " + std::to_string(idx);
    long long u = 0, v = 0;
    if (!parse_two_ints(line, u, v))
      fail(Status::ParseError, where + ": malformed edge line, expected \"<u> <v>\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Status::ParseError, where + ": vertex out of range [0, " + std::to_string(n) + ")");
    if (u == v) fail(Status::ParseError, where + ": self-loop at vertex " + std::to_string(u));
    if (u > v) fail(Status::ParseError, where + ": edges must be written with u < v");
    if (!seen.insert({u, v}).second)
      fail(Status::ParseError, where + ": duplicate edge");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line(line))
    fail(Status::ParseError, "line " + std::to_string(idx) + ": trailing content after " +
                                 std::to_string(m) + " edges");
  return Graph(static_cast<int>(n), edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace gtrans
