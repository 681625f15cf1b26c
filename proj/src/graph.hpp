#ifndef GTRANS_GRAPH_HPP
#define GTRANS_GRAPH_HPP

#include <string>
#include <vector>

namespace gtrans {

// Simple symmetric graph over vertices 0..n-1. Neighbor lists are sorted
// ascending with no duplicates and no self loops; graphs are immutable after
// construction and safe to share across threads.
class Graph {
public:
  Graph() = default;

  // Builds from an undirected edge list. Rejects self loops, duplicate edges
  // (in either orientation) and out-of-range endpoints.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool are_adjacent(int u, int v) const;

  // All edges as (u, v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
  int n_ = 0;
  long long edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Grid graph parameters: per-dimension lengths plus the cyclic flag.
// Vertices are identified with coordinate vectors through the row-major
// encoding index(v) = sum_i v[i] * prod_{k>i} lengths[k], i.e. the last
// dimension varies fastest. All coordinate/dimension arguments are 0-based.
struct GridSpec {
  std::vector<int> lengths;
  bool cyclic = false;

  int dims() const { return static_cast<int>(lengths.size()); }
  long long vertex_count() const;

  int index_of(const std::vector<int>& coords) const;
  std::vector<int> coords_of(int index) const;

  bool operator==(const GridSpec& other) const = default;
};

// Validates lengths (>= 1 each, product within the supported vertex range);
// cyclic specs additionally require every length >= 3, otherwise the wrap
// edges would collapse into self loops or parallel edges.
void validate_grid_spec(const GridSpec& spec);

Graph grid_graph(const GridSpec& spec);

// Vertices whose coordinate at `dim` equals `value`, ascending.
std::vector<int> slice(const GridSpec& spec, int value, int dim);

// Hypothesis predicates for the grid theorems. Generators deliberately accept
// smaller grids; these report whether a spec qualifies for the corresponding
// uniqueness results.
bool satisfies_cyclic_hypotheses(const GridSpec& spec);     // cyclic, all lengths >= 5
bool satisfies_noncyclic_hypotheses(const GridSpec& spec);  // noncyclic, lengths[i] >= 2*prod(tail)+2, last >= 3

// Edge-list text format: first line "<n> <m>", then m lines "<u> <v>" with
// u < v. Parse errors mention the offending line number.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

}  // namespace gtrans

#endif
