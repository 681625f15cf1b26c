#ifndef GTRANS_TRANSLATION_HPP
#define GTRANS_TRANSLATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace gtrans {

struct SearchBudget;

// Image value for vertices swallowed by the black hole.
inline constexpr int kOmega = -1;

// Total map from vertices to vertices-or-omega. The domain is the set of
// vertices not mapped to omega. Immutable after construction.
class VertexMap {
public:
  VertexMap() = default;

  // images[v] is kOmega or a vertex in [0, images.size()).
  explicit VertexMap(std::vector<int> images);

  static VertexMap all_omega(int n) { return VertexMap(std::vector<int>(n, kOmega)); }

  int size() const { return static_cast<int>(images_.size()); }
  int image(int v) const;
  const std::vector<int>& images() const { return images_; }

  int domain_size() const { return domain_size_; }
  bool is_total() const { return domain_size_ == size(); }
  std::vector<int> domain() const;  // ascending vertices with image != omega

  bool operator==(const VertexMap& other) const { return images_ == other.images_; }
  // Canonical order: lexicographic on image sequences, omega before vertex 0.
  bool operator<(const VertexMap& other) const { return images_ < other.images_; }

private:
  std::vector<int> images_;
  int domain_size_ = 0;
};

enum class ViolationKind {
  None = 0,
  NotNeighbor,     // image of v1 is not adjacent to v1
  NotInjective,    // v1 and v2 share an image
  EdgeDropped,     // (v1,v2) is an edge but the images are not adjacent
  NonEdgeCreated,  // (v1,v2) is not an edge but the images are adjacent
};

struct Violation {
  ViolationKind kind = ViolationKind::None;
  int v1 = -1;
  int v2 = -1;  // -1 for single-vertex witnesses

  std::string describe() const;
};

// Candidate translation check: injective on the domain, every domain vertex
// maps to a neighbor, and adjacency is preserved in both directions between
// domain vertices. The witness reports the first violation found by scanning
// vertices in ascending order (per vertex: neighbor rule first, then
// injectivity and edge preservation against each smaller domain vertex in
// ascending order).
bool is_candidate(const Graph& g, const VertexMap& f, Violation* witness = nullptr);

// Total bijection that is also a candidate translation.
bool is_perfect(const Graph& g, const VertexMap& f);

// Shift by +/- e_dim (0-based dim). Wraps on cyclic grids; on noncyclic grids
// the departing boundary slice maps to omega.
VertexMap geometrical(const GridSpec& spec, int dim, int sign);

// If f equals a geometrical translation of the grid, returns its (dim, sign).
std::optional<std::pair<int, int>> matches_geometrical(const GridSpec& spec, const VertexMap& f);

// Applies `first`, then `then`; omega is absorbing. The result is a raw map:
// composing candidates does not generally yield a candidate.
VertexMap compose(const VertexMap& first, const VertexMap& then);

// Unique total shift determined by one assignment seed_v -> seed_image on a
// cyclic grid with all lengths >= 5. With check_by_propagation, additionally
// rebuilds the map by spreading the forced assignment neighbor to neighbor
// and verifies it matches the closed form.
VertexMap contaminate(const GridSpec& spec, int seed_v, int seed_image,
                      bool check_by_propagation = false);

struct OrbitReport {
  enum class Kind { Periodic, Absorbed };
  Kind kind = Kind::Absorbed;
  int period = 0;         // Periodic: smallest cycle length
  int entry_offset = 0;   // Periodic: index in visited where the cycle starts;
                          // always 0 when f is a candidate translation
  int steps_to_omega = 0; // Absorbed: applications of f until omega
  std::vector<int> visited;  // distinct vertices in visit order, starting at v
};

// Iterates f from start until omega or a repeated vertex. Works on arbitrary
// maps; a nonzero entry_offset can only arise from non-candidate input.
OrbitReport orbit(const VertexMap& f, int start);

// y[f(v)] = x[v] for domain vertices; vertices outside the image get `fill`.
// Requires f injective on its domain.
std::vector<double> apply_to_signal(const VertexMap& f, const std::vector<double>& x, double fill);

enum class Ternary { No, Yes, Undecided };

// Maximality per the pinned definition: f is graphical iff it is a candidate
// and, for every domain vertex v, no candidate g with g(v) = f(v) has a
// larger domain. Decided by exhaustive pinned search within the budget;
// returns Undecided (never a silent No) when the budget does not suffice.
Ternary is_graphical(const Graph& g, const VertexMap& f, const SearchBudget& budget);

enum class TranslationClass { NotCandidate, Candidate, Graphical, Perfect };

struct Classification {
  TranslationClass cls = TranslationClass::NotCandidate;
  int domain_size = 0;
  bool maximality_decided = true;  // false: Candidate whose maximality did not fit the budget
  Violation violation;             // set for NotCandidate
};

Classification classify(const Graph& g, const VertexMap& f, const SearchBudget& budget);

// Translation map file format: one line per vertex, "<v> -> <w>" or
// "<v> -> omega", ascending v covering every vertex exactly once.
VertexMap parse_map(const std::string& text);
std::string format_map(const VertexMap& f);

}  // namespace gtrans

#endif
