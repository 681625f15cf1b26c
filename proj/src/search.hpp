#ifndef GTRANS_SEARCH_HPP
#define GTRANS_SEARCH_HPP

#include <functional>
#include <vector>

#include "graph.hpp"
#include "translation.hpp"

namespace gtrans {

struct SearchBudget {
  int max_vertices = 30;                 // hard guard against accidental blowups
  long long max_nodes = 100'000'000;     // accepted partial assignments; <= 0: unlimited
  double time_limit_seconds = 120.0;     // <= 0: unlimited
  int witness_cap = 64;                  // stored maximizers (cap applies per top-level branch
                                         // before the canonical merge, then globally)
  int jobs = 1;                          // worker threads over top-level branches
};

enum class SearchStatus { Complete, Exhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Complete;
  int best_domain = 0;                  // largest |domain| reached (or the seed, if larger)
  std::vector<VertexMap> witnesses;     // canonical order, at most witness_cap
  bool witnesses_capped = false;        // some maximizer was dropped by the cap
  long long nodes_expanded = 0;         // exact for jobs == 1; scheduling-dependent otherwise
};

// Largest-domain candidate translations by depth-first search: vertices are
// assigned in ascending index order to a neighbor or omega, pruning on
// injectivity, both directions of edge preservation against every assigned
// domain vertex, and the bound (committed omegas) > n - best_so_far.
// seed_lower_bound primes best_so_far; it must not exceed the true maximum,
// otherwise the outcome reports the seed with no witnesses. With status
// Complete the witnesses are all maximizers (up to the cap); on Exhausted the
// outcome holds the best found so far.
SearchOutcome max_domain_translations(const Graph& g, const SearchBudget& budget,
                                      int seed_lower_bound = 0);

enum class PinnedStatus { Complete, Exhausted, NoCandidate };

struct PinnedMax {
  PinnedStatus status = PinnedStatus::Complete;
  int best_domain = 0;
  long long nodes_expanded = 0;
};

// Maximum domain size over candidates with f(v) = w (the pair is assigned
// before the search starts). A non-adjacent pin admits no candidate at all
// and reports NoCandidate.
PinnedMax max_domain_with_pin(const Graph& g, int v, int w, const SearchBudget& budget);

// All perfect translations (total bijective candidates), found by the same
// search restricted to total assignments.
SearchOutcome perfect_translations(const Graph& g, const SearchBudget& budget);

// Grid-aware variant: on cyclic grids with all lengths >= 5 the single seed
// assignment of vertex 0 forces the whole map, so only the degree-of-0 many
// shifts need checking; other specs fall back to the general search.
SearchOutcome perfect_translations(const GridSpec& spec, const SearchBudget& budget);

// Visits every candidate translation exactly once, in lexicographic order of
// the image sequence (omega before vertex 0). The visitor returns false to
// stop early. Returns Exhausted if a budget limit cut the enumeration short,
// Complete otherwise (including visitor-requested stops).
SearchStatus enumerate_candidates(const Graph& g, const SearchBudget& budget,
                                  const std::function<bool(const VertexMap&)>& visit);

// Domain size of the geometrical translation along the first dimension:
// (lengths[0] - 1) * prod(lengths[1:]). Admissible seed for
// max_domain_translations on noncyclic grids; rejects cyclic specs.
long long grid_lower_bound(const GridSpec& spec);

}  // namespace gtrans

#endif
