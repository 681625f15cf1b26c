#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "search.hpp"
#include "translation.hpp"

using namespace gtrans;

namespace {

template <typename Fn>
Status status_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.status();
  }
  return Status::Ok;
}

std::vector<std::vector<int>> sorted_images(const std::vector<VertexMap>& witnesses) {
  std::vector<std::vector<int>> out;
  out.reserve(witnesses.size());
  for (const VertexMap& f : witnesses) out.push_back(f.images());
  std::sort(out.begin(), out.end());
  return out;
}

bool connected(const Graph& g) {
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

// Fixed-seed Erdos-Renyi graphs, kept only when connected.
std::vector<Graph> random_corpus() {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Graph> out;
  for (int n = 5; n <= 8; ++n) {
    int kept = 0;
    while (kept < 2) {
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng) < 0.35) edges.emplace_back(u, v);
      Graph g(n, edges);
      if (!connected(g)) continue;
      out.push_back(std::move(g));
      ++kept;
    }
  }
  return out;
}

struct FrozenCount {
  GridSpec spec;
  long long candidates;
  int best;
  int maximizers;
};

}  // namespace

TEST_CASE("search agrees with exhaustive enumeration on paths, cycles, and small grids") {
  // expected values locked in from the reference scan; the scan itself runs
  // again here so a regression in either side surfaces as a mismatch
  const std::vector<FrozenCount> corpus = {
      {GridSpec{{2}, false}, 4, 2, 1},       {GridSpec{{3}, false}, 9, 2, 4},
      {GridSpec{{4}, false}, 18, 3, 2},      {GridSpec{{5}, false}, 42, 4, 3},
      {GridSpec{{6}, false}, 97, 5, 2},      {GridSpec{{7}, false}, 217, 6, 2},
      {GridSpec{{8}, false}, 491, 7, 2},     {GridSpec{{3}, true}, 18, 3, 2},
      {GridSpec{{4}, true}, 49, 4, 4},       {GridSpec{{5}, true}, 68, 5, 2},
      {GridSpec{{6}, true}, 154, 6, 2},      {GridSpec{{7}, true}, 339, 7, 2},
      {GridSpec{{8}, true}, 739, 8, 2},      {GridSpec{{2, 2}, false}, 49, 4, 4},
      {GridSpec{{2, 3}, false}, 212, 6, 1},  {GridSpec{{2, 4}, false}, 1227, 8, 1},
  };

  SearchBudget budget;
  for (const FrozenCount& entry : corpus) {
    CAPTURE(entry.spec.lengths[0]);
    CAPTURE(entry.spec.cyclic);
    Graph g = grid_graph(entry.spec);
    oracle::ScanReport truth = oracle::scan(g);
    CHECK(truth.candidates == entry.candidates);
    CHECK(truth.best == entry.best);
    CHECK(static_cast<int>(truth.witnesses.size()) == entry.maximizers);

    SearchOutcome found = max_domain_translations(g, budget);
    CHECK(found.status == SearchStatus::Complete);
    CHECK(found.best_domain == truth.best);
    CHECK_FALSE(found.witnesses_capped);
    CHECK(sorted_images(found.witnesses) == truth.witnesses);
    for (const VertexMap& f : found.witnesses) CHECK(is_candidate(g, f));
  }
}

TEST_CASE("search agrees with exhaustive enumeration on the 3x3 grid") {
  Graph g = grid_graph(GridSpec{{3, 3}, false});
  oracle::ScanReport truth = oracle::scan(g);
  CHECK(truth.candidates == 1907);
  CHECK(truth.best == 8);
  CHECK(truth.witnesses.size() == 2);
  // the two maximizers walk the border, one per direction
  CHECK(truth.witnesses[0] == std::vector<int>{1, 2, 5, 0, -1, 8, 3, 6, 7});
  CHECK(truth.witnesses[1] == std::vector<int>{3, 0, 1, 6, -1, 2, 7, 8, 5});

  SearchOutcome found = max_domain_translations(g, SearchBudget{});
  CHECK(found.status == SearchStatus::Complete);
  CHECK(found.best_domain == 8);
  CHECK(sorted_images(found.witnesses) == truth.witnesses);

  // f_omega and the two border walks; every other candidate extends
  CHECK(oracle::count_graphical(g) == 3);
}

TEST_CASE("search agrees with exhaustive enumeration on random connected graphs") {
  SearchBudget budget;
  for (const Graph& g : random_corpus()) {
    CAPTURE(g.vertex_count());
    CAPTURE(g.edge_count());
    oracle::ScanReport truth = oracle::scan(g);
    SearchOutcome found = max_domain_translations(g, budget);
    CHECK(found.status == SearchStatus::Complete);
    CHECK(found.best_domain == truth.best);
    CHECK(sorted_images(found.witnesses) == truth.witnesses);
  }
}

TEST_CASE("enumerate_candidates visits every candidate exactly once") {
  const std::vector<GridSpec> specs = {
      GridSpec{{5}, false}, GridSpec{{6}, true}, GridSpec{{2, 3}, false}};
  SearchBudget budget;
  for (const GridSpec& spec : specs) {
    Graph g = grid_graph(spec);
    const oracle::AdjacencySets sets(g);
    long long visited = 0;
    std::vector<VertexMap> first_three;
    SearchStatus status = enumerate_candidates(g, budget, [&](const VertexMap& f) {
      CHECK(oracle::is_candidate(sets, f.images()));
      if (first_three.size() < 3) first_three.push_back(f);
      ++visited;
      return true;
    });
    CHECK(status == SearchStatus::Complete);
    CHECK(visited == oracle::scan(g).candidates);
    // lexicographic image order puts the all-omega map first
    REQUIRE(first_three.size() == 3);
    CHECK(first_three[0] == VertexMap::all_omega(g.vertex_count()));
    CHECK(first_three[0].images() < first_three[1].images());
    CHECK(first_three[1].images() < first_three[2].images());
  }

  // the visitor can stop the walk without an Exhausted verdict
  Graph g = grid_graph(GridSpec{{5}, false});
  long long seen = 0;
  SearchStatus status = enumerate_candidates(g, budget, [&](const VertexMap&) {
    ++seen;
    return seen < 5;
  });
  CHECK(status == SearchStatus::Complete);
  CHECK(seen == 5);
}

TEST_CASE("pinned search matches the exhaustive pinned maximum") {
  Graph g3 = grid_graph(GridSpec{{3, 3}, false});
  SearchBudget budget;

  // fixture with c=7: every pin extends to a c=8 candidate, so none is maximal
  VertexMap fixture = parse_map(
      "0 -> 1\n1 -> 2\n2 -> 5\n3 -> 0\n4 -> omega\n5 -> 8\n6 -> 3\n7 -> omega\n8 -> 7\n");
  for (int v : fixture.domain()) {
    PinnedMax pinned = max_domain_with_pin(g3, v, fixture.image(v), budget);
    CHECK(pinned.status == PinnedStatus::Complete);
    CHECK(pinned.best_domain == 8);
    CHECK(oracle::pinned_max(g3, v, fixture.image(v)) == 8);
  }

  // geometrical +e1: border pins extend to the border walk, interior pins max at 6
  VertexMap e1 = geometrical(GridSpec{{3, 3}, false}, 0, +1);
  for (int v : e1.domain()) {
    PinnedMax pinned = max_domain_with_pin(g3, v, e1.image(v), budget);
    CHECK(pinned.status == PinnedStatus::Complete);
    const bool interior_pin = v == 1 || v == 4;
    CHECK(pinned.best_domain == (interior_pin ? 6 : 8));
    CHECK(oracle::pinned_max(g3, v, e1.image(v)) == pinned.best_domain);
  }

  // a non-adjacent pin admits no candidate at all
  PinnedMax none = max_domain_with_pin(g3, 0, 8, budget);
  CHECK(none.status == PinnedStatus::NoCandidate);
  CHECK(oracle::pinned_max(g3, 0, 8) == -1);
}

TEST_CASE("perfect search finds exactly the shifts on proved cyclic grids") {
  SearchBudget budget;
  GridSpec torus{{5, 5}, true};
  Graph g = grid_graph(torus);

  std::vector<std::vector<int>> shifts;
  for (int dim = 0; dim < 2; ++dim)
    for (int sign : {+1, -1}) shifts.push_back(geometrical(torus, dim, sign).images());
  std::sort(shifts.begin(), shifts.end());

  // grid-aware path (seed forcing) and general search must agree exactly
  SearchOutcome fast = perfect_translations(torus, budget);
  CHECK(fast.status == SearchStatus::Complete);
  CHECK(fast.best_domain == 25);
  CHECK(sorted_images(fast.witnesses) == shifts);

  SearchOutcome general = perfect_translations(g, budget);
  CHECK(general.status == SearchStatus::Complete);
  CHECK(sorted_images(general.witnesses) == shifts);

  // the full branch-and-bound maximum confirms nothing beats the shifts
  SearchOutcome best = max_domain_translations(g, budget);
  CHECK(best.status == SearchStatus::Complete);
  CHECK(best.best_domain == 25);
  CHECK(sorted_images(best.witnesses) == shifts);
}

TEST_CASE("perfect search on further graphs") {
  SearchBudget budget;

  // no perfect translation on the noncyclic 6x5 grid
  SearchOutcome none = perfect_translations(grid_graph(GridSpec{{6, 5}, false}), budget);
  CHECK(none.status == SearchStatus::Complete);
  CHECK(none.witnesses.empty());

  // cyclic 6x5: the four shifts
  SearchOutcome torus = perfect_translations(GridSpec{{6, 5}, true}, budget);
  CHECK(torus.status == SearchStatus::Complete);
  CHECK(torus.witnesses.size() == 4);
  CHECK(torus.best_domain == 30);

  // cycle C5: the two rotations, cross-checked against the scan
  Graph c5 = grid_graph(GridSpec{{5}, true});
  SearchOutcome cycle = perfect_translations(c5, budget);
  CHECK(cycle.status == SearchStatus::Complete);
  CHECK(cycle.witnesses.size() == 2);
  CHECK(oracle::scan(c5).perfect == 2);

  // small cyclic grid below the forcing threshold falls back to the search
  SearchOutcome tiny = perfect_translations(GridSpec{{3, 3}, true}, budget);
  SearchOutcome tiny_general = perfect_translations(grid_graph(GridSpec{{3, 3}, true}), budget);
  CHECK(tiny.status == SearchStatus::Complete);
  CHECK(sorted_images(tiny.witnesses) == sorted_images(tiny_general.witnesses));

  // a path has none: the end vertex cannot keep a bijective image chain
  SearchOutcome path = perfect_translations(grid_graph(GridSpec{{4}, false}), budget);
  CHECK(path.witnesses.empty());
  CHECK(oracle::scan(grid_graph(GridSpec{{4}, false})).perfect == 0);
}

TEST_CASE("seeding primes the bound without changing the answer") {
  Graph g = grid_graph(GridSpec{{5, 5}, false});
  SearchBudget budget;

  SearchOutcome plain = max_domain_translations(g, budget);
  SearchOutcome seeded = max_domain_translations(g, budget, 20);
  CHECK(plain.best_domain == 20);
  CHECK(seeded.best_domain == 20);
  CHECK(sorted_images(plain.witnesses) == sorted_images(seeded.witnesses));
  CHECK(seeded.nodes_expanded <= plain.nodes_expanded);

  // a seed above the true maximum (8 here) reports the seed and no witnesses
  SearchOutcome over = max_domain_translations(grid_graph(GridSpec{{3, 3}, false}),
                                               budget, 9);
  CHECK(over.status == SearchStatus::Complete);
  CHECK(over.best_domain == 9);
  CHECK(over.witnesses.empty());

  // seeds outside [0, n] are rejected outright
  CHECK_THROWS_AS(max_domain_translations(grid_graph(GridSpec{{3, 3}, false}), budget, 10),
                  Error);
}

TEST_CASE("budget limits are honored and reported") {
  Graph g = grid_graph(GridSpec{{5, 5}, false});

  SearchBudget starved;
  starved.max_nodes = 10;
  SearchOutcome out = max_domain_translations(g, starved);
  CHECK(out.status == SearchStatus::Exhausted);

  SearchBudget capped;
  capped.witness_cap = 5;
  SearchOutcome cap_out = max_domain_translations(g, capped);
  CHECK(cap_out.status == SearchStatus::Complete);
  CHECK(cap_out.best_domain == 20);
  CHECK(cap_out.witnesses_capped);
  CHECK(static_cast<int>(cap_out.witnesses.size()) <= 5);
  for (const VertexMap& f : cap_out.witnesses) {
    CHECK(f.domain_size() == 20);
    CHECK(is_candidate(g, f));
  }

  SearchBudget small_graphs_only;
  small_graphs_only.max_vertices = 10;
  CHECK(status_of([&] { max_domain_translations(g, small_graphs_only); }) ==
        Status::BudgetExceeded);
}

TEST_CASE("parallel search returns the sequential answer") {
  for (const GridSpec& spec :
       {GridSpec{{5, 5}, false}, GridSpec{{3, 3}, false}, GridSpec{{5, 5}, true}}) {
    Graph g = grid_graph(spec);
    SearchBudget sequential;
    SearchBudget parallel;
    parallel.jobs = 4;
    SearchOutcome a = max_domain_translations(g, sequential);
    SearchOutcome b = max_domain_translations(g, parallel);
    CHECK(a.status == SearchStatus::Complete);
    CHECK(b.status == SearchStatus::Complete);
    CHECK(a.best_domain == b.best_domain);
    CHECK(sorted_images(a.witnesses) == sorted_images(b.witnesses));
  }
}

TEST_CASE("grid_lower_bound is the first-dimension geometrical domain") {
  CHECK(grid_lower_bound(GridSpec{{8, 3}, false}) == 21);
  CHECK(grid_lower_bound(GridSpec{{5, 5}, false}) == 20);
  CHECK(grid_lower_bound(GridSpec{{6, 5}, false}) == 25);
  CHECK(grid_lower_bound(GridSpec{{2, 2}, false}) == 2);
  CHECK(grid_lower_bound(GridSpec{{4}, false}) == 3);
  CHECK_THROWS_AS(grid_lower_bound(GridSpec{{5, 5}, true}), Error);

  // the bound is admissible: a candidate of that size exists
  GridSpec spec{{4, 3}, false};
  VertexMap e1 = geometrical(spec, 0, +1);
  CHECK(e1.domain_size() == grid_lower_bound(spec));
  CHECK(is_candidate(grid_graph(spec), e1));
}

TEST_CASE("larger frozen searches keep their known answers") {
  SearchBudget budget;
  budget.jobs = 4;

  // 4x4: the maximum is 13, reached by 8 maximizers
  Graph g44 = grid_graph(GridSpec{{4, 4}, false});
  SearchOutcome out44 = max_domain_translations(g44, budget, grid_lower_bound(GridSpec{{4, 4}, false}));
  CHECK(out44.status == SearchStatus::Complete);
  CHECK(out44.best_domain == 13);
  CHECK(out44.witnesses.size() == 8);
  VertexMap fixture44 = parse_map(
      "0 -> omega\n1 -> 2\n2 -> 3\n3 -> 7\n4 -> 0\n5 -> 1\n6 -> omega\n7 -> 11\n"
      "8 -> 4\n9 -> 5\n10 -> omega\n11 -> 15\n12 -> 8\n13 -> 9\n14 -> 13\n15 -> 14\n");
  auto images44 = sorted_images(out44.witnesses);
  CHECK(std::binary_search(images44.begin(), images44.end(), fixture44.images()));

  // 5x5: the maximum is 20 with 28 maximizers, the four geometrical
  // translations among them
  Graph g55 = grid_graph(GridSpec{{5, 5}, false});
  SearchOutcome out55 = max_domain_translations(g55, budget, 20);
  CHECK(out55.status == SearchStatus::Complete);
  CHECK(out55.best_domain == 20);
  CHECK(out55.witnesses.size() == 28);
  auto images55 = sorted_images(out55.witnesses);
  GridSpec spec55{{5, 5}, false};
  for (int dim = 0; dim < 2; ++dim)
    for (int sign : {+1, -1})
      CHECK(std::binary_search(images55.begin(), images55.end(),
                               geometrical(spec55, dim, sign).images()));

  // 8x3: exactly the two first-dimension shifts
  GridSpec spec83{{8, 3}, false};
  Graph g83 = grid_graph(spec83);
  SearchOutcome out83 =
      max_domain_translations(g83, budget, static_cast<int>(grid_lower_bound(spec83)));
  CHECK(out83.status == SearchStatus::Complete);
  CHECK(out83.best_domain == 21);
  std::vector<std::vector<int>> expected83 = {geometrical(spec83, 0, +1).images(),
                                              geometrical(spec83, 0, -1).images()};
  std::sort(expected83.begin(), expected83.end());
  CHECK(sorted_images(out83.witnesses) == expected83);
}
