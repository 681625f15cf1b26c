#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "graphtrans.h"

namespace {

struct GraphGuard {
  gt_graph* p = nullptr;
  ~GraphGuard() { gt_graph_destroy(p); }
};

struct MapGuard {
  gt_map* p = nullptr;
  ~MapGuard() { gt_map_destroy(p); }
};

struct ResultGuard {
  gt_search_result* p = nullptr;
  ~ResultGuard() { gt_search_result_destroy(p); }
};

struct BasisGuard {
  gt_basis* p = nullptr;
  ~BasisGuard() { gt_basis_destroy(p); }
};

struct ImageGuard {
  gt_image* p = nullptr;
  ~ImageGuard() { gt_image_destroy(p); }
};

std::string take_string(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  gt_string_free(s);
  return out;
}

int image_of(const gt_map* f, int v) {
  int out = -2;
  REQUIRE(gt_map_image(f, v, &out) == GT_OK);
  return out;
}

double lambda_of(const gt_basis* b, int index) {
  double out = 0.0;
  REQUIRE(gt_basis_lambda(b, index, &out) == GT_OK);
  return out;
}

int pixel_of(const gt_image* img, int r, int c) {
  int out = -2;
  REQUIRE(gt_image_pixel(img, r, c, &out) == GT_OK);
  return out;
}

}  // namespace

TEST_CASE("status names and error text") {
  CHECK(std::strcmp(gt_status_name(GT_OK), "ok") == 0);
  CHECK(std::strcmp(gt_status_name(GT_PARSE_ERROR), "parse error") == 0);
  CHECK(std::strcmp(gt_status_name(GT_BUDGET_EXCEEDED), "budget exceeded") == 0);
  CHECK(gt_last_error() != nullptr);

  GraphGuard g;
  CHECK(gt_graph_parse("not a graph", &g.p) == GT_PARSE_ERROR);
  CHECK(std::string(gt_last_error()).find("line 1") != std::string::npos);

  CHECK(gt_graph_parse(nullptr, &g.p) == GT_INVALID_ARGUMENT);
  CHECK(gt_graph_create(2, nullptr, 1, &g.p) == GT_INVALID_ARGUMENT);
  CHECK(gt_graph_format(nullptr, nullptr) == GT_INVALID_ARGUMENT);
  gt_string_free(nullptr);
}

TEST_CASE("graph construction and accessors through the C surface") {
  const int endpoints[] = {0, 1, 1, 2, 2, 3, 3, 0};
  GraphGuard g;
  REQUIRE(gt_graph_create(4, endpoints, 4, &g.p) == GT_OK);
  CHECK(gt_graph_vertex_count(g.p) == 4);
  CHECK(gt_graph_edge_count(g.p) == 4);
  CHECK(gt_graph_degree(g.p, 0) == 2);
  CHECK(gt_graph_are_adjacent(g.p, 0, 1) == 1);
  CHECK(gt_graph_are_adjacent(g.p, 0, 2) == 0);
  CHECK(gt_graph_are_adjacent(g.p, 0, 9) == -1);
  CHECK(gt_graph_vertex_count(nullptr) == -1);
  CHECK(gt_graph_degree(g.p, 7) == -1);

  GraphGuard grid;
  const int lengths[] = {3, 3};
  REQUIRE(gt_graph_grid(lengths, 2, 0, &grid.p) == GT_OK);
  CHECK(gt_graph_vertex_count(grid.p) == 9);
  CHECK(gt_graph_edge_count(grid.p) == 12);

  char* formatted = nullptr;
  REQUIRE(gt_graph_format(grid.p, &formatted) == GT_OK);
  std::string text = take_string(formatted);
  GraphGuard back;
  REQUIRE(gt_graph_parse(text.c_str(), &back.p) == GT_OK);
  CHECK(gt_graph_edge_count(back.p) == 12);

  CHECK(gt_grid_vertex_count(lengths, 2) == 9);
  CHECK(gt_grid_vertex_count(nullptr, 2) == -1);
  CHECK(gt_grid_satisfies_cyclic_hypotheses(lengths, 2, 1) == 0);
  const int big[] = {5, 5};
  CHECK(gt_grid_satisfies_cyclic_hypotheses(big, 2, 1) == 1);
  const int tall[] = {8, 3};
  CHECK(gt_grid_satisfies_noncyclic_hypotheses(tall, 2, 0) == 1);
  long long bound = 0;
  REQUIRE(gt_grid_domain_lower_bound(tall, 2, &bound) == GT_OK);
  CHECK(bound == 21);
}

TEST_CASE("map lifecycle, composition, and geometry through the C surface") {
  const int images[] = {1, 2, 5, 0, GT_OMEGA, 8, 3, GT_OMEGA, 7};
  MapGuard f;
  REQUIRE(gt_map_create(images, 9, &f.p) == GT_OK);
  CHECK(gt_map_size(f.p) == 9);
  CHECK(gt_map_domain_size(f.p) == 7);
  CHECK(gt_map_is_total(f.p) == 0);
  CHECK(image_of(f.p, 4) == GT_OMEGA);
  CHECK(image_of(f.p, 8) == 7);
  int unused = 0;
  CHECK(gt_map_image(f.p, 99, &unused) == GT_INVALID_ARGUMENT);

  char* formatted = nullptr;
  REQUIRE(gt_map_format(f.p, &formatted) == GT_OK);
  std::string text = take_string(formatted);
  MapGuard parsed;
  REQUIRE(gt_map_parse(text.c_str(), &parsed.p) == GT_OK);
  CHECK(gt_map_equals(f.p, parsed.p) == 1);

  const int lengths[] = {3, 3};
  MapGuard e1;
  REQUIRE(gt_map_geometrical(lengths, 2, 0, 0, +1, &e1.p) == GT_OK);
  CHECK(gt_map_domain_size(e1.p) == 6);
  CHECK(image_of(e1.p, 0) == 3);
  CHECK(image_of(e1.p, 6) == GT_OMEGA);
  int matched = 0, dim = -1, sign = 0;
  REQUIRE(gt_map_matches_geometrical(lengths, 2, 0, e1.p, &matched, &dim, &sign) == GT_OK);
  CHECK(matched == 1);
  CHECK(dim == 0);
  CHECK(sign == +1);
  REQUIRE(gt_map_matches_geometrical(lengths, 2, 0, f.p, &matched, &dim, &sign) == GT_OK);
  CHECK(matched == 0);

  MapGuard omega;
  REQUIRE(gt_map_all_omega(9, &omega.p) == GT_OK);
  CHECK(gt_map_domain_size(omega.p) == 0);
  MapGuard composed;
  REQUIRE(gt_map_compose(e1.p, omega.p, &composed.p) == GT_OK);
  CHECK(gt_map_domain_size(composed.p) == 0);

  const int torus[] = {5, 5};
  MapGuard shift;
  REQUIRE(gt_map_contaminate(torus, 2, 1, 0, 5, &shift.p) == GT_OK);
  CHECK(gt_map_is_total(shift.p) == 1);
  REQUIRE(gt_map_matches_geometrical(torus, 2, 1, shift.p, &matched, &dim, &sign) == GT_OK);
  CHECK(matched == 1);
  CHECK(dim == 0);
  CHECK(sign == +1);

  gt_orbit orbit = {};
  REQUIRE(gt_map_orbit(f.p, 6, &orbit) == GT_OK);
  CHECK(orbit.periodic == 0);
  CHECK(orbit.steps_to_omega == 8);
  REQUIRE(orbit.visited_count == 8);
  CHECK(orbit.visited[0] == 6);
  CHECK(orbit.visited[7] == 7);
  gt_orbit_free(&orbit);

  gt_orbit cycle = {};
  REQUIRE(gt_map_orbit(shift.p, 0, &cycle) == GT_OK);
  CHECK(cycle.periodic == 1);
  CHECK(cycle.period == 5);
  CHECK(cycle.entry_offset == 0);
  gt_orbit_free(&cycle);

  const double x[] = {0, 1.5, 3, 4.5, 6, 7.5, 9, 10.5, 12};
  double y[9] = {};
  REQUIRE(gt_map_apply_signal(f.p, x, 9, -1.0, y) == GT_OK);
  CHECK(y[0] == 4.5);
  CHECK(y[4] == -1.0);
  CHECK(y[7] == 12.0);
}

TEST_CASE("verification and classification through the C surface") {
  GraphGuard g;
  const int lengths[] = {3, 3};
  REQUIRE(gt_graph_grid(lengths, 2, 0, &g.p) == GT_OK);

  const int images[] = {1, 2, 5, 0, GT_OMEGA, 8, 3, GT_OMEGA, 7};
  MapGuard f;
  REQUIRE(gt_map_create(images, 9, &f.p) == GT_OK);

  int is_candidate = 0;
  char* no_violation = nullptr;
  REQUIRE(gt_check_candidate(g.p, f.p, &is_candidate, &no_violation) == GT_OK);
  CHECK(is_candidate == 1);
  CHECK(no_violation == nullptr);

  const int broken[] = {4, GT_OMEGA, GT_OMEGA, GT_OMEGA, GT_OMEGA,
                        GT_OMEGA, GT_OMEGA, GT_OMEGA, GT_OMEGA};
  MapGuard bad;
  REQUIRE(gt_map_create(broken, 9, &bad.p) == GT_OK);
  char* violation = nullptr;
  REQUIRE(gt_check_candidate(g.p, bad.p, &is_candidate, &violation) == GT_OK);
  CHECK(is_candidate == 0);
  CHECK(take_string(violation).find("neighbor") != std::string::npos);

  gt_search_budget budget;
  gt_search_budget_init(&budget);
  CHECK(budget.max_vertices == 30);
  CHECK(budget.max_nodes == 100000000);
  CHECK(budget.time_limit_seconds == doctest::Approx(120.0));
  CHECK(budget.witness_cap == 64);
  CHECK(budget.jobs == 1);

  gt_ternary verdict = GT_UNDECIDED;
  REQUIRE(gt_check_graphical(g.p, f.p, &budget, &verdict) == GT_OK);
  CHECK(verdict == GT_NO);

  const int full[] = {1, 2, 5, 0, GT_OMEGA, 8, 3, 6, 7};
  MapGuard rotation;
  REQUIRE(gt_map_create(full, 9, &rotation.p) == GT_OK);
  REQUIRE(gt_check_graphical(g.p, rotation.p, &budget, &verdict) == GT_OK);
  CHECK(verdict == GT_YES);

  gt_search_budget starved = budget;
  starved.max_nodes = 1;
  REQUIRE(gt_check_graphical(g.p, f.p, &starved, &verdict) == GT_OK);
  CHECK(verdict == GT_UNDECIDED);

  gt_class cls = GT_CLASS_NOT_CANDIDATE;
  int domain_size = 0;
  int decided = 0;
  char* classify_violation = nullptr;
  REQUIRE(gt_classify(g.p, f.p, &budget, &cls, &domain_size, &decided, &classify_violation) ==
          GT_OK);
  CHECK(cls == GT_CLASS_CANDIDATE);
  CHECK(domain_size == 7);
  CHECK(decided == 1);
  CHECK(classify_violation == nullptr);

  int is_perfect = -1;
  REQUIRE(gt_check_perfect(g.p, f.p, &is_perfect) == GT_OK);
  CHECK(is_perfect == 0);
}

TEST_CASE("search through the C surface") {
  GraphGuard g;
  const int lengths[] = {3, 3};
  REQUIRE(gt_graph_grid(lengths, 2, 0, &g.p) == GT_OK);

  gt_search_budget budget;
  gt_search_budget_init(&budget);

  ResultGuard result;
  REQUIRE(gt_search_max(g.p, &budget, 0, &result.p) == GT_OK);
  CHECK(gt_search_result_complete(result.p) == 1);
  CHECK(gt_search_result_best_domain(result.p) == 8);
  REQUIRE(gt_search_result_witness_count(result.p) == 2);
  CHECK(gt_search_result_witnesses_capped(result.p) == 0);
  CHECK(gt_search_result_nodes(result.p) > 0);

  MapGuard witness;
  REQUIRE(gt_search_result_witness(result.p, 0, &witness.p) == GT_OK);
  CHECK(gt_map_domain_size(witness.p) == 8);
  MapGuard out_of_range;
  CHECK(gt_search_result_witness(result.p, 2, &out_of_range.p) == GT_INVALID_ARGUMENT);

  int status = -1, best = 0;
  long long nodes = 0;
  REQUIRE(gt_search_pinned_max(g.p, 0, 1, &budget, &status, &best, &nodes) == GT_OK);
  CHECK(status == 0);
  CHECK(best == 8);
  REQUIRE(gt_search_pinned_max(g.p, 0, 8, &budget, &status, &best, &nodes) == GT_OK);
  CHECK(status == 2);

  const int torus[] = {5, 5};
  ResultGuard perfect;
  REQUIRE(gt_grid_search_perfect(torus, 2, 1, &budget, &perfect.p) == GT_OK);
  CHECK(gt_search_result_complete(perfect.p) == 1);
  CHECK(gt_search_result_witness_count(perfect.p) == 4);
  CHECK(gt_search_result_best_domain(perfect.p) == 25);

  GraphGuard path;
  const int segment[] = {4};
  REQUIRE(gt_graph_grid(segment, 1, 0, &path.p) == GT_OK);
  ResultGuard none;
  REQUIRE(gt_search_perfect(path.p, &budget, &none.p) == GT_OK);
  CHECK(gt_search_result_witness_count(none.p) == 0);

  gt_search_budget starved = budget;
  starved.max_nodes = 5;
  ResultGuard partial;
  REQUIRE(gt_search_max(g.p, &starved, 0, &partial.p) == GT_OK);
  CHECK(gt_search_result_complete(partial.p) == 0);

  gt_search_budget small = budget;
  small.max_vertices = 4;
  ResultGuard refused;
  CHECK(gt_search_max(g.p, &small, 0, &refused.p) == GT_BUDGET_EXCEEDED);
}

TEST_CASE("spectral path through the C surface") {
  GraphGuard g;
  const int lengths[] = {5};
  REQUIRE(gt_graph_grid(lengths, 1, 0, &g.p) == GT_OK);

  BasisGuard basis;
  REQUIRE(gt_basis_create(g.p, 0.0, 0, &basis.p) == GT_OK);
  REQUIRE(gt_basis_size(basis.p) == 5);
  CHECK(std::fabs(lambda_of(basis.p, 0)) <= 1e-10);
  CHECK(lambda_of(basis.p, 4) > lambda_of(basis.p, 1));
  double out_of_range = 0.0;
  CHECK(gt_basis_lambda(basis.p, 9, &out_of_range) == GT_INVALID_ARGUMENT);
  double entry = 0.0;
  REQUIRE(gt_basis_entry(basis.p, 0, 0, &entry) == GT_OK);
  CHECK(std::fabs(entry - 1.0 / std::sqrt(5.0)) <= 1e-12);

  const double x[] = {1.0, 0.5, -0.25, 0.0, 2.0};
  double hat[5] = {};
  double back[5] = {};
  REQUIRE(gt_gft(basis.p, x, hat) == GT_OK);
  REQUIRE(gt_igft(basis.p, hat, back) == GT_OK);
  for (int i = 0; i < 5; ++i) CHECK(std::fabs(back[i] - x[i]) <= 1e-10);

  double translated[5] = {};
  REQUIRE(gt_spectral_translate(basis.p, x, 2, 0, translated) == GT_OK);
  double convolved[5] = {};
  const double delta[] = {0.0, 0.0, 1.0, 0.0, 0.0};
  REQUIRE(gt_convolve(basis.p, x, delta, convolved) == GT_OK);
  for (int i = 0; i < 5; ++i) CHECK(translated[i] == convolved[i]);

  double scaled[5] = {};
  REQUIRE(gt_spectral_translate(basis.p, x, 2, 1, scaled) == GT_OK);
  for (int i = 0; i < 5; ++i)
    CHECK(std::fabs(scaled[i] - std::sqrt(5.0) * translated[i]) <= 1e-12);

  CHECK(gt_support_size(delta, 5, 1e-6) == 1);
  CHECK(gt_support_size(translated, 5, 1e-6) > 1);

  gt_comparison report = {};
  REQUIRE(gt_compare_signals(x, translated, 5, x, 1e-6, &report) == GT_OK);
  CHECK(report.l2_distance > 0.0);
  CHECK(report.energy_ratio_first == doctest::Approx(1.0));
  CHECK(report.support_threshold == doctest::Approx(1e-6));
  CHECK(report.support_first == 4);

  CHECK(gt_spectral_translate(basis.p, x, 7, 0, translated) == GT_INVALID_ARGUMENT);
}

TEST_CASE("signals and images through the C surface") {
  double values[3] = {};
  REQUIRE(gt_signal_read_csv("1.5\n-2\n3e2\n", 3, values) == GT_OK);
  CHECK(values[2] == 300.0);
  CHECK(gt_signal_read_csv("1.5\nbogus\n", 2, values) == GT_PARSE_ERROR);

  char* written = nullptr;
  const double sample[] = {0.5, -1.0};
  REQUIRE(gt_signal_write_csv(sample, 2, &written) == GT_OK);
  CHECK(take_string(written) == "0.5\n-1\n");

  ImageGuard img;
  REQUIRE(gt_image_read_pgm("P2\n2 2\n255\n0 255\n255 0\n", &img.p) == GT_OK);
  CHECK(gt_image_width(img.p) == 2);
  CHECK(gt_image_height(img.p) == 2);
  CHECK(gt_image_maxval(img.p) == 255);
  CHECK(pixel_of(img.p, 0, 1) == 255);
  int unused = 0;
  CHECK(gt_image_pixel(img.p, 5, 5, &unused) == GT_INVALID_ARGUMENT);

  int lengths[2] = {};
  double signal[4] = {};
  REQUIRE(gt_image_to_signal(img.p, lengths, signal) == GT_OK);
  CHECK(lengths[0] == 2);
  CHECK(lengths[1] == 2);
  CHECK(signal[0] == 0.0);
  CHECK(signal[1] == 255.0);

  ImageGuard round;
  REQUIRE(gt_signal_to_image(lengths, 2, 0, signal, 255, &round.p) == GT_OK);
  char* pgm = nullptr;
  REQUIRE(gt_image_write_pgm(round.p, &pgm) == GT_OK);
  CHECK(take_string(pgm) == "P2\n2 2\n255\n0 255\n255 0\n");

  GraphGuard g;
  REQUIRE(gt_graph_grid(lengths, 2, 0, &g.p) == GT_OK);
  MapGuard f;
  REQUIRE(gt_map_geometrical(lengths, 2, 0, 0, +1, &f.p) == GT_OK);
  char* dot = nullptr;
  REQUIRE(gt_export_dot(g.p, f.p, 0, &dot) == GT_OK);
  std::string text = take_string(dot);
  CHECK(text.rfind("digraph translation {", 0) == 0);
  CHECK(text.find("fillcolor=black") != std::string::npos);
}
