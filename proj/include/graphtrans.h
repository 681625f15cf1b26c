#ifndef GRAPHTRANS_H
#define GRAPHTRANS_H

/*
 * C interface to the graph-translation library.
 *
 * Conventions:
 *   - Every fallible call returns a gt_status; GT_OK means the out-parameters
 *     are valid. On failure gt_last_error() describes what went wrong for the
 *     calling thread.
 *   - Objects returned through gt_*** out-pointers are owned by the caller
 *     and released with the matching gt_*_destroy / gt_string_free.
 *   - Vertices are 0-based. The absorbing state omega is GT_OMEGA.
 *   - Grids are passed as (lengths, dims, cyclic) with dims >= 1 and
 *     row-major vertex numbering (the last dimension varies fastest).
 */

#ifdef __cplusplus
extern "C" {
#endif

#define GT_OMEGA (-1)

typedef enum gt_status {
  GT_OK = 0,
  GT_INVALID_ARGUMENT = 1,
  GT_PARSE_ERROR = 2,
  GT_PRECONDITION = 3,
  GT_BUDGET_EXCEEDED = 4,
  GT_NO_CONVERGENCE = 5,
  GT_IO_ERROR = 6,
  GT_INTERNAL = 7
} gt_status;

const char* gt_status_name(gt_status s);

/* Message from the most recent failing call on this thread. Never NULL. */
const char* gt_last_error(void);

/* Frees strings returned through char** out-parameters. NULL is a no-op. */
void gt_string_free(char* s);

typedef struct gt_graph gt_graph;
typedef struct gt_map gt_map;
typedef struct gt_search_result gt_search_result;
typedef struct gt_basis gt_basis;
typedef struct gt_image gt_image;

/* ---- graphs -------------------------------------------------------- */

/* edge_endpoints holds edge_count (u, v) pairs, flattened. */
gt_status gt_graph_create(int vertex_count, const int* edge_endpoints, long long edge_count,
                          gt_graph** out);
gt_status gt_graph_grid(const int* lengths, int dims, int cyclic, gt_graph** out);

/* Text format: "<n> <m>" header line, then one "u v" line per edge, u < v. */
gt_status gt_graph_parse(const char* text, gt_graph** out);
gt_status gt_graph_format(const gt_graph* g, char** out);

int gt_graph_vertex_count(const gt_graph* g);    /* -1 on NULL */
long long gt_graph_edge_count(const gt_graph* g); /* -1 on NULL */
int gt_graph_degree(const gt_graph* g, int v);    /* -1 on NULL or bad vertex */
int gt_graph_are_adjacent(const gt_graph* g, int u, int v); /* 1/0, -1 on error */
void gt_graph_destroy(gt_graph* g);

/* ---- grid predicates ------------------------------------------------ */

long long gt_grid_vertex_count(const int* lengths, int dims); /* -1 on invalid spec */
int gt_grid_satisfies_cyclic_hypotheses(const int* lengths, int dims, int cyclic);
int gt_grid_satisfies_noncyclic_hypotheses(const int* lengths, int dims, int cyclic);

/* (l1 - 1) * l2 * ... * ld, the geometrical-translation domain size on a
 * noncyclic grid. */
gt_status gt_grid_domain_lower_bound(const int* lengths, int dims, long long* out);

/* ---- vertex maps ----------------------------------------------------- */

/* images[v] is GT_OMEGA or a vertex in [0, size). */
gt_status gt_map_create(const int* images, int size, gt_map** out);
gt_status gt_map_all_omega(int size, gt_map** out);

/* Text format: one "v -> w" line per vertex, "v -> omega" outside the domain. */
gt_status gt_map_parse(const char* text, gt_map** out);
gt_status gt_map_format(const gt_map* f, char** out);

int gt_map_size(const gt_map* f);        /* -1 on NULL */
int gt_map_domain_size(const gt_map* f); /* -1 on NULL */
int gt_map_is_total(const gt_map* f);    /* 1/0, -1 on NULL */
int gt_map_equals(const gt_map* a, const gt_map* b); /* 1/0, -1 on NULL */
gt_status gt_map_image(const gt_map* f, int v, int* out);
gt_status gt_map_compose(const gt_map* first, const gt_map* then, gt_map** out);
void gt_map_destroy(gt_map* f);

/* The geometrical translation by +/- one step along dimension dim (0-based);
 * sign is +1 or -1. */
gt_status gt_map_geometrical(const int* lengths, int dims, int cyclic, int dim, int sign,
                             gt_map** out);

/* matched is 1 and (dim_out, sign_out) filled when f is geometrical. */
gt_status gt_map_matches_geometrical(const int* lengths, int dims, int cyclic, const gt_map* f,
                                     int* matched, int* dim_out, int* sign_out);

/* The largest candidate translation agreeing with seed_vertex -> seed_image
 * on a grid, built by peeling contaminated vertices. */
gt_status gt_map_contaminate(const int* lengths, int dims, int cyclic, int seed_vertex,
                             int seed_image, gt_map** out);

/* Orbit of a vertex under repeated application of f. Exactly one of the two
 * shapes applies: periodic (period > 0) or absorbed into omega. visited must
 * be released with gt_orbit_free. */
typedef struct gt_orbit {
  int periodic;
  int period;        /* periodic only: smallest cycle length */
  int entry_offset;  /* periodic only: index in visited where the cycle starts */
  int steps_to_omega; /* absorbed only */
  int* visited;
  int visited_count;
} gt_orbit;

gt_status gt_map_orbit(const gt_map* f, int start, gt_orbit* out);
void gt_orbit_free(gt_orbit* orbit);

/* y[v] = x[f^{-1}(v)] where defined, fill elsewhere. x and out have
 * gt_map_size(f) entries. */
gt_status gt_map_apply_signal(const gt_map* f, const double* x, int size, double fill,
                              double* out);

/* ---- verification ----------------------------------------------------- */

typedef struct gt_search_budget {
  int max_vertices;          /* exhaustive procedures refuse larger graphs */
  long long max_nodes;       /* search-tree node limit */
  double time_limit_seconds; /* wall-clock limit */
  int witness_cap;           /* maximizers kept per search */
  int jobs;                  /* worker threads; 1 = sequential */
} gt_search_budget;

/* Fills in the defaults (30 vertices, 1e8 nodes, 120 s, 64 witnesses, 1 job). */
void gt_search_budget_init(gt_search_budget* budget);

/* is_candidate is 1/0. When 0 and violation_out is non-NULL, *violation_out
 * describes the first violated rule (caller frees). */
gt_status gt_check_candidate(const gt_graph* g, const gt_map* f, int* is_candidate,
                             char** violation_out);
gt_status gt_check_perfect(const gt_graph* g, const gt_map* f, int* is_perfect);

typedef enum gt_ternary { GT_NO = 0, GT_YES = 1, GT_UNDECIDED = 2 } gt_ternary;

/* Whether f is a graphical translation; GT_UNDECIDED when the budget ran out
 * before maximality was settled. */
gt_status gt_check_graphical(const gt_graph* g, const gt_map* f, const gt_search_budget* budget,
                             gt_ternary* out);

typedef enum gt_class {
  GT_CLASS_NOT_CANDIDATE = 0,
  GT_CLASS_CANDIDATE = 1,
  GT_CLASS_GRAPHICAL = 2,
  GT_CLASS_PERFECT = 3
} gt_class;

/* maximality_decided is 0 for a Candidate verdict that is really "not proven
 * graphical within the budget". violation_out as in gt_check_candidate. */
gt_status gt_classify(const gt_graph* g, const gt_map* f, const gt_search_budget* budget,
                      gt_class* cls, int* domain_size, int* maximality_decided,
                      char** violation_out);

/* ---- search ------------------------------------------------------------ */

/* Branch-and-bound for maximum-domain candidate translations. The result is
 * complete (proved optimal) or exhausted (budget hit; best is a lower bound).
 * seed_lower_bound primes the bound with a known achievable domain size. */
gt_status gt_search_max(const gt_graph* g, const gt_search_budget* budget, int seed_lower_bound,
                        gt_search_result** out);

/* Total bijective candidates. */
gt_status gt_search_perfect(const gt_graph* g, const gt_search_budget* budget,
                            gt_search_result** out);

/* Grid-aware variant: cyclic grids with every length >= 5 are resolved by
 * construction instead of search. */
gt_status gt_grid_search_perfect(const int* lengths, int dims, int cyclic,
                                 const gt_search_budget* budget, gt_search_result** out);

int gt_search_result_complete(const gt_search_result* r); /* 1 complete, 0 exhausted, -1 NULL */
int gt_search_result_best_domain(const gt_search_result* r);
int gt_search_result_witness_count(const gt_search_result* r);
int gt_search_result_witnesses_capped(const gt_search_result* r);
long long gt_search_result_nodes(const gt_search_result* r);
gt_status gt_search_result_witness(const gt_search_result* r, int index, gt_map** out);
void gt_search_result_destroy(gt_search_result* r);

/* Largest domain among candidates with f(v) = w. status: 0 complete,
 * 1 exhausted, 2 no candidate pins v to w (v, w not adjacent). */
gt_status gt_search_pinned_max(const gt_graph* g, int v, int w, const gt_search_budget* budget,
                               int* status, int* best_domain, long long* nodes);

/* ---- spectral ----------------------------------------------------------- */

/* Eigendecomposition of the graph Laplacian. tol <= 0 selects the default
 * 1e-10; max_sweeps <= 0 selects the default 100. */
gt_status gt_basis_create(const gt_graph* g, double tol, int max_sweeps, gt_basis** out);
int gt_basis_size(const gt_basis* b); /* -1 on NULL */
gt_status gt_basis_lambda(const gt_basis* b, int index, double* out);
gt_status gt_basis_entry(const gt_basis* b, int i, int j, double* out); /* U[i][j] */
void gt_basis_destroy(gt_basis* b);

/* Signal buffers hold gt_basis_size(b) doubles; out may alias the inputs. */
gt_status gt_gft(const gt_basis* b, const double* x, double* out);
gt_status gt_igft(const gt_basis* b, const double* xhat, double* out);
gt_status gt_convolve(const gt_basis* b, const double* x1, const double* x2, double* out);
gt_status gt_spectral_translate(const gt_basis* b, const double* x, int v, int scaled,
                                double* out);

int gt_support_size(const double* x, int size, double threshold); /* -1 on NULL */

typedef struct gt_comparison {
  double l2_distance;
  double cosine;
  double energy_ratio_first;  /* |first|^2 / |reference|^2; NaN without reference */
  double energy_ratio_second;
  int support_first;
  int support_second;
  double support_threshold;
} gt_comparison;

/* reference may be NULL (energy ratios then come back NaN). */
gt_status gt_compare_signals(const double* first, const double* second, int size,
                             const double* reference, double support_threshold,
                             gt_comparison* out);

/* ---- signal and image I/O ----------------------------------------------- */

/* One real per line, exactly expected_size lines; out holds expected_size
 * doubles. */
gt_status gt_signal_read_csv(const char* text, int expected_size, double* out);
gt_status gt_signal_write_csv(const double* x, int size, char** out);

/* Plain-text PGM, magic P2. */
gt_status gt_image_read_pgm(const char* text, gt_image** out);
gt_status gt_image_write_pgm(const gt_image* img, char** out);
gt_status gt_image_create(int width, int height, int maxval, const int* pixels, gt_image** out);
int gt_image_width(const gt_image* img);  /* -1 on NULL */
int gt_image_height(const gt_image* img); /* -1 on NULL */
int gt_image_maxval(const gt_image* img); /* -1 on NULL */
gt_status gt_image_pixel(const gt_image* img, int r, int c, int* out);
void gt_image_destroy(gt_image* img);

/* The image's grid is noncyclic (width, height): pixel (r, c) is grid
 * coordinate (c, r), so +e1 shifts the picture right. signal_out holds
 * width * height doubles; lengths_out may be NULL. */
gt_status gt_image_to_signal(const gt_image* img, int lengths_out[2], double* signal_out);

/* Requires a 2-dimensional noncyclic grid; clamps to [0, maxval], rounds
 * half-up. */
gt_status gt_signal_to_image(const int* lengths, int dims, int cyclic, const double* x,
                             int maxval, gt_image** out);

/* DOT rendering: one arrow per domain vertex, omega vertices filled black,
 * graph edges included only when include_edges is nonzero. */
gt_status gt_export_dot(const gt_graph* g, const gt_map* f, int include_edges, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GRAPHTRANS_H */
