#include "graphtrans.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "search.hpp"
#include "signal_io.hpp"
#include "spectral.hpp"
#include "translation.hpp"

using namespace gtrans;

struct gt_graph {
  Graph impl;
};
struct gt_map {
  VertexMap impl;
};
struct gt_search_result {
  SearchOutcome impl;
};
struct gt_basis {
  SpectralBasis impl;
};
struct gt_image {
  PgmImage impl;
};

namespace {

thread_local std::string g_last_error;

gt_status set_error(gt_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

gt_status map_status(Status s) {
  switch (s) {
    case Status::Ok: return GT_OK;
    case Status::InvalidArgument: return GT_INVALID_ARGUMENT;
    case Status::ParseError: return GT_PARSE_ERROR;
    case Status::Precondition: return GT_PRECONDITION;
    case Status::BudgetExceeded: return GT_BUDGET_EXCEEDED;
    case Status::NoConvergence: return GT_NO_CONVERGENCE;
    case Status::IoError: return GT_IO_ERROR;
  }
  return GT_INTERNAL;
}

// Runs f, translating C++ errors into status codes and the thread-local
// message.
template <typename Fn>
gt_status guarded(Fn&& f) {
  try {
    f();
    return GT_OK;
  } catch (const Error& e) {
    return set_error(map_status(e.status()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(GT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(GT_INTERNAL, e.what());
  }
}

gt_status require(bool ok, const char* message) {
  return ok ? GT_OK : set_error(GT_INVALID_ARGUMENT, message);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

GridSpec make_spec(const int* lengths, int dims, int cyclic) {
  if (!lengths || dims < 1) fail(Status::InvalidArgument, "grid lengths are missing");
  GridSpec spec;
  spec.lengths.assign(lengths, lengths + dims);
  spec.cyclic = cyclic != 0;
  validate_grid_spec(spec);
  return spec;
}

SearchBudget make_budget(const gt_search_budget* budget) {
  if (!budget) return SearchBudget{};
  SearchBudget out;
  out.max_vertices = budget->max_vertices;
  out.max_nodes = budget->max_nodes;
  out.time_limit_seconds = budget->time_limit_seconds;
  out.witness_cap = budget->witness_cap;
  out.jobs = budget->jobs;
  return out;
}

gt_status transform(const gt_basis* b, const double* x, double* out,
                    std::vector<double> (*op)(const SpectralBasis&, const std::vector<double>&)) {
  if (gt_status s = require(b && x && out, "null argument")) return s;
  return guarded([&] {
    std::vector<double> y = op(b->impl, std::vector<double>(x, x + b->impl.size()));
    std::memcpy(out, y.data(), y.size() * sizeof(double));
  });
}

}  // namespace

extern "C" {

const char* gt_status_name(gt_status s) {
  switch (s) {
    case GT_OK: return "ok";
    case GT_INVALID_ARGUMENT: return "invalid argument";
    case GT_PARSE_ERROR: return "parse error";
    case GT_PRECONDITION: return "precondition violated";
    case GT_BUDGET_EXCEEDED: return "budget exceeded";
    case GT_NO_CONVERGENCE: return "no convergence";
    case GT_IO_ERROR: return "io error";
    case GT_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gt_last_error(void) { return g_last_error.c_str(); }

void gt_string_free(char* s) { delete[] s; }

/* ---- graphs -------------------------------------------------------- */

gt_status gt_graph_create(int vertex_count, const int* edge_endpoints, long long edge_count,
                          gt_graph** out) {
  if (gt_status s = require(out && (edge_count == 0 || edge_endpoints), "null argument")) return s;
  return guarded([&] {
    if (edge_count < 0) fail(Status::InvalidArgument, "edge count must be non-negative");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(edge_count));
    for (long long i = 0; i < edge_count; ++i) {
      edges.emplace_back(edge_endpoints[2 * i], edge_endpoints[2 * i + 1]);
    }
    *out = new gt_graph{Graph(vertex_count, edges)};
  });
}

gt_status gt_graph_grid(const int* lengths, int dims, int cyclic, gt_graph** out) {
  if (gt_status s = require(out, "null out-parameter")) return s;
  return guarded([&] { *out = new gt_graph{grid_graph(make_spec(lengths, dims, cyclic))}; });
}

gt_status gt_graph_parse(const char* text, gt_graph** out) {
  if (gt_status s = require(text && out, "null argument")) return s;
  return guarded([&] { *out = new gt_graph{parse_graph(text)}; });
}

gt_status gt_graph_format(const gt_graph* g, char** out) {
  if (gt_status s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = copy_string(format_graph(g->impl)); });
}

int gt_graph_vertex_count(const gt_graph* g) { return g ? g->impl.vertex_count() : -1; }

long long gt_graph_edge_count(const gt_graph* g) { return g ? g->impl.edge_count() : -1; }

int gt_graph_degree(const gt_graph* g, int v) {
  if (!g || v < 0 || v >= g->impl.vertex_count()) return -1;
  return g->impl.degree(v);
}

int gt_graph_are_adjacent(const gt_graph* g, int u, int v) {
  if (!g || u < 0 || v < 0 || u >= g->impl.vertex_count() || v >= g->impl.vertex_count()) {
    return -1;
  }
  return g->impl.are_adjacent(u, v) ? 1 : 0;
}

void gt_graph_destroy(gt_graph* g) { delete g; }

/* ---- grid predicates ------------------------------------------------ */

long long gt_grid_vertex_count(const int* lengths, int dims) {
  long long count = -1;
  gt_status s = guarded([&] { count = make_spec(lengths, dims, 0).vertex_count(); });
  return s == GT_OK ? count : -1;
}

int gt_grid_satisfies_cyclic_hypotheses(const int* lengths, int dims, int cyclic) {
  bool ok = false;
  gt_status s =
      guarded([&] { ok = satisfies_cyclic_hypotheses(make_spec(lengths, dims, cyclic)); });
  return s == GT_OK ? (ok ? 1 : 0) : 0;
}

int gt_grid_satisfies_noncyclic_hypotheses(const int* lengths, int dims, int cyclic) {
  bool ok = false;
  gt_status s =
      guarded([&] { ok = satisfies_noncyclic_hypotheses(make_spec(lengths, dims, cyclic)); });
  return s == GT_OK ? (ok ? 1 : 0) : 0;
}

gt_status gt_grid_domain_lower_bound(const int* lengths, int dims, long long* out) {
  if (gt_status s = require(out, "null out-parameter")) return s;
  return guarded([&] { *out = grid_lower_bound(make_spec(lengths, dims, 0)); });
}

/* ---- vertex maps ----------------------------------------------------- */

gt_status gt_map_create(const int* images, int size, gt_map** out) {
  if (gt_status s = require(out && (size == 0 || images), "null argument")) return s;
  return guarded([&] {
    if (size < 0) fail(Status::InvalidArgument, "map size must be non-negative");
    *out = new gt_map{VertexMap(std::vector<int>(images, images + size))};
  });
}

gt_status gt_map_all_omega(int size, gt_map** out) {
  if (gt_status s = require(out, "null out-parameter")) return s;
  return guarded([&] {
    if (size < 0) fail(Status::InvalidArgument, "map size must be non-negative");
    *out = new gt_map{VertexMap::all_omega(size)};
  });
}

gt_status gt_map_parse(const char* text, gt_map** out) {
  if (gt_status s = require(text && out, "null argument")) return s;
  return guarded([&] { *out = new gt_map{parse_map(text)}; });
}

gt_status gt_map_format(const gt_map* f, char** out) {
  if (gt_status s = require(f && out, "null argument")) return s;
  return guarded([&] { *out = copy_string(format_map(f->impl)); });
}

int gt_map_size(const gt_map* f) { return f ? f->impl.size() : -1; }

int gt_map_domain_size(const gt_map* f) { return f ? f->impl.domain_size() : -1; }

int gt_map_is_total(const gt_map* f) { return f ? (f->impl.is_total() ? 1 : 0) : -1; }

int gt_map_equals(const gt_map* a, const gt_map* b) {
  if (!a || !b) return -1;
  return a->impl == b->impl ? 1 : 0;
}

gt_status gt_map_image(const gt_map* f, int v, int* out) {
  if (gt_status s = require(f && out, "null argument")) return s;
  return guarded([&] { *out = f->impl.image(v); });
}

gt_status gt_map_compose(const gt_map* first, const gt_map* then, gt_map** out) {
  if (gt_status s = require(first && then && out, "null argument")) return s;
  return guarded([&] { *out = new gt_map{compose(first->impl, then->impl)}; });
}

void gt_map_destroy(gt_map* f) { delete f; }

gt_status gt_map_geometrical(const int* lengths, int dims, int cyclic, int dim, int sign,
                             gt_map** out) {
  if (gt_status s = require(out, "null out-parameter")) return s;
  return guarded(
      [&] { *out = new gt_map{geometrical(make_spec(lengths, dims, cyclic), dim, sign)}; });
}

gt_status gt_map_matches_geometrical(const int* lengths, int dims, int cyclic, const gt_map* f,
                                     int* matched, int* dim_out, int* sign_out) {
  if (gt_status s = require(f && matched, "null argument")) return s;
  return guarded([&] {
    auto hit = matches_geometrical(make_spec(lengths, dims, cyclic), f->impl);
    *matched = hit.has_value() ? 1 : 0;
    if (hit) {
      if (dim_out) *dim_out = hit->first;
      if (sign_out) *sign_out = hit->second;
    }
  });
}

gt_status gt_map_contaminate(const int* lengths, int dims, int cyclic, int seed_vertex,
                             int seed_image, gt_map** out) {
  if (gt_status s = require(out, "null out-parameter")) return s;
  return guarded([&] {
    *out = new gt_map{contaminate(make_spec(lengths, dims, cyclic), seed_vertex, seed_image)};
  });
}

gt_status gt_map_orbit(const gt_map* f, int start, gt_orbit* out) {
  if (gt_status s = require(f && out, "null argument")) return s;
  return guarded([&] {
    OrbitReport report = orbit(f->impl, start);
    out->periodic = report.kind == OrbitReport::Kind::Periodic ? 1 : 0;
    out->period = report.period;
    out->entry_offset = report.entry_offset;
    out->steps_to_omega = report.steps_to_omega;
    out->visited_count = static_cast<int>(report.visited.size());
    out->visited = new int[report.visited.size()];
    std::memcpy(out->visited, report.visited.data(), report.visited.size() * sizeof(int));
  });
}

void gt_orbit_free(gt_orbit* orbit) {
  if (!orbit) return;
  delete[] orbit->visited;
  orbit->visited = nullptr;
  orbit->visited_count = 0;
}

gt_status gt_map_apply_signal(const gt_map* f, const double* x, int size, double fill,
                              double* out) {
  if (gt_status s = require(f && x && out, "null argument")) return s;
  return guarded([&] {
    if (size != f->impl.size()) {
      fail(Status::InvalidArgument, "signal length does not match the map");
    }
    std::vector<double> y = apply_to_signal(f->impl, std::vector<double>(x, x + size), fill);
    std::memcpy(out, y.data(), y.size() * sizeof(double));
  });
}

/* ---- verification ----------------------------------------------------- */

void gt_search_budget_init(gt_search_budget* budget) {
  if (!budget) return;
  SearchBudget defaults;
  budget->max_vertices = defaults.max_vertices;
  budget->max_nodes = defaults.max_nodes;
  budget->time_limit_seconds = defaults.time_limit_seconds;
  budget->witness_cap = defaults.witness_cap;
  budget->jobs = defaults.jobs;
}

gt_status gt_check_candidate(const gt_graph* g, const gt_map* f, int* is_candidate,
                             char** violation_out) {
  if (gt_status s = require(g && f && is_candidate, "null argument")) return s;
  return guarded([&] {
    Violation witness;
    bool ok = gtrans::is_candidate(g->impl, f->impl, &witness);
    *is_candidate = ok ? 1 : 0;
    if (!ok && violation_out) *violation_out = copy_string(witness.describe());
  });
}

gt_status gt_check_perfect(const gt_graph* g, const gt_map* f, int* is_perfect) {
  if (gt_status s = require(g && f && is_perfect, "null argument")) return s;
  return guarded([&] { *is_perfect = gtrans::is_perfect(g->impl, f->impl) ? 1 : 0; });
}

gt_status gt_check_graphical(const gt_graph* g, const gt_map* f, const gt_search_budget* budget,
                             gt_ternary* out) {
  if (gt_status s = require(g && f && out, "null argument")) return s;
  return guarded([&] {
    switch (is_graphical(g->impl, f->impl, make_budget(budget))) {
      case Ternary::No: *out = GT_NO; break;
      case Ternary::Yes: *out = GT_YES; break;
      case Ternary::Undecided: *out = GT_UNDECIDED; break;
    }
  });
}

gt_status gt_classify(const gt_graph* g, const gt_map* f, const gt_search_budget* budget,
                      gt_class* cls, int* domain_size, int* maximality_decided,
                      char** violation_out) {
  if (gt_status s = require(g && f && cls, "null argument")) return s;
  return guarded([&] {
    Classification c = classify(g->impl, f->impl, make_budget(budget));
    switch (c.cls) {
      case TranslationClass::NotCandidate: *cls = GT_CLASS_NOT_CANDIDATE; break;
      case TranslationClass::Candidate: *cls = GT_CLASS_CANDIDATE; break;
      case TranslationClass::Graphical: *cls = GT_CLASS_GRAPHICAL; break;
      case TranslationClass::Perfect: *cls = GT_CLASS_PERFECT; break;
    }
    if (domain_size) *domain_size = c.domain_size;
    if (maximality_decided) *maximality_decided = c.maximality_decided ? 1 : 0;
    if (violation_out && c.cls == TranslationClass::NotCandidate) {
      *violation_out = copy_string(c.violation.describe());
    }
  });
}

/* ---- search ------------------------------------------------------------ */

gt_status gt_search_max(const gt_graph* g, const gt_search_budget* budget, int seed_lower_bound,
                        gt_search_result** out) {
  if (gt_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    *out = new gt_search_result{
        max_domain_translations(g->impl, make_budget(budget), seed_lower_bound)};
  });
}

gt_status gt_search_perfect(const gt_graph* g, const gt_search_budget* budget,
                            gt_search_result** out) {
  if (gt_status s = require(g && out, "null argument")) return s;
  return guarded(
      [&] { *out = new gt_search_result{perfect_translations(g->impl, make_budget(budget))}; });
}

gt_status gt_grid_search_perfect(const int* lengths, int dims, int cyclic,
                                 const gt_search_budget* budget, gt_search_result** out) {
  if (gt_status s = require(out, "null out-parameter")) return s;
  return guarded([&] {
    *out = new gt_search_result{
        perfect_translations(make_spec(lengths, dims, cyclic), make_budget(budget))};
  });
}

int gt_search_result_complete(const gt_search_result* r) {
  if (!r) return -1;
  return r->impl.status == SearchStatus::Complete ? 1 : 0;
}

int gt_search_result_best_domain(const gt_search_result* r) { return r ? r->impl.best_domain : -1; }

int gt_search_result_witness_count(const gt_search_result* r) {
  return r ? static_cast<int>(r->impl.witnesses.size()) : -1;
}

int gt_search_result_witnesses_capped(const gt_search_result* r) {
  return r ? (r->impl.witnesses_capped ? 1 : 0) : -1;
}

long long gt_search_result_nodes(const gt_search_result* r) {
  return r ? r->impl.nodes_expanded : -1;
}

gt_status gt_search_result_witness(const gt_search_result* r, int index, gt_map** out) {
  if (gt_status s = require(r && out, "null argument")) return s;
  return guarded([&] {
    if (index < 0 || index >= static_cast<int>(r->impl.witnesses.size())) {
      fail(Status::InvalidArgument, "witness index out of range");
    }
    *out = new gt_map{r->impl.witnesses[static_cast<size_t>(index)]};
  });
}

void gt_search_result_destroy(gt_search_result* r) { delete r; }

gt_status gt_search_pinned_max(const gt_graph* g, int v, int w, const gt_search_budget* budget,
                               int* status, int* best_domain, long long* nodes) {
  if (gt_status s = require(g && status && best_domain, "null argument")) return s;
  return guarded([&] {
    PinnedMax result = max_domain_with_pin(g->impl, v, w, make_budget(budget));
    switch (result.status) {
      case PinnedStatus::Complete: *status = 0; break;
      case PinnedStatus::Exhausted: *status = 1; break;
      case PinnedStatus::NoCandidate: *status = 2; break;
    }
    *best_domain = result.best_domain;
    if (nodes) *nodes = result.nodes_expanded;
  });
}

/* ---- spectral ----------------------------------------------------------- */

gt_status gt_basis_create(const gt_graph* g, double tol, int max_sweeps, gt_basis** out) {
  if (gt_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    const double effective_tol = tol > 0.0 ? tol : 1e-10;
    const int effective_sweeps = max_sweeps > 0 ? max_sweeps : 100;
    *out = new gt_basis{eig_sym(laplacian(g->impl), effective_tol, effective_sweeps)};
  });
}

int gt_basis_size(const gt_basis* b) { return b ? b->impl.size() : -1; }

gt_status gt_basis_lambda(const gt_basis* b, int index, double* out) {
  if (gt_status s = require(b && out, "null argument")) return s;
  return guarded([&] {
    if (index < 0 || index >= b->impl.size()) {
      fail(Status::InvalidArgument, "eigenvalue index out of range");
    }
    *out = b->impl.lambdas[static_cast<size_t>(index)];
  });
}

gt_status gt_basis_entry(const gt_basis* b, int i, int j, double* out) {
  if (gt_status s = require(b && out, "null argument")) return s;
  return guarded([&] {
    if (i < 0 || j < 0 || i >= b->impl.size() || j >= b->impl.size()) {
      fail(Status::InvalidArgument, "basis entry index out of range");
    }
    *out = b->impl.u.at(i, j);
  });
}

void gt_basis_destroy(gt_basis* b) { delete b; }

gt_status gt_gft(const gt_basis* b, const double* x, double* out) {
  return transform(b, x, out, gft);
}

gt_status gt_igft(const gt_basis* b, const double* xhat, double* out) {
  return transform(b, xhat, out, igft);
}

gt_status gt_convolve(const gt_basis* b, const double* x1, const double* x2, double* out) {
  if (gt_status s = require(b && x1 && x2 && out, "null argument")) return s;
  return guarded([&] {
    const size_t n = static_cast<size_t>(b->impl.size());
    std::vector<double> y = graph_convolution(b->impl, std::vector<double>(x1, x1 + n),
                                              std::vector<double>(x2, x2 + n));
    std::memcpy(out, y.data(), y.size() * sizeof(double));
  });
}

gt_status gt_spectral_translate(const gt_basis* b, const double* x, int v, int scaled,
                                double* out) {
  if (gt_status s = require(b && x && out, "null argument")) return s;
  return guarded([&] {
    const size_t n = static_cast<size_t>(b->impl.size());
    std::vector<double> y =
        spectral_translate(b->impl, std::vector<double>(x, x + n), v, scaled != 0);
    std::memcpy(out, y.data(), y.size() * sizeof(double));
  });
}

int gt_support_size(const double* x, int size, double threshold) {
  if (!x || size < 0) return -1;
  return support_size(std::vector<double>(x, x + size), threshold);
}

gt_status gt_compare_signals(const double* first, const double* second, int size,
                             const double* reference, double support_threshold,
                             gt_comparison* out) {
  if (gt_status s = require(first && second && out && size >= 0, "null argument")) return s;
  return guarded([&] {
    std::vector<double> a(first, first + size);
    std::vector<double> b(second, second + size);
    std::vector<double> ref;
    if (reference) ref.assign(reference, reference + size);
    ComparisonReport report =
        compare_translations(a, b, reference ? &ref : nullptr, support_threshold);
    out->l2_distance = report.l2_distance;
    out->cosine = report.cosine;
    out->energy_ratio_first = report.energy_ratio_first;
    out->energy_ratio_second = report.energy_ratio_second;
    out->support_first = report.support_first;
    out->support_second = report.support_second;
    out->support_threshold = report.support_threshold;
  });
}

/* ---- signal and image I/O ----------------------------------------------- */

gt_status gt_signal_read_csv(const char* text, int expected_size, double* out) {
  if (gt_status s = require(text && out, "null argument")) return s;
  return guarded([&] {
    std::vector<double> x = read_signal_csv(text, expected_size);
    std::memcpy(out, x.data(), x.size() * sizeof(double));
  });
}

gt_status gt_signal_write_csv(const double* x, int size, char** out) {
  if (gt_status s = require(x && out && size >= 0, "null argument")) return s;
  return guarded([&] { *out = copy_string(write_signal_csv(std::vector<double>(x, x + size))); });
}

gt_status gt_image_read_pgm(const char* text, gt_image** out) {
  if (gt_status s = require(text && out, "null argument")) return s;
  return guarded([&] { *out = new gt_image{read_pgm(text)}; });
}

gt_status gt_image_write_pgm(const gt_image* img, char** out) {
  if (gt_status s = require(img && out, "null argument")) return s;
  return guarded([&] { *out = copy_string(write_pgm(img->impl)); });
}

gt_status gt_image_create(int width, int height, int maxval, const int* pixels, gt_image** out) {
  if (gt_status s = require(pixels && out, "null argument")) return s;
  return guarded([&] {
    if (width < 1 || height < 1) fail(Status::InvalidArgument, "image dimensions must be positive");
    if (maxval < 1 || maxval > 65535) fail(Status::InvalidArgument, "maxval out of range [1, 65535]");
    PgmImage img;
    img.width = width;
    img.height = height;
    img.maxval = maxval;
    img.pixels.assign(pixels, pixels + static_cast<size_t>(width) * height);
    for (int p : img.pixels) {
      if (p < 0 || p > maxval) fail(Status::InvalidArgument, "pixel out of range [0, maxval]");
    }
    *out = new gt_image{std::move(img)};
  });
}

int gt_image_width(const gt_image* img) { return img ? img->impl.width : -1; }

int gt_image_height(const gt_image* img) { return img ? img->impl.height : -1; }

int gt_image_maxval(const gt_image* img) { return img ? img->impl.maxval : -1; }

gt_status gt_image_pixel(const gt_image* img, int r, int c, int* out) {
  if (gt_status s = require(img && out, "null argument")) return s;
  return guarded([&] {
    if (r < 0 || c < 0 || r >= img->impl.height || c >= img->impl.width) {
      fail(Status::InvalidArgument, "pixel coordinates out of range");
    }
    *out = img->impl.pixel(r, c);
  });
}

void gt_image_destroy(gt_image* img) { delete img; }

gt_status gt_image_to_signal(const gt_image* img, int lengths_out[2], double* signal_out) {
  if (gt_status s = require(img && signal_out, "null argument")) return s;
  return guarded([&] {
    GridSignal gs = image_to_signal(img->impl);
    if (lengths_out) {
      lengths_out[0] = gs.spec.lengths[0];
      lengths_out[1] = gs.spec.lengths[1];
    }
    std::memcpy(signal_out, gs.values.data(), gs.values.size() * sizeof(double));
  });
}

gt_status gt_signal_to_image(const int* lengths, int dims, int cyclic, const double* x,
                             int maxval, gt_image** out) {
  if (gt_status s = require(x && out, "null argument")) return s;
  return guarded([&] {
    GridSpec spec = make_spec(lengths, dims, cyclic);
    std::vector<double> signal(x, x + spec.vertex_count());
    *out = new gt_image{signal_to_image(spec, signal, maxval)};
  });
}

gt_status gt_export_dot(const gt_graph* g, const gt_map* f, int include_edges, char** out) {
  if (gt_status s = require(g && f && out, "null argument")) return s;
  return guarded([&] {
    DotOptions options;
    options.include_edges = include_edges != 0;
    *out = copy_string(export_dot(g->impl, f->impl, options));
  });
}

}  // extern "C"
