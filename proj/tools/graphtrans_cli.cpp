// Command-line front end. Everything goes through the C API in graphtrans.h;
// this file owns argument parsing, file access, and report formatting.
//
// Exit codes: 0 success, 1 domain failure (bad input data, --expect mismatch,
// --require-complete on an exhausted search), 2 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphtrans.h"

namespace {

template <typename T, void (*F)(T*)>
struct CDeleter {
  void operator()(T* t) const { F(t); }
};

using GraphPtr = std::unique_ptr<gt_graph, CDeleter<gt_graph, gt_graph_destroy>>;
using MapPtr = std::unique_ptr<gt_map, CDeleter<gt_map, gt_map_destroy>>;
using ResultPtr = std::unique_ptr<gt_search_result, CDeleter<gt_search_result, gt_search_result_destroy>>;
using BasisPtr = std::unique_ptr<gt_basis, CDeleter<gt_basis, gt_basis_destroy>>;
using ImagePtr = std::unique_ptr<gt_image, CDeleter<gt_image, gt_image_destroy>>;
using StringPtr = std::unique_ptr<char, CDeleter<char, gt_string_free>>;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;

// Domain-level failure: report and signal exit 1 to the caller.
int complain(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitDomain;
}

int complain_api() { return complain(gt_last_error()); }

bool read_file(const std::string& path, std::string& out, int& rc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    rc = complain("cannot read file: " + path);
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

bool write_output(const std::string& path, const std::string& content, int& rc) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !out.flush()) {
    rc = complain("cannot write file: " + path);
    return false;
  }
  return true;
}

// "6x5" or "4x4x2" -> per-dimension lengths.
bool parse_grid_lengths(const std::string& text, std::vector<int>& lengths, int& rc) {
  lengths.clear();
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, 'x')) {
    try {
      size_t consumed = 0;
      int value = std::stoi(token, &consumed);
      if (consumed != token.size() || value < 1) throw std::invalid_argument(token);
      lengths.push_back(value);
    } catch (const std::exception&) {
      rc = complain("malformed grid spec \"" + text + "\", expected e.g. 6x5");
      return false;
    }
  }
  if (lengths.empty()) {
    rc = complain("empty grid spec");
    return false;
  }
  return true;
}

// "+e1" / "-e2" -> (0-based dimension, sign).
bool parse_shift(const std::string& text, int& dim, int& sign, int& rc) {
  bool ok = text.size() >= 3 && (text[0] == '+' || text[0] == '-') && text[1] == 'e';
  int parsed = 0;
  if (ok) {
    try {
      size_t consumed = 0;
      parsed = std::stoi(text.substr(2), &consumed);
      ok = consumed == text.size() - 2 && parsed >= 1;
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (!ok) {
    rc = complain("malformed shift \"" + text + "\", expected e.g. +e1 or -e2");
    return false;
  }
  dim = parsed - 1;
  sign = text[0] == '+' ? 1 : -1;
  return true;
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

bool load_graph(const std::string& path, GraphPtr& graph, int& rc) {
  std::string text;
  if (!read_file(path, text, rc)) return false;
  gt_graph* raw = nullptr;
  if (gt_graph_parse(text.c_str(), &raw) != GT_OK) {
    rc = complain_api();
    return false;
  }
  graph.reset(raw);
  return true;
}

bool load_map(const std::string& path, MapPtr& map, int& rc) {
  std::string text;
  if (!read_file(path, text, rc)) return false;
  gt_map* raw = nullptr;
  if (gt_map_parse(text.c_str(), &raw) != GT_OK) {
    rc = complain_api();
    return false;
  }
  map.reset(raw);
  return true;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char ch : text) {
    if (ch == '\n') ++lines;
  }
  if (!text.empty() && text.back() != '\n') ++lines;
  return lines;
}

bool load_signal(const std::string& path, int expected_size, std::vector<double>& signal,
                 int& rc) {
  std::string text;
  if (!read_file(path, text, rc)) return false;
  const int size = expected_size >= 0 ? expected_size : count_lines(text);
  signal.assign(static_cast<size_t>(size), 0.0);
  if (gt_signal_read_csv(text.c_str(), size, signal.data()) != GT_OK) {
    rc = complain_api();
    return false;
  }
  return true;
}

bool write_signal(const std::string& path, const std::vector<double>& signal, int& rc) {
  char* text = nullptr;
  if (gt_signal_write_csv(signal.data(), static_cast<int>(signal.size()), &text) != GT_OK) {
    rc = complain_api();
    return false;
  }
  StringPtr owned(text);
  return write_output(path, owned.get(), rc);
}

struct BudgetFlags {
  gt_search_budget budget;

  BudgetFlags() { gt_search_budget_init(&budget); }

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-vertices", budget.max_vertices,
                    "largest graph exhaustive procedures accept");
    cmd->add_option("--max-nodes", budget.max_nodes, "search-tree node limit");
    cmd->add_option("--time-limit", budget.time_limit_seconds, "wall-clock limit in seconds");
    cmd->add_option("--witness-cap", budget.witness_cap, "maximizers kept per search");
    cmd->add_option("--jobs", budget.jobs, "worker threads for the search");
  }
};

std::string geometry_suffix(const std::vector<int>& lengths, int cyclic, const gt_map* map,
                            bool& ok) {
  int matched = 0;
  int dim = 0;
  int sign = 0;
  if (gt_map_matches_geometrical(lengths.data(), static_cast<int>(lengths.size()), cyclic, map,
                                 &matched, &dim, &sign) != GT_OK) {
    ok = false;
    return {};
  }
  ok = true;
  if (!matched) return ", not geometrical";
  return std::string(", geometrical ") + (sign > 0 ? "+" : "-") + "e" + std::to_string(dim + 1);
}

/* ---- subcommands --------------------------------------------------------- */

struct GenOptions {
  std::string grid;
  bool cyclic = false;
  std::string output;
};

int run_gen(const GenOptions& opt) {
  int rc = kExitOk;
  std::vector<int> lengths;
  if (!parse_grid_lengths(opt.grid, lengths, rc)) return rc;
  gt_graph* raw = nullptr;
  if (gt_graph_grid(lengths.data(), static_cast<int>(lengths.size()), opt.cyclic ? 1 : 0, &raw) !=
      GT_OK) {
    return complain_api();
  }
  GraphPtr graph(raw);
  char* text = nullptr;
  if (gt_graph_format(graph.get(), &text) != GT_OK) return complain_api();
  StringPtr owned(text);
  if (!write_output(opt.output, owned.get(), rc)) return rc;
  return kExitOk;
}

struct VerifyOptions {
  std::string graph_path;
  std::string map_path;
  std::string expect;
};

int run_verify(const VerifyOptions& opt) {
  int rc = kExitOk;
  GraphPtr graph;
  MapPtr map;
  if (!load_graph(opt.graph_path, graph, rc)) return rc;
  if (!load_map(opt.map_path, map, rc)) return rc;

  int is_candidate = 0;
  char* violation = nullptr;
  if (gt_check_candidate(graph.get(), map.get(), &is_candidate, &violation) != GT_OK) {
    return complain_api();
  }
  StringPtr owned(violation);
  if (is_candidate) {
    std::cout << "candidate, c=" << gt_map_domain_size(map.get()) << "\n";
  } else {
    std::cout << "not a candidate: " << owned.get() << "\n";
  }
  if (!opt.expect.empty()) {
    const std::string got = is_candidate ? "candidate" : "not-candidate";
    if (got != opt.expect) {
      return complain("expected " + opt.expect + ", got " + got);
    }
  }
  return kExitOk;
}

struct ClassifyOptions {
  std::string graph_path;
  std::string map_path;
  std::string grid;
  bool cyclic = false;
  std::string expect;
  BudgetFlags budget;
};

int run_classify(const ClassifyOptions& opt) {
  int rc = kExitOk;
  GraphPtr graph;
  MapPtr map;
  if (!load_graph(opt.graph_path, graph, rc)) return rc;
  if (!load_map(opt.map_path, map, rc)) return rc;

  gt_class cls = GT_CLASS_NOT_CANDIDATE;
  int domain_size = 0;
  int decided = 1;
  char* violation = nullptr;
  if (gt_classify(graph.get(), map.get(), &opt.budget.budget, &cls, &domain_size, &decided,
                  &violation) != GT_OK) {
    return complain_api();
  }
  StringPtr owned(violation);

  std::string label;
  switch (cls) {
    case GT_CLASS_NOT_CANDIDATE: label = "not-candidate"; break;
    case GT_CLASS_CANDIDATE: label = "candidate"; break;
    case GT_CLASS_GRAPHICAL: label = "graphical"; break;
    case GT_CLASS_PERFECT: label = "perfect"; break;
  }

  if (cls == GT_CLASS_NOT_CANDIDATE) {
    std::cout << "not a candidate: " << owned.get() << "\n";
  } else {
    std::string line = label;
    if (!decided) line += " (maximality undecided)";
    line += ", c=" + std::to_string(domain_size);
    if (!opt.grid.empty()) {
      std::vector<int> lengths;
      if (!parse_grid_lengths(opt.grid, lengths, rc)) return rc;
      bool ok = true;
      line += geometry_suffix(lengths, opt.cyclic ? 1 : 0, map.get(), ok);
      if (!ok) return complain_api();
    }
    std::cout << line << "\n";
  }

  if (!opt.expect.empty() && opt.expect != label) {
    return complain("expected " + opt.expect + ", got " + label);
  }
  return kExitOk;
}

std::string render_witnesses(const gt_search_result* result, int& rc) {
  std::string out;
  const int count = gt_search_result_witness_count(result);
  for (int i = 0; i < count; ++i) {
    gt_map* raw = nullptr;
    if (gt_search_result_witness(result, i, &raw) != GT_OK) {
      rc = complain_api();
      return {};
    }
    MapPtr witness(raw);
    char* text = nullptr;
    if (gt_map_format(witness.get(), &text) != GT_OK) {
      rc = complain_api();
      return {};
    }
    StringPtr owned(text);
    if (i > 0) out += "\n";
    out += owned.get();
  }
  return out;
}

int report_search_result(const gt_search_result* result, const std::string& witness_path,
                         bool require_complete, const char* count_key) {
  const bool complete = gt_search_result_complete(result) == 1;
  std::cout << "status: " << (complete ? "complete" : "exhausted") << "\n";
  std::cout << "best_c: " << gt_search_result_best_domain(result) << "\n";
  std::cout << count_key << ": " << gt_search_result_witness_count(result) << "\n";
  std::cout << "capped: " << (gt_search_result_witnesses_capped(result) ? "yes" : "no") << "\n";
  std::cout << "nodes: " << gt_search_result_nodes(result) << "\n";
  int rc = kExitOk;
  if (!witness_path.empty()) {
    const std::string text = render_witnesses(result, rc);
    if (rc != kExitOk) return rc;
    if (!write_output(witness_path, text, rc)) return rc;
  }
  if (require_complete && !complete) {
    return complain("search exhausted its budget before completing");
  }
  return kExitOk;
}

struct SearchOptions {
  std::string graph_path;
  int seed = 0;
  bool require_complete = false;
  std::string output;
  BudgetFlags budget;
};

int run_search(const SearchOptions& opt) {
  int rc = kExitOk;
  GraphPtr graph;
  if (!load_graph(opt.graph_path, graph, rc)) return rc;
  gt_search_result* raw = nullptr;
  if (gt_search_max(graph.get(), &opt.budget.budget, opt.seed, &raw) != GT_OK) {
    return complain_api();
  }
  ResultPtr result(raw);
  return report_search_result(result.get(), opt.output, opt.require_complete, "witnesses");
}

struct PerfectOptions {
  std::string graph_path;
  std::string grid;
  bool cyclic = false;
  bool require_complete = false;
  std::string output;
  BudgetFlags budget;
};

int run_perfect(const PerfectOptions& opt) {
  int rc = kExitOk;
  if (opt.grid.empty() && opt.graph_path.empty()) {
    std::cerr << "error: one of --graph or --grid is required\n";
    return kExitDomain;
  }
  gt_search_result* raw = nullptr;
  if (!opt.grid.empty()) {
    std::vector<int> lengths;
    if (!parse_grid_lengths(opt.grid, lengths, rc)) return rc;
    if (gt_grid_search_perfect(lengths.data(), static_cast<int>(lengths.size()),
                               opt.cyclic ? 1 : 0, &opt.budget.budget, &raw) != GT_OK) {
      return complain_api();
    }
  } else {
    GraphPtr graph;
    if (!load_graph(opt.graph_path, graph, rc)) return rc;
    if (gt_search_perfect(graph.get(), &opt.budget.budget, &raw) != GT_OK) {
      return complain_api();
    }
  }
  ResultPtr result(raw);
  return report_search_result(result.get(), opt.output, opt.require_complete, "perfect");
}

struct OrbitsOptions {
  std::string map_path;
  int start = -1;
  bool trace = false;
};

int run_orbits(const OrbitsOptions& opt) {
  int rc = kExitOk;
  MapPtr map;
  if (!load_map(opt.map_path, map, rc)) return rc;
  const int n = gt_map_size(map.get());
  const int first = opt.start >= 0 ? opt.start : 0;
  const int last = opt.start >= 0 ? opt.start : n - 1;
  if (first >= n) return complain("start vertex out of range");
  for (int v = first; v <= last; ++v) {
    gt_orbit orbit = {};
    if (gt_map_orbit(map.get(), v, &orbit) != GT_OK) return complain_api();
    std::cout << v << ": ";
    if (orbit.periodic) {
      std::cout << "periodic period=" << orbit.period;
    } else {
      std::cout << "absorbed steps=" << orbit.steps_to_omega;
    }
    if (opt.trace) {
      std::cout << " orbit=";
      for (int i = 0; i < orbit.visited_count; ++i) {
        if (i > 0) std::cout << "->";
        std::cout << orbit.visited[i];
      }
      if (orbit.periodic) {
        std::cout << "->" << orbit.visited[orbit.entry_offset];
      } else {
        std::cout << "->w";
      }
    }
    std::cout << "\n";
    gt_orbit_free(&orbit);
  }
  return kExitOk;
}

struct TranslateOptions {
  std::string map_path;
  std::string signal_path;
  int steps = 1;
  double fill = 0.0;
  std::string output;
};

// f applied steps times, built by repeated composition. The result aliases f
// itself when steps is 1, so the owner must outlive the returned pointer.
bool iterate_map(const gt_map* f, int steps, MapPtr& storage, const gt_map*& power, int& rc) {
  power = f;
  for (int i = 1; i < steps; ++i) {
    gt_map* next = nullptr;
    if (gt_map_compose(power, f, &next) != GT_OK) {
      rc = complain_api();
      return false;
    }
    storage.reset(next);
    power = storage.get();
  }
  return true;
}

int run_translate(const TranslateOptions& opt) {
  int rc = kExitOk;
  MapPtr map;
  if (!load_map(opt.map_path, map, rc)) return rc;
  if (opt.steps < 1) return complain("steps must be >= 1");

  MapPtr storage;
  const gt_map* power = nullptr;
  if (!iterate_map(map.get(), opt.steps, storage, power, rc)) return rc;

  const int n = gt_map_size(map.get());
  std::vector<double> x;
  if (!load_signal(opt.signal_path, n, x, rc)) return rc;
  std::vector<double> y(static_cast<size_t>(n), 0.0);
  if (gt_map_apply_signal(power, x.data(), n, opt.fill, y.data()) != GT_OK) {
    return complain_api();
  }
  if (!write_signal(opt.output, y, rc)) return rc;
  return kExitOk;
}

struct SpectralOptions {
  std::string graph_path;
  std::string signal_path;
  int to_vertex = 0;
  bool scaled = false;
  double tol = 0.0;
  int max_sweeps = 0;
  std::string output;
};

int run_spectral(const SpectralOptions& opt) {
  int rc = kExitOk;
  GraphPtr graph;
  if (!load_graph(opt.graph_path, graph, rc)) return rc;
  const int n = gt_graph_vertex_count(graph.get());
  std::vector<double> x;
  if (!load_signal(opt.signal_path, n, x, rc)) return rc;

  gt_basis* raw = nullptr;
  if (gt_basis_create(graph.get(), opt.tol, opt.max_sweeps, &raw) != GT_OK) {
    return complain_api();
  }
  BasisPtr basis(raw);
  std::vector<double> y(static_cast<size_t>(n), 0.0);
  if (gt_spectral_translate(basis.get(), x.data(), opt.to_vertex, opt.scaled ? 1 : 0,
                            y.data()) != GT_OK) {
    return complain_api();
  }
  if (!write_signal(opt.output, y, rc)) return rc;
  return kExitOk;
}

void print_comparison(const gt_comparison& report, bool with_energy, const char* first_name,
                      const char* second_name) {
  std::cout << "l2_distance: " << format_real(report.l2_distance) << "\n";
  std::cout << "cosine: " << format_real(report.cosine) << "\n";
  if (with_energy) {
    std::cout << "energy_ratio_" << first_name << ": " << format_real(report.energy_ratio_first)
              << "\n";
    std::cout << "energy_ratio_" << second_name << ": "
              << format_real(report.energy_ratio_second) << "\n";
  }
  std::cout << "support_" << first_name << ": " << report.support_first << "\n";
  std::cout << "support_" << second_name << ": " << report.support_second << "\n";
}

struct CompareOptions {
  std::string first_path;
  std::string second_path;
  std::string reference_path;
  double threshold = 1e-6;
};

int run_compare(const CompareOptions& opt) {
  int rc = kExitOk;
  std::vector<double> first;
  if (!load_signal(opt.first_path, -1, first, rc)) return rc;
  const int n = static_cast<int>(first.size());
  std::vector<double> second;
  if (!load_signal(opt.second_path, n, second, rc)) return rc;
  std::vector<double> reference;
  if (!opt.reference_path.empty() && !load_signal(opt.reference_path, n, reference, rc)) {
    return rc;
  }

  gt_comparison report = {};
  if (gt_compare_signals(first.data(), second.data(), n,
                         reference.empty() ? nullptr : reference.data(), opt.threshold,
                         &report) != GT_OK) {
    return complain_api();
  }
  print_comparison(report, !reference.empty(), "first", "second");
  return kExitOk;
}

struct DemoImageOptions {
  std::string pgm_path;
  std::string shift = "+e1";
  int steps = 1;
  double fill = 0.0;
  bool scaled = false;
  int delta_vertex = -1;
  std::string prefix = "demo";
};

int run_demo_image(const DemoImageOptions& opt) {
  int rc = kExitOk;
  std::string text;
  if (!read_file(opt.pgm_path, text, rc)) return rc;
  gt_image* raw_img = nullptr;
  if (gt_image_read_pgm(text.c_str(), &raw_img) != GT_OK) return complain_api();
  ImagePtr image(raw_img);

  int lengths[2] = {0, 0};
  const int n = gt_image_width(image.get()) * gt_image_height(image.get());
  std::vector<double> x(static_cast<size_t>(n), 0.0);
  if (gt_image_to_signal(image.get(), lengths, x.data()) != GT_OK) return complain_api();

  int dim = 0;
  int sign = 0;
  if (!parse_shift(opt.shift, dim, sign, rc)) return rc;
  if (opt.steps < 1) return complain("steps must be >= 1");
  if (dim >= 2) return complain("images are 2-dimensional, use e1 or e2");

  // Graphical leg: the geometrical shift composed steps times.
  gt_map* raw_map = nullptr;
  if (gt_map_geometrical(lengths, 2, 0, dim, sign, &raw_map) != GT_OK) return complain_api();
  MapPtr shift_map(raw_map);
  MapPtr storage;
  const gt_map* power = nullptr;
  if (!iterate_map(shift_map.get(), opt.steps, storage, power, rc)) return rc;
  std::vector<double> y_graphical(static_cast<size_t>(n), 0.0);
  if (gt_map_apply_signal(power, x.data(), n, opt.fill, y_graphical.data()) != GT_OK) {
    return complain_api();
  }

  // Spectral leg: convolution with the delta at the displacement vertex
  // steps * e_dim (the sign has no clean spectral counterpart; the operator
  // is not a shift, which is the point of the comparison).
  int delta_vertex = opt.delta_vertex;
  if (delta_vertex < 0) {
    if (opt.steps >= lengths[dim]) {
      return complain("steps exceed the image extent along the shift dimension");
    }
    delta_vertex = dim == 0 ? opt.steps * lengths[1] : opt.steps;
  }
  gt_graph* raw_graph = nullptr;
  if (gt_graph_grid(lengths, 2, 0, &raw_graph) != GT_OK) return complain_api();
  GraphPtr graph(raw_graph);
  gt_basis* raw_basis = nullptr;
  if (gt_basis_create(graph.get(), 0.0, 0, &raw_basis) != GT_OK) return complain_api();
  BasisPtr basis(raw_basis);
  std::vector<double> y_spectral(static_cast<size_t>(n), 0.0);
  if (gt_spectral_translate(basis.get(), x.data(), delta_vertex, opt.scaled ? 1 : 0,
                            y_spectral.data()) != GT_OK) {
    return complain_api();
  }

  const int maxval = gt_image_maxval(image.get());
  const char* suffixes[2] = {"graphical", "spectral"};
  const std::vector<double>* outputs[2] = {&y_graphical, &y_spectral};
  for (int leg = 0; leg < 2; ++leg) {
    const char* suffix = suffixes[leg];
    gt_image* raw_out = nullptr;
    if (gt_signal_to_image(lengths, 2, 0, outputs[leg]->data(), maxval, &raw_out) != GT_OK) {
      return complain_api();
    }
    ImagePtr out_image(raw_out);
    char* pgm = nullptr;
    if (gt_image_write_pgm(out_image.get(), &pgm) != GT_OK) return complain_api();
    StringPtr owned(pgm);
    const std::string path = opt.prefix + "_" + suffix + ".pgm";
    if (!write_output(path, owned.get(), rc)) return rc;
    std::cout << "wrote " << path << "\n";
  }

  gt_comparison report = {};
  if (gt_compare_signals(y_graphical.data(), y_spectral.data(), n, x.data(), 1e-6, &report) !=
      GT_OK) {
    return complain_api();
  }
  print_comparison(report, true, "graphical", "spectral");
  return kExitOk;
}

struct ExportDotOptions {
  std::string graph_path;
  std::string map_path;
  bool edges = false;
  std::string output;
};

int run_export_dot(const ExportDotOptions& opt) {
  int rc = kExitOk;
  GraphPtr graph;
  MapPtr map;
  if (!load_graph(opt.graph_path, graph, rc)) return rc;
  if (!load_map(opt.map_path, map, rc)) return rc;
  char* text = nullptr;
  if (gt_export_dot(graph.get(), map.get(), opt.edges ? 1 : 0, &text) != GT_OK) {
    return complain_api();
  }
  StringPtr owned(text);
  if (!write_output(opt.output, owned.get(), rc)) return rc;
  return kExitOk;
}

struct ConjectureScanOptions {
  std::string grid;
  bool cyclic = false;
  bool require_complete = false;
  std::string output;
  BudgetFlags budget;
};

int run_conjecture_scan(const ConjectureScanOptions& opt) {
  int rc = kExitOk;
  std::vector<int> lengths;
  if (!parse_grid_lengths(opt.grid, lengths, rc)) return rc;
  const int dims = static_cast<int>(lengths.size());
  const int cyclic = opt.cyclic ? 1 : 0;

  gt_graph* raw_graph = nullptr;
  if (gt_graph_grid(lengths.data(), dims, cyclic, &raw_graph) != GT_OK) return complain_api();
  GraphPtr graph(raw_graph);

  const bool hypotheses = cyclic
                              ? gt_grid_satisfies_cyclic_hypotheses(lengths.data(), dims, cyclic)
                              : gt_grid_satisfies_noncyclic_hypotheses(lengths.data(), dims, cyclic);

  // The known achievable domain size primes the bound: the geometrical +e1
  // domain on noncyclic grids, every vertex on cyclic grids that provably
  // carry perfect translations.
  long long seed = 0;
  if (!opt.cyclic) {
    if (gt_grid_domain_lower_bound(lengths.data(), dims, &seed) != GT_OK) return complain_api();
  } else if (hypotheses) {
    seed = gt_graph_vertex_count(graph.get());
  }

  std::cout << "grid: " << opt.grid << (opt.cyclic ? " cyclic" : " noncyclic") << "\n";
  std::cout << "hypotheses: " << (hypotheses ? "satisfied" : "not satisfied") << "\n";
  std::cout << "seed: " << seed << "\n";

  gt_search_result* raw = nullptr;
  if (gt_search_max(graph.get(), &opt.budget.budget, static_cast<int>(seed), &raw) != GT_OK) {
    return complain_api();
  }
  ResultPtr result(raw);

  const bool complete = gt_search_result_complete(result.get()) == 1;
  std::cout << "status: " << (complete ? "complete" : "exhausted") << "\n";
  std::cout << "best_c: " << gt_search_result_best_domain(result.get()) << "\n";
  std::cout << "witnesses: " << gt_search_result_witness_count(result.get()) << "\n";
  std::cout << "capped: " << (gt_search_result_witnesses_capped(result.get()) ? "yes" : "no")
            << "\n";

  int geometrical = 0;
  const int count = gt_search_result_witness_count(result.get());
  for (int i = 0; i < count; ++i) {
    gt_map* raw_witness = nullptr;
    if (gt_search_result_witness(result.get(), i, &raw_witness) != GT_OK) return complain_api();
    MapPtr witness(raw_witness);
    int matched = 0;
    if (gt_map_matches_geometrical(lengths.data(), dims, cyclic, witness.get(), &matched,
                                   nullptr, nullptr) != GT_OK) {
      return complain_api();
    }
    geometrical += matched;
  }
  std::cout << "geometrical: " << geometrical << "\n";
  std::cout << "non_geometrical: " << (count - geometrical) << "\n";

  if (!opt.output.empty()) {
    const std::string text = render_witnesses(result.get(), rc);
    if (rc != kExitOk) return rc;
    if (!write_output(opt.output, text, rc)) return rc;
  }
  if (opt.require_complete && !complete) {
    return complain("search exhausted its budget before completing");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neighborhood-preserving graph translations: generation, verification,\n"
               "search, orbits, signal translation, and the spectral baseline."};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a grid graph as an edge list");
  gen_cmd->add_option("--grid", gen.grid, "grid lengths, e.g. 6x5")->required();
  gen_cmd->add_flag("--cyclic", gen.cyclic, "wrap every dimension");
  gen_cmd->add_option("-o,--output", gen.output, "output file (default stdout)");

  VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check the candidate-translation rules for a map");
  verify_cmd->add_option("--graph", verify.graph_path, "edge-list file")->required();
  verify_cmd->add_option("--map", verify.map_path, "vertex-map file")->required();
  verify_cmd->add_option("--expect", verify.expect, "candidate|not-candidate; mismatch exits 1")
      ->check(CLI::IsMember({"candidate", "not-candidate"}));

  ClassifyOptions classify;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Classify a map as not-candidate, candidate, graphical, or perfect");
  classify_cmd->add_option("--graph", classify.graph_path, "edge-list file")->required();
  classify_cmd->add_option("--map", classify.map_path, "vertex-map file")->required();
  classify_cmd->add_option("--grid", classify.grid,
                           "grid lengths of the graph; enables the geometrical check");
  classify_cmd->add_flag("--cyclic", classify.cyclic, "the grid is cyclic");
  classify_cmd->add_option("--expect", classify.expect,
                           "not-candidate|candidate|graphical|perfect; mismatch exits 1")
      ->check(CLI::IsMember({"not-candidate", "candidate", "graphical", "perfect"}));
  classify.budget.attach(classify_cmd);

  SearchOptions search;
  CLI::App* search_cmd =
      app.add_subcommand("search", "Find maximum-domain candidate translations");
  search_cmd->add_option("--graph", search.graph_path, "edge-list file")->required();
  search_cmd->add_option("--seed", search.seed, "known achievable domain size to prime the bound");
  search_cmd->add_flag("--require-complete", search.require_complete,
                       "exit 1 if the budget runs out first");
  search_cmd->add_option("-o,--output", search.output, "write witness maps to this file");
  search.budget.attach(search_cmd);

  PerfectOptions perfect;
  CLI::App* perfect_cmd =
      app.add_subcommand("perfect", "Find perfect (total bijective) translations");
  CLI::Option* perfect_graph_opt =
      perfect_cmd->add_option("--graph", perfect.graph_path, "edge-list file");
  perfect_cmd->add_option("--grid", perfect.grid, "grid lengths, e.g. 6x5 (instead of --graph)")
      ->excludes(perfect_graph_opt);
  perfect_cmd->add_flag("--cyclic", perfect.cyclic, "the grid is cyclic");
  perfect_cmd->add_flag("--require-complete", perfect.require_complete,
                        "exit 1 if the budget runs out first");
  perfect_cmd->add_option("-o,--output", perfect.output, "write the maps to this file");
  perfect.budget.attach(perfect_cmd);

  OrbitsOptions orbits;
  CLI::App* orbits_cmd = app.add_subcommand("orbits", "Follow vertices under repeated application");
  orbits_cmd->add_option("--map", orbits.map_path, "vertex-map file")->required();
  orbits_cmd->add_option("--start", orbits.start, "single start vertex (default: all)");
  orbits_cmd->add_flag("--trace", orbits.trace, "print the visited vertices");

  TranslateOptions translate;
  CLI::App* translate_cmd =
      app.add_subcommand("translate", "Apply a translation to a signal");
  translate_cmd->add_option("--map", translate.map_path, "vertex-map file")->required();
  translate_cmd->add_option("--signal", translate.signal_path, "CSV signal file")->required();
  translate_cmd->add_option("--steps", translate.steps, "apply the map this many times");
  translate_cmd->add_option("--fill", translate.fill, "value for vertices with no preimage");
  translate_cmd->add_option("-o,--output", translate.output, "output file (default stdout)");

  SpectralOptions spectral;
  CLI::App* spectral_cmd =
      app.add_subcommand("spectral", "Translate a signal by spectral convolution");
  spectral_cmd->add_option("--graph", spectral.graph_path, "edge-list file")->required();
  spectral_cmd->add_option("--signal", spectral.signal_path, "CSV signal file")->required();
  spectral_cmd->add_option("--to-vertex", spectral.to_vertex, "delta position")->required();
  spectral_cmd->add_flag("--scaled", spectral.scaled, "multiply by sqrt(n)");
  spectral_cmd->add_option("--tol", spectral.tol, "eigensolver tolerance (default 1e-10)");
  spectral_cmd->add_option("--max-sweeps", spectral.max_sweeps,
                           "eigensolver sweep limit (default 100)");
  spectral_cmd->add_option("-o,--output", spectral.output, "output file (default stdout)");

  CompareOptions compare;
  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare two signals");
  compare_cmd->add_option("--first", compare.first_path, "CSV signal file")->required();
  compare_cmd->add_option("--second", compare.second_path, "CSV signal file")->required();
  compare_cmd->add_option("--reference", compare.reference_path,
                          "CSV signal for energy ratios");
  compare_cmd->add_option("--threshold", compare.threshold, "support threshold (default 1e-6)");

  DemoImageOptions demo;
  CLI::App* demo_cmd = app.add_subcommand(
      "demo-image", "Shift an image graphically and spectrally, then compare");
  demo_cmd->add_option("--pgm", demo.pgm_path, "plain P2 PGM file")->required();
  demo_cmd->add_option("--shift", demo.shift, "+e1 right, -e1 left, +e2 down, -e2 up");
  demo_cmd->add_option("--steps", demo.steps, "shift distance in pixels");
  demo_cmd->add_option("--fill", demo.fill, "value for uncovered pixels");
  demo_cmd->add_flag("--scaled", demo.scaled, "sqrt(n) scaling for the spectral leg");
  demo_cmd->add_option("--delta-vertex", demo.delta_vertex,
                       "override the spectral delta position");
  demo_cmd->add_option("--out-prefix", demo.prefix, "prefix for the two output PGMs");

  ExportDotOptions export_dot;
  CLI::App* export_cmd = app.add_subcommand("export-dot", "Render a translation as a DOT digraph");
  export_cmd->add_option("--graph", export_dot.graph_path, "edge-list file")->required();
  export_cmd->add_option("--map", export_dot.map_path, "vertex-map file")->required();
  export_cmd->add_flag("--edges", export_dot.edges, "include the graph edges");
  export_cmd->add_option("-o,--output", export_dot.output, "output file (default stdout)");

  ConjectureScanOptions scan;
  CLI::App* scan_cmd = app.add_subcommand(
      "conjecture-scan",
      "Search a grid for maximum-domain translations and count geometrical witnesses");
  scan_cmd->add_option("--grid", scan.grid, "grid lengths, e.g. 6x6")->required();
  scan_cmd->add_flag("--cyclic", scan.cyclic, "wrap every dimension");
  scan_cmd->add_flag("--require-complete", scan.require_complete,
                     "exit 1 if the budget runs out first");
  scan_cmd->add_option("-o,--output", scan.output, "write witness maps to this file");
  scan.budget.attach(scan_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*gen_cmd) return run_gen(gen);
  if (*verify_cmd) return run_verify(verify);
  if (*classify_cmd) return run_classify(classify);
  if (*search_cmd) return run_search(search);
  if (*perfect_cmd) return run_perfect(perfect);
  if (*orbits_cmd) return run_orbits(orbits);
  if (*translate_cmd) return run_translate(translate);
  if (*spectral_cmd) return run_spectral(spectral);
  if (*compare_cmd) return run_compare(compare);
  if (*demo_cmd) return run_demo_image(demo);
  if (*export_cmd) return run_export_dot(export_dot);
  if (*scan_cmd) return run_conjecture_scan(scan);
  return 2;
}
