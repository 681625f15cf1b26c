#include "translation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "error.hpp"
#include "search.hpp"

namespace gtrans {

VertexMap::VertexMap(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  for (int v = 0; v < n; ++v) {
    int w = images_[v];
    if (w != kOmega && (w < 0 || w >= n))
      fail(Status::InvalidArgument,
           "image of vertex " + std::to_string(v) + " is out of range: " + std::to_string(w));
    if (w != kOmega) ++domain_size_;
  }
}

int VertexMap::image(int v) const {
  if (v < 0 || v >= size()) fail(Status::InvalidArgument, "vertex out of range");
  return images_[v];
}

std::vector<int> VertexMap::domain() const {
  std::vector<int> out;
  out.reserve(domain_size_);
  for (int v = 0; v < size(); ++v)
    if (images_[v] != kOmega) out.push_back(v);
  return out;
}

std::string Violation::describe() const {
  switch (kind) {
    case ViolationKind::None:
      return "none";
    case ViolationKind::NotNeighbor:
      return "image of vertex " + std::to_string(v1) + " is not one of its neighbors";
    case ViolationKind::NotInjective:
      return "vertices " + std::to_string(v1) + " and " + std::to_string(v2) +
             " share the same image";
    case ViolationKind::EdgeDropped:
      return "edge (" + std::to_string(v1) + ", " + std::to_string(v2) +
             ") is not preserved: the images are not adjacent";
    case ViolationKind::NonEdgeCreated:
      return "non-adjacent vertices " + std::to_string(v1) + " and " + std::to_string(v2) +
             " have adjacent images";
  }
  return "unknown";
}

bool is_candidate(const Graph& g, const VertexMap& f, Violation* witness) {
  if (f.size() != g.vertex_count())
    fail(Status::InvalidArgument, "map size does not match the graph");
  auto report = [&](ViolationKind kind, int v1, int v2) {
    if (witness) *witness = Violation{kind, v1, v2};
    return false;
  };
  const auto& img = f.images();
  const int n = f.size();
  for (int v = 0; v < n; ++v) {
    if (img[v] == kOmega) continue;
    if (!g.are_adjacent(v, img[v])) return report(ViolationKind::NotNeighbor, v, -1);
    for (int u = 0; u < v; ++u) {
      if (img[u] == kOmega) continue;
      if (img[u] == img[v]) return report(ViolationKind::NotInjective, u, v);
      bool edge = g.are_adjacent(u, v);
      bool image_edge = g.are_adjacent(img[u], img[v]);
      if (edge && !image_edge) return report(ViolationKind::EdgeDropped, u, v);
      if (!edge && image_edge) return report(ViolationKind::NonEdgeCreated, u, v);
    }
  }
  if (witness) *witness = Violation{};
  return true;
}

bool is_perfect(const Graph& g, const VertexMap& f) {
  if (f.size() != g.vertex_count())
    fail(Status::InvalidArgument, "map size does not match the graph");
  // Total + injective on a finite set implies bijective.
  return f.is_total() && is_candidate(g, f);
}

namespace {

// Signed unit step between adjacent grid vertices, as (dim, sign).
std::pair<int, int> unit_step(const GridSpec& spec, const std::vector<int>& from,
                              const std::vector<int>& to) {
  int dim = -1, sign = 0;
  for (int i = 0; i < spec.dims(); ++i) {
    int diff = to[i] - from[i];
    if (spec.cyclic) {
      int len = spec.lengths[i];
      diff = ((diff % len) + len) % len;
      if (diff == len - 1) diff = -1;
    }
    if (diff == 0) continue;
    if ((diff != 1 && diff != -1) || dim != -1) return {-1, 0};
    dim = i;
    sign = diff;
  }
  return {dim, sign};
}

VertexMap shift_map(const GridSpec& spec, int dim, int sign) {
  const int n = static_cast<int>(spec.vertex_count());
  std::vector<int> images(n, kOmega);
  for (int v = 0; v < n; ++v) {
    auto coords = spec.coords_of(v);
    coords[dim] += sign;
    int len = spec.lengths[dim];
    if (spec.cyclic) {
      coords[dim] = ((coords[dim] % len) + len) % len;
    } else if (coords[dim] < 0 || coords[dim] >= len) {
      continue;
    }
    images[v] = spec.index_of(coords);
  }
  return VertexMap(std::move(images));
}

}  // namespace

VertexMap geometrical(const GridSpec& spec, int dim, int sign) {
  validate_grid_spec(spec);
  if (dim < 0 || dim >= spec.dims())
    fail(Status::InvalidArgument, "geometrical translation dimension out of range");
  if (sign != 1 && sign != -1)
    fail(Status::InvalidArgument, "geometrical translation sign must be +1 or -1");
  return shift_map(spec, dim, sign);
}

std::optional<std::pair<int, int>> matches_geometrical(const GridSpec& spec, const VertexMap& f) {
  validate_grid_spec(spec);
  if (f.size() != spec.vertex_count()) fail(Status::InvalidArgument, "map size does not match the grid");
  for (int dim = 0; dim < spec.dims(); ++dim)
    for (int sign : {+1, -1})
      if (f == shift_map(spec, dim, sign)) return std::make_pair(dim, sign);
  return std::nullopt;
}

VertexMap compose(const VertexMap& first, const VertexMap& then) {
  if (first.size() != then.size()) fail(Status::InvalidArgument, "composed maps differ in size");
  const int n = first.size();
  std::vector<int> images(n, kOmega);
  for (int v = 0; v < n; ++v) {
    int mid = first.image(v);
    if (mid == kOmega) continue;
    images[v] = then.image(mid);
  }
  return VertexMap(std::move(images));
}

VertexMap contaminate(const GridSpec& spec, int seed_v, int seed_image, bool check_by_propagation) {
  validate_grid_spec(spec);
  if (!satisfies_cyclic_hypotheses(spec))
    fail(Status::Precondition,
         "contamination requires a cyclic grid with every dimension length >= 5");
  const int n = static_cast<int>(spec.vertex_count());
  if (seed_v < 0 || seed_v >= n || seed_image < 0 || seed_image >= n)
    fail(Status::InvalidArgument, "seed vertex out of range");
  auto from = spec.coords_of(seed_v);
  auto to = spec.coords_of(seed_image);
  auto [dim, sign] = unit_step(spec, from, to);
  if (dim < 0)
    fail(Status::Precondition, "seed image " + std::to_string(seed_image) +
                                   " is not adjacent to seed vertex " + std::to_string(seed_v));
  VertexMap result = shift_map(spec, dim, sign);

  if (check_by_propagation) {
    // Literal propagation: each known assignment forces the same step on all
    // neighbors; spread it breadth-first and compare with the closed form.
    const Graph g = grid_graph(spec);
    std::vector<int> assigned(n, -2);
    assigned[seed_v] = seed_image;
    std::deque<int> queue{seed_v};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      auto vc = spec.coords_of(v);
      auto step = unit_step(spec, vc, spec.coords_of(assigned[v]));
      for (int w : g.neighbors(v)) {
        auto wc = spec.coords_of(w);
        wc[step.first] = (wc[step.first] + step.second + spec.lengths[step.first]) %
                         spec.lengths[step.first];
        int forced = spec.index_of(wc);
        if (assigned[w] == -2) {
          assigned[w] = forced;
          queue.push_back(w);
        } else if (assigned[w] != forced) {
          fail(Status::Precondition, "contamination propagated inconsistent images");
        }
      }
    }
    if (assigned != result.images())
      fail(Status::Precondition, "propagated map disagrees with the closed-form shift");
  }
  return result;
}

OrbitReport orbit(const VertexMap& f, int start) {
  if (start < 0 || start >= f.size()) fail(Status::InvalidArgument, "orbit start out of range");
  OrbitReport report;
  std::vector<int> first_seen(f.size(), -1);
  int current = start;
  while (true) {
    if (first_seen[current] >= 0) {
      report.kind = OrbitReport::Kind::Periodic;
      report.entry_offset = first_seen[current];
      report.period = static_cast<int>(report.visited.size()) - report.entry_offset;
      return report;
    }
    first_seen[current] = static_cast<int>(report.visited.size());
    report.visited.push_back(current);
    int next = f.image(current);
    if (next == kOmega) {
      report.kind = OrbitReport::Kind::Absorbed;
      report.steps_to_omega = static_cast<int>(report.visited.size());
      return report;
    }
    current = next;
  }
}

std::vector<double> apply_to_signal(const VertexMap& f, const std::vector<double>& x, double fill) {
  if (static_cast<int>(x.size()) != f.size())
    fail(Status::InvalidArgument, "signal length does not match the map");
  std::vector<double> y(x.size(), fill);
  std::vector<bool> written(x.size(), false);
  for (int v = 0; v < f.size(); ++v) {
    int w = f.image(v);
    if (w == kOmega) continue;
    if (written[w])
      fail(Status::Precondition, "map is not injective on its domain; signal transport is ambiguous");
    written[w] = true;
    y[w] = x[v];
  }
  return y;
}

Ternary is_graphical(const Graph& g, const VertexMap& f, const SearchBudget& budget) {
  if (!is_candidate(g, f)) return Ternary::No;
  if (g.vertex_count() > budget.max_vertices) return Ternary::Undecided;
  const int c = f.domain_size();
  bool undecided = false;
  for (int v : f.domain()) {
    PinnedMax pinned = max_domain_with_pin(g, v, f.image(v), budget);
    if (pinned.best_domain > c) return Ternary::No;  // a larger candidate is a witness either way
    if (pinned.status == PinnedStatus::Exhausted) {
      undecided = true;
      continue;
    }
    if (pinned.best_domain < c)
      fail(Status::Precondition, "pinned search returned a maximum below the pinned map's domain");
  }
  return undecided ? Ternary::Undecided : Ternary::Yes;
}

Classification classify(const Graph& g, const VertexMap& f, const SearchBudget& budget) {
  Classification result;
  result.domain_size = f.domain_size();
  if (!is_candidate(g, f, &result.violation)) {
    result.cls = TranslationClass::NotCandidate;
    return result;
  }
  if (f.is_total()) {
    // Total candidates are bijections, and no candidate can exceed domain n.
    result.cls = TranslationClass::Perfect;
    return result;
  }
  switch (is_graphical(g, f, budget)) {
    case Ternary::Yes:
      result.cls = TranslationClass::Graphical;
      break;
    case Ternary::No:
      result.cls = TranslationClass::Candidate;
      break;
    case Ternary::Undecided:
      result.cls = TranslationClass::Candidate;
      result.maximality_decided = false;
      break;
  }
  return result;
}

VertexMap parse_map(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<int> images;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long v = 0;
    std::string arrow, target, extra;
    if (!(ls >> v >> arrow >> target) || arrow != "->" || (ls >> extra))
      fail(Status::ParseError,
           "line " + std::to_string(line_no) + ": expected \"<v> -> <w>\" or \"<v> -> omega\"");
    if (v != static_cast<long long>(images.size()))
      fail(Status::ParseError, "line " + std::to_string(line_no) + ": expected vertex " +
                                   std::to_string(images.size()) + ", got " + std::to_string(v) +
                                   " (vertices must be ascending and complete)");
    if (target == "omega") {
      images.push_back(kOmega);
    } else {
      try {
        size_t pos = 0;
        long long w = std::stoll(target, &pos);
        if (pos != target.size() || w < 0) throw std::invalid_argument("");
        images.push_back(static_cast<int>(w));
      } catch (const std::exception&) {
        fail(Status::ParseError,
             "line " + std::to_string(line_no) + ": image must be a vertex index or \"omega\"");
      }
    }
  }
  const long long n = static_cast<long long>(images.size());
  for (size_t v = 0; v < images.size(); ++v)
    if (images[v] >= n)
      fail(Status::ParseError, "vertex " + std::to_string(v) + " maps to " +
                                   std::to_string(images[v]) + ", outside [0, " + std::to_string(n) + ")");
  return VertexMap(std::move(images));
}

std::string format_map(const VertexMap& f) {
  std::ostringstream out;
  for (int v = 0; v < f.size(); ++v) {
    out << v << " -> ";
    if (f.image(v) == kOmega)
      out << "omega";
    else
      out << f.image(v);
    out << '\n';
  }
  return out.str();
}

}  // namespace gtrans
