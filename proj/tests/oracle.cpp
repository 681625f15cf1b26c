#include "oracle.hpp"

#include <algorithm>

namespace oracle {

AdjacencySets::AdjacencySets(const gtrans::Graph& g) : n(g.vertex_count()) {
  adj.resize(static_cast<size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)].insert(v);
    adj[static_cast<size_t>(v)].insert(u);
  }
}

bool is_candidate(const AdjacencySets& g, const std::vector<int>& images) {
  const int n = g.n;
  for (int v = 0; v < n; ++v) {
    const int w = images[static_cast<size_t>(v)];
    if (w == kOmega) continue;
    if (w < 0 || w >= n || !g.edge(v, w)) return false;
  }
  for (int a = 0; a < n; ++a) {
    if (images[static_cast<size_t>(a)] == kOmega) continue;
    for (int b = a + 1; b < n; ++b) {
      if (images[static_cast<size_t>(b)] == kOmega) continue;
      const int fa = images[static_cast<size_t>(a)];
      const int fb = images[static_cast<size_t>(b)];
      if (fa == fb) return false;
      if (g.edge(a, b) != g.edge(fa, fb)) return false;
    }
  }
  return true;
}

namespace {

int domain_size(const std::vector<int>& images) {
  int c = 0;
  for (int w : images) c += w != kOmega;
  return c;
}

// Runs fn over every map in the product space. choice 0 is omega, choice i
// is the (i-1)-th neighbor.
template <typename Fn>
void for_each_map(const gtrans::Graph& g, Fn&& fn) {
  const int n = g.vertex_count();
  std::vector<int> choice(static_cast<size_t>(n), 0);
  std::vector<int> images(static_cast<size_t>(n), kOmega);
  for (;;) {
    fn(const_cast<const std::vector<int>&>(images));
    int v = n - 1;
    while (v >= 0 && choice[static_cast<size_t>(v)] == g.degree(v)) {
      choice[static_cast<size_t>(v)] = 0;
      images[static_cast<size_t>(v)] = kOmega;
      --v;
    }
    if (v < 0) return;
    const int next = ++choice[static_cast<size_t>(v)];
    images[static_cast<size_t>(v)] = g.neighbors(v)[static_cast<size_t>(next - 1)];
  }
}

}  // namespace

ScanReport scan(const gtrans::Graph& g) {
  const AdjacencySets sets(g);
  const int n = g.vertex_count();
  ScanReport report;
  for_each_map(g, [&](const std::vector<int>& images) {
    if (!is_candidate(sets, images)) return;
    ++report.candidates;
    const int c = domain_size(images);
    if (c == n) ++report.perfect;
    if (c > report.best) {
      report.best = c;
      report.witnesses.clear();
    }
    if (c == report.best) report.witnesses.push_back(images);
  });
  std::sort(report.witnesses.begin(), report.witnesses.end());
  return report;
}

int pinned_max(const gtrans::Graph& g, int v, int w) {
  const AdjacencySets sets(g);
  int best = -1;
  for_each_map(g, [&](const std::vector<int>& images) {
    if (images[static_cast<size_t>(v)] != w) return;
    if (!is_candidate(sets, images)) return;
    best = std::max(best, domain_size(images));
  });
  return best;
}

bool is_graphical(const gtrans::Graph& g, const std::vector<int>& images) {
  const AdjacencySets sets(g);
  if (!is_candidate(sets, images)) return false;
  const int c = domain_size(images);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int w = images[static_cast<size_t>(v)];
    if (w == kOmega) continue;
    if (pinned_max(g, v, w) > c) return false;
  }
  return true;
}

long long count_graphical(const gtrans::Graph& g) {
  const AdjacencySets sets(g);
  const int n = g.vertex_count();
  std::vector<std::vector<int>> candidates;
  std::vector<std::vector<int>> pin_best(static_cast<size_t>(n),
                                         std::vector<int>(static_cast<size_t>(n), -1));
  for_each_map(g, [&](const std::vector<int>& images) {
    if (!is_candidate(sets, images)) return;
    candidates.push_back(images);
    const int c = domain_size(images);
    for (int v = 0; v < n; ++v) {
      const int w = images[static_cast<size_t>(v)];
      if (w == kOmega) continue;
      int& best = pin_best[static_cast<size_t>(v)][static_cast<size_t>(w)];
      best = std::max(best, c);
    }
  });
  long long graphical = 0;
  for (const auto& images : candidates) {
    const int c = domain_size(images);
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      const int w = images[static_cast<size_t>(v)];
      if (w == kOmega) continue;
      maximal = pin_best[static_cast<size_t>(v)][static_cast<size_t>(w)] <= c;
    }
    graphical += maximal;
  }
  return graphical;
}

}  // namespace oracle
