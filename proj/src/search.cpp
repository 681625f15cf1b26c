#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>

#include "error.hpp"

namespace gtrans {
namespace {

using Clock = std::chrono::steady_clock;

// The wall clock is polled once per (kTimePollMask + 1) accepted assignments.
constexpr long long kTimePollMask = 4095;

constexpr int kUnassigned = -2;
constexpr int kNoFirstChoice = -3;  // branch sentinel when there is nothing to assign

enum class ChoiceOrder { NeighborsFirst, OmegaFirst, NeighborsOnly };

struct EngineConfig {
  ChoiceOrder order = ChoiceOrder::NeighborsFirst;
  bool bound_prune = false;  // discard paths that commit to more omegas than best allows
  bool collect = false;      // keep maximizers, not just the maximum
  int seed_best = 0;
  std::optional<std::pair<int, int>> pin;  // assignment made before the search starts
  const std::function<bool(const VertexMap&)>* visit = nullptr;
  bool allow_parallel = true;
};

struct EngineResult {
  SearchStatus status = SearchStatus::Complete;
  int best = 0;
  std::vector<VertexMap> witnesses;
  bool capped = false;
  long long nodes = 0;
};

struct WitnessBucket {
  long long found = 0;            // exact count of leaves seen at this level
  std::vector<VertexMap> kept;    // first witnesses in branch search order, up to the cap
};

// Leaves are recorded per domain size because the best can still grow while a
// branch runs; only the bucket at the final best level survives the merge.
using BucketMap = std::map<int, WitnessBucket>;

bool test_bit(const std::vector<uint64_t>& bits, int i) {
  return bits[i >> 6] >> (i & 63) & 1;
}

void set_bit(std::vector<uint64_t>& bits, int i) { bits[i >> 6] |= uint64_t{1} << (i & 63); }

void clear_bit(std::vector<uint64_t>& bits, int i) { bits[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

// Depth-first search over partial maps. Vertices are assigned in ascending
// order; every accepted assignment keeps injectivity and both directions of
// edge preservation against the vertices assigned so far, so each completed
// leaf is a candidate translation and every candidate shows up as a leaf.
// Top-level branches fix the first assignment, which lets workers split the
// tree without sharing any state beyond the best domain and the budget flags.
class Engine {
 public:
  Engine(const Graph& g, const SearchBudget& budget, const EngineConfig& cfg)
      : g_(g),
        budget_(budget),
        cfg_(cfg),
        n_(g.vertex_count()),
        words_((n_ + 63) / 64),
        adj_(static_cast<size_t>(n_) * words_) {
    for (int v = 0; v < n_; ++v)
      for (int w : g.neighbors(v)) set_bit_row(v, w);
    best_.store(cfg_.seed_best, std::memory_order_relaxed);
  }

  EngineResult run();

 private:
  struct State {
    std::vector<int> image;      // kUnassigned marks open slots
    std::vector<uint64_t> used;  // image vertices taken so far
    std::vector<int> trail;      // assigned vertices, in assignment order
    int omega_count = 0;
    BucketMap* out = nullptr;
  };

  void set_bit_row(int v, int w) {
    adj_[static_cast<size_t>(v) * words_ + (w >> 6)] |= uint64_t{1} << (w & 63);
  }

  bool adjacent(int u, int v) const {
    return adj_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63) & 1;
  }

  bool stopped() const {
    return out_of_budget_.load(std::memory_order_relaxed) ||
           visitor_stop_.load(std::memory_order_relaxed);
  }

  // Counts one accepted assignment against the node and time budgets.
  bool count_node() {
    long long total = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_.max_nodes > 0 && total > budget_.max_nodes) {
      out_of_budget_.store(true, std::memory_order_relaxed);
      return false;
    }
    if (budget_.time_limit_seconds > 0 && (total & kTimePollMask) == 0) {
      double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
      if (elapsed > budget_.time_limit_seconds) {
        out_of_budget_.store(true, std::memory_order_relaxed);
        return false;
      }
    }
    return true;
  }

  bool leaf(State& st) {
    if (cfg_.visit) {
      VertexMap f(st.image);
      if (!(*cfg_.visit)(f)) {
        visitor_stop_.store(true, std::memory_order_relaxed);
        return false;
      }
      return true;
    }
    const int c = n_ - st.omega_count;
    int cur = best_.load(std::memory_order_relaxed);
    while (c > cur)
      if (best_.compare_exchange_weak(cur, c, std::memory_order_relaxed)) cur = c;
    if (c < cur) return true;  // another leaf took the lead while this path was built
    if (cfg_.collect) {
      WitnessBucket& bucket = (*st.out)[c];
      ++bucket.found;
      if (static_cast<int>(bucket.kept.size()) < std::max(0, budget_.witness_cap))
        bucket.kept.emplace_back(st.image);
      // Levels below the current best can never be reported again.
      st.out->erase(st.out->begin(), st.out->lower_bound(best_.load(std::memory_order_relaxed)));
    }
    return true;
  }

  // `only` restricts the choice at this position; branches use it at position 0.
  bool dfs(State& st, int pos, std::optional<int> only) {
    if (stopped()) return false;
    if (pos == static_cast<int>(order_.size())) return leaf(st);
    const int v = order_[pos];
    auto try_choice = [&](int w) -> bool {
      if (only && *only != w) return true;
      if (w == kOmega) {
        if (cfg_.bound_prune &&
            st.omega_count + 1 > n_ - best_.load(std::memory_order_relaxed))
          return true;  // too many omegas left to still reach the best domain
      } else {
        if (test_bit(st.used, w)) return true;
        for (int u : st.trail) {
          const int x = st.image[u];
          if (x == kOmega) continue;
          if (adjacent(u, v) != adjacent(x, w)) return true;
        }
      }
      st.image[v] = w;
      st.trail.push_back(v);
      if (w == kOmega)
        ++st.omega_count;
      else
        set_bit(st.used, w);
      const bool keep_going = count_node() && dfs(st, pos + 1, std::nullopt);
      if (w == kOmega)
        --st.omega_count;
      else
        clear_bit(st.used, w);
      st.trail.pop_back();
      st.image[v] = kUnassigned;
      return keep_going;
    };
    if (cfg_.order == ChoiceOrder::OmegaFirst && !try_choice(kOmega)) return false;
    for (int w : g_.neighbors(v))
      if (!try_choice(w)) return false;
    if (cfg_.order == ChoiceOrder::NeighborsFirst && !try_choice(kOmega)) return false;
    return true;
  }

  void run_branch(int first_choice, BucketMap* out) {
    State st;
    st.image.assign(n_, kUnassigned);
    st.used.assign(words_, 0);
    st.trail.reserve(n_);
    st.out = out;
    if (cfg_.pin) {
      const auto [pv, pw] = *cfg_.pin;
      st.image[pv] = pw;
      set_bit(st.used, pw);
      st.trail.push_back(pv);
    }
    dfs(st, 0,
        first_choice == kNoFirstChoice ? std::optional<int>() : std::optional<int>(first_choice));
  }

  const Graph& g_;
  const SearchBudget& budget_;
  const EngineConfig& cfg_;
  const int n_;
  const int words_;
  std::vector<uint64_t> adj_;
  std::vector<int> order_;
  std::atomic<int> best_{0};
  std::atomic<bool> out_of_budget_{false};
  std::atomic<bool> visitor_stop_{false};
  std::atomic<long long> nodes_{0};
  Clock::time_point start_;
};

EngineResult Engine::run() {
  start_ = Clock::now();
  order_.reserve(n_);
  for (int v = 0; v < n_; ++v)
    if (!(cfg_.pin && cfg_.pin->first == v)) order_.push_back(v);

  std::vector<int> first_choices;
  if (order_.empty()) {
    first_choices.push_back(kNoFirstChoice);  // nothing to assign: evaluate the leaf once
  } else {
    const int v0 = order_[0];
    if (cfg_.order == ChoiceOrder::OmegaFirst) first_choices.push_back(kOmega);
    for (int w : g_.neighbors(v0)) first_choices.push_back(w);
    if (cfg_.order == ChoiceOrder::NeighborsFirst) first_choices.push_back(kOmega);
  }

  std::vector<BucketMap> buckets(first_choices.size());
  int workers = cfg_.allow_parallel ? std::max(1, budget_.jobs) : 1;
  workers = std::min(workers, static_cast<int>(first_choices.size()));

  std::exception_ptr error;
  if (workers <= 1) {
    try {
      for (size_t i = 0; i < first_choices.size() && !stopped(); ++i)
        run_branch(first_choices[i], &buckets[i]);
    } catch (...) {
      error = std::current_exception();
    }
  } else {
    std::atomic<size_t> next{0};
    std::mutex error_mu;
    auto body = [&] {
      try {
        for (;;) {
          const size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= first_choices.size() || stopped()) return;
          run_branch(first_choices[i], &buckets[i]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        out_of_budget_.store(true, std::memory_order_relaxed);  // wind down the other workers
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(body);
    for (std::thread& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  EngineResult result;
  result.nodes = nodes_.load(std::memory_order_relaxed);
  result.status = out_of_budget_.load(std::memory_order_relaxed) ? SearchStatus::Exhausted
                                                                 : SearchStatus::Complete;
  result.best = best_.load(std::memory_order_relaxed);
  if (cfg_.collect) {
    // Witnesses at the final best level, merged in branch order: each branch
    // kept a deterministic prefix of its own maximizers, so the merged set is
    // independent of the worker count.
    long long found = 0;
    for (BucketMap& branch : buckets) {
      auto it = branch.find(result.best);
      if (it == branch.end()) continue;
      found += it->second.found;
      for (VertexMap& f : it->second.kept) result.witnesses.push_back(std::move(f));
    }
    std::sort(result.witnesses.begin(), result.witnesses.end());
    const int cap = std::max(0, budget_.witness_cap);
    if (static_cast<int>(result.witnesses.size()) > cap) result.witnesses.resize(cap);
    result.capped = found > cap;
  }
  return result;
}

void check_search_size(const Graph& g, const SearchBudget& budget) {
  if (g.vertex_count() > budget.max_vertices)
    fail(Status::BudgetExceeded,
         "graph has " + std::to_string(g.vertex_count()) +
             " vertices but the search budget allows " + std::to_string(budget.max_vertices));
}

}  // namespace

SearchOutcome max_domain_translations(const Graph& g, const SearchBudget& budget,
                                      int seed_lower_bound) {
  check_search_size(g, budget);
  if (seed_lower_bound < 0 || seed_lower_bound > g.vertex_count())
    fail(Status::InvalidArgument, "seed lower bound out of range");
  EngineConfig cfg;
  cfg.order = ChoiceOrder::NeighborsFirst;
  cfg.bound_prune = true;
  cfg.collect = true;
  cfg.seed_best = seed_lower_bound;
  Engine engine(g, budget, cfg);
  EngineResult r = engine.run();
  return SearchOutcome{r.status, r.best, std::move(r.witnesses), r.capped, r.nodes};
}

PinnedMax max_domain_with_pin(const Graph& g, int v, int w, const SearchBudget& budget) {
  check_search_size(g, budget);
  if (v < 0 || v >= g.vertex_count()) fail(Status::InvalidArgument, "pinned vertex out of range");
  if (w < 0 || w >= g.vertex_count())
    fail(Status::InvalidArgument, "pinned image must be a vertex");
  if (!g.are_adjacent(v, w)) return PinnedMax{PinnedStatus::NoCandidate, 0, 0};
  EngineConfig cfg;
  cfg.order = ChoiceOrder::NeighborsFirst;
  cfg.bound_prune = true;
  cfg.seed_best = 1;  // the pin by itself is already a candidate
  cfg.pin = std::pair<int, int>{v, w};
  Engine engine(g, budget, cfg);
  EngineResult r = engine.run();
  return PinnedMax{
      r.status == SearchStatus::Complete ? PinnedStatus::Complete : PinnedStatus::Exhausted,
      r.best, r.nodes};
}

SearchOutcome perfect_translations(const Graph& g, const SearchBudget& budget) {
  check_search_size(g, budget);
  EngineConfig cfg;
  cfg.order = ChoiceOrder::NeighborsOnly;
  cfg.collect = true;
  cfg.seed_best = g.vertex_count();  // every total assignment has full domain
  Engine engine(g, budget, cfg);
  EngineResult r = engine.run();
  const int best = r.witnesses.empty() ? 0 : r.best;
  return SearchOutcome{r.status, best, std::move(r.witnesses), r.capped, r.nodes};
}

SearchOutcome perfect_translations(const GridSpec& spec, const SearchBudget& budget) {
  validate_grid_spec(spec);
  if (satisfies_cyclic_hypotheses(spec)) {
    // One assignment contaminates the whole grid, so every perfect translation
    // extends some unit step out of vertex 0 and all of those steps work.
    std::vector<VertexMap> shifts;
    for (int dim = 0; dim < spec.dims(); ++dim) {
      for (int sign : {+1, -1}) {
        std::vector<int> coords(spec.dims(), 0);
        coords[dim] = sign > 0 ? 1 : spec.lengths[dim] - 1;
        shifts.push_back(contaminate(spec, 0, spec.index_of(coords)));
      }
    }
    std::sort(shifts.begin(), shifts.end());
    const long long found = static_cast<long long>(shifts.size());
    const int cap = std::max(0, budget.witness_cap);
    if (static_cast<int>(shifts.size()) > cap) shifts.resize(cap);
    SearchOutcome out;
    out.status = SearchStatus::Complete;
    out.best_domain = static_cast<int>(spec.vertex_count());
    out.witnesses = std::move(shifts);
    out.witnesses_capped = found > cap;
    out.nodes_expanded = 0;
    return out;
  }
  return perfect_translations(grid_graph(spec), budget);
}

SearchStatus enumerate_candidates(const Graph& g, const SearchBudget& budget,
                                  const std::function<bool(const VertexMap&)>& visit) {
  check_search_size(g, budget);
  if (!visit) fail(Status::InvalidArgument, "candidate enumeration requires a visitor");
  EngineConfig cfg;
  cfg.order = ChoiceOrder::OmegaFirst;
  cfg.visit = &visit;
  cfg.allow_parallel = false;  // the visitor contract is lexicographic order
  Engine engine(g, budget, cfg);
  return engine.run().status;
}

long long grid_lower_bound(const GridSpec& spec) {
  validate_grid_spec(spec);
  if (spec.cyclic)
    fail(Status::InvalidArgument, "the domain lower bound applies to noncyclic grids");
  long long tail = 1;
  for (size_t i = 1; i < spec.lengths.size(); ++i) tail *= spec.lengths[i];
  return (spec.lengths[0] - 1) * tail;
}

}  // namespace gtrans
