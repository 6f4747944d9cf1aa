#include "mdim/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>

namespace mdim {

namespace {

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

// Tests one candidate set given as slots into the vertex range. Each worker
// owns one instance; instances are not shared.
class Checker {
 public:
  virtual ~Checker() = default;
  virtual bool passes(std::span<const std::size_t> slots) = 0;
};

// r(v|Q) packed into one integer per vertex; uniqueness by sorting.
// Doubly resolving packs r(v|Q) - d(v, q_1) * I instead, which is unique
// exactly when no pair differs by a constant vector.
class PackedChecker final : public Checker {
 public:
  PackedChecker(const DistanceMatrix& d, bool doubly) : d_(d), doubly_(doubly) {
    const auto diameter = static_cast<std::uint64_t>(d.diameter());
    base_ = doubly ? 2 * diameter + 1 : diameter + 1;
    keys_.resize(static_cast<std::size_t>(d.size()));
  }

  bool passes(std::span<const std::size_t> slots) override {
    if (!fits(slots.size())) return fallback(slots);
    const int n = d_.size();
    const auto offset = static_cast<std::int64_t>(doubly_ ? d_.diameter() : 0);
    for (int v = 0; v < n; ++v) {
      const auto row = d_.row(VertexId::from_slot(static_cast<std::size_t>(v)));
      const std::int64_t anchor = doubly_ ? row[slots[0]] : 0;
      std::uint64_t key = 0;
      for (std::size_t i = doubly_ ? 1 : 0; i < slots.size(); ++i) {
        key = key * base_ + static_cast<std::uint64_t>(row[slots[i]] - anchor + offset);
      }
      keys_[static_cast<std::size_t>(v)] = key;
    }
    std::sort(keys_.begin(), keys_.end());
    return std::adjacent_find(keys_.begin(), keys_.end()) == keys_.end();
  }

 private:
  bool fits(std::size_t size) const {
    const std::size_t digits = doubly_ ? size - 1 : size;
    std::uint64_t limit = 1;
    for (std::size_t i = 0; i < digits; ++i) {
      if (limit > std::numeric_limits<std::uint64_t>::max() / base_) return false;
      limit *= base_;
    }
    return true;
  }

  bool fallback(std::span<const std::size_t> slots) const {
    std::vector<VertexId> members;
    for (std::size_t s : slots) members.push_back(VertexId::from_slot(s));
    const VertexSet q(std::move(members));
    return doubly_ ? is_doubly_resolving(q, d_).holds : is_resolving(q, d_).holds;
  }

  const DistanceMatrix& d_;
  bool doubly_;
  std::uint64_t base_ = 1;
  std::vector<std::uint64_t> keys_;
};

// For every vertex pair, the bitset of vertices that strongly resolve it.
// Shared read-only between workers.
struct StrongCoverTable {
  std::size_t words;
  std::vector<std::uint64_t> masks;  // pair-major, `words` per pair

  explicit StrongCoverTable(const DistanceMatrix& d)
      : words((static_cast<std::size_t>(d.size()) + 63) / 64) {
    const int n = d.size();
    std::vector<std::pair<int, std::vector<std::uint64_t>>> rows;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        std::vector<std::uint64_t> mask(words, 0);
        int count = 0;
        for (int w = 1; w <= n; ++w) {
          if (strongly_resolves(VertexId(w), VertexId(u), VertexId(v), d)) {
            const auto slot = static_cast<std::size_t>(w - 1);
            mask[slot / 64] |= std::uint64_t{1} << (slot % 64);
            ++count;
          }
        }
        rows.emplace_back(count, std::move(mask));
      }
    }
    // Hardest pairs first so failing sets are rejected early.
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& row : rows) masks.insert(masks.end(), row.second.begin(), row.second.end());
  }
};

class StrongChecker final : public Checker {
 public:
  explicit StrongChecker(const StrongCoverTable& table) : table_(table), chosen_(table.words, 0) {}

  bool passes(std::span<const std::size_t> slots) override {
    std::fill(chosen_.begin(), chosen_.end(), 0);
    for (std::size_t s : slots) chosen_[s / 64] |= std::uint64_t{1} << (s % 64);
    const std::size_t words = table_.words;
    for (std::size_t p = 0; p < table_.masks.size(); p += words) {
      bool hit = false;
      for (std::size_t w = 0; w < words && !hit; ++w) hit = (table_.masks[p + w] & chosen_[w]) != 0;
      if (!hit) return false;
    }
    return true;
  }

 private:
  const StrongCoverTable& table_;
  std::vector<std::uint64_t> chosen_;
};

struct ChunkHit {
  std::vector<std::size_t> combo;  // indices into the pool
  std::uint64_t examined_in_chunk;
};

// Scans the size-`size` combinations of pool indices whose first element
// is `first`, in lexicographic order.
std::optional<ChunkHit> scan_chunk(std::size_t pool_size, int size, std::size_t first,
                                   const std::vector<VertexId>& pool, Checker& checker) {
  const auto r = static_cast<std::size_t>(size);
  std::vector<std::size_t> combo(r);
  std::vector<std::size_t> slots(r);
  for (std::size_t i = 0; i < r; ++i) combo[i] = first + i;
  std::uint64_t examined = 0;
  while (true) {
    for (std::size_t i = 0; i < r; ++i) slots[i] = pool[combo[i]].slot();
    ++examined;
    if (checker.passes(slots)) return ChunkHit{combo, examined};
    // Advance positions 1..r-1; position 0 is fixed to `first`.
    std::size_t i = r;
    while (i > 1 && combo[i - 1] == pool_size - r + (i - 1)) --i;
    if (i <= 1) return std::nullopt;
    ++combo[i - 1];
    for (std::size_t j = i; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
}


SearchResult run_search(Parameter parameter, const std::vector<VertexId>& pool, int min_size, int size_cap,
                        unsigned workers, const std::function<std::unique_ptr<Checker>()>& make_checker) {
  if (size_cap < 1) throw std::domain_error("size cap must be at least 1, got " + std::to_string(size_cap));
  if (workers == 0) workers = default_workers();

  SearchResult result{parameter, 0, VertexSet{}, {}, 0};
  for (int s = 1; s < min_size && s <= size_cap; ++s) result.exhausted_sizes.push_back(s);

  const std::size_t pool_size = pool.size();
  const int last_size = std::min<int>(size_cap, static_cast<int>(pool_size));
  for (int size = min_size; size <= last_size; ++size) {
    const auto chunks = pool_size - static_cast<std::size_t>(size) + 1;
    std::atomic<std::size_t> next_chunk{0};
    std::atomic<std::size_t> best_chunk{std::numeric_limits<std::size_t>::max()};
    std::mutex hit_lock;
    std::optional<ChunkHit> best_hit;

    auto work = [&] {
      auto checker = make_checker();
      while (true) {
        const std::size_t chunk = next_chunk.fetch_add(1);
        if (chunk >= chunks || chunk > best_chunk.load()) return;
        auto hit = scan_chunk(pool_size, size, chunk, pool, *checker);
        if (!hit) continue;
        std::lock_guard lock(hit_lock);
        if (chunk < best_chunk.load()) {
          best_chunk.store(chunk);
          best_hit = std::move(hit);
        }
        return;
      }
    };

    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));
    if (count <= 1) {
      work();
    } else {
      std::vector<std::jthread> threads;
      for (unsigned t = 0; t < count; ++t) threads.emplace_back(work);
    }

    if (!best_hit) {
      result.exhausted_sizes.push_back(size);
      result.subsets_examined += binomial(static_cast<int>(pool_size), size);
      continue;
    }
    for (std::size_t f = 0; f < best_chunk.load(); ++f) {
      result.subsets_examined += binomial(static_cast<int>(pool_size - f - 1), size - 1);
    }
    result.subsets_examined += best_hit->examined_in_chunk;
    std::vector<VertexId> members;
    for (std::size_t i : best_hit->combo) members.push_back(pool[i]);
    result.value = size;
    result.witness = VertexSet(std::move(members));
    return result;
  }
  throw SearchCapExceeded(parameter, size_cap, result.subsets_examined);
}

std::vector<VertexId> all_vertices(int n) {
  std::vector<VertexId> out;
  for (int v = 1; v <= n; ++v) out.emplace_back(v);
  return out;
}

}  // namespace

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::metric_dimension:
      return "metric_dimension";
    case Parameter::doubly_resolving_number:
      return "doubly_resolving_number";
    case Parameter::strong_metric_dimension:
      return "strong_metric_dimension";
  }
  return "unknown";
}

SearchCapExceeded::SearchCapExceeded(Parameter parameter, int cap, std::uint64_t examined)
    : std::runtime_error("no set of size <= " + std::to_string(cap) + " attains " + std::string(to_string(parameter))),
      parameter_(parameter),
      cap_(cap),
      examined_(examined) {}

int default_size_cap(const LabeledGraph& g) {
  struct Visitor {
    int vertices;
    int operator()(const CycleFamily& f) const { return 2 * f.n + 2; }
    int operator()(const CylinderFamily& f) const { return 2 * f.n + 2; }
    int operator()(const PrismFamily& f) const { return 2 * f.n + 2; }
    int operator()(const GenericFamily&) const { return vertices; }
    int operator()(const PathFamily&) const { return vertices; }
  };
  return std::visit(Visitor{g.vertex_count()}, g.family());
}

unsigned default_workers() {
  if (const char* env = std::getenv("MDIM_MAX_WORKERS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) return static_cast<unsigned>(parsed);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SearchResult min_resolving(const LabeledGraph& g, const DistanceMatrix& d, SearchOptions options) {
  return run_search(Parameter::metric_dimension, all_vertices(g.vertex_count()), 1, options.size_cap,
                    options.workers, [&d] { return std::make_unique<PackedChecker>(d, false); });
}

SearchResult min_doubly_resolving(const LabeledGraph& g, const DistanceMatrix& d, SearchOptions options) {
  return run_search(Parameter::doubly_resolving_number, all_vertices(g.vertex_count()), 2, options.size_cap,
                    options.workers, [&d] { return std::make_unique<PackedChecker>(d, true); });
}

SearchResult min_strong_resolving(const LabeledGraph& g, const DistanceMatrix& d, SearchOptions options) {
  const auto pool = strong_resolving_graph(g, d).incident_vertices();
  const StrongCoverTable table(d);
  return run_search(Parameter::strong_metric_dimension, pool, 1, options.size_cap, options.workers,
                    [&table] { return std::make_unique<StrongChecker>(table); });
}

namespace {

// Lexicographic depth-first search for a vertex cover of exactly `budget`
// more vertices drawn from candidates[start..]. Prunes when some uncovered
// edge can no longer be reached and when a greedy matching on the
// uncovered edges needs more vertices than remain.
class CoverSearch {
 public:
  CoverSearch(const StrongResolvingGraph& srg, std::vector<VertexId> candidates)
      : srg_(srg), candidates_(std::move(candidates)), in_cover_(static_cast<std::size_t>(srg.vertex_count()), false) {}

  bool find(int budget) { return descend(0, budget); }
  std::vector<VertexId> cover() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool descend(std::size_t start, int budget) {
    ++nodes_;
    // Largest candidate the next pick may be: every uncovered edge needs an
    // endpoint at or after it.
    VertexId reach{std::numeric_limits<int>::max()};
    bool any_uncovered = false;
    std::vector<bool> matched(in_cover_.size(), false);
    int matching = 0;
    for (const auto& [u, v] : srg_.edges()) {
      if (in_cover_[u.slot()] || in_cover_[v.slot()]) continue;
      any_uncovered = true;
      reach = std::min(reach, std::max(u, v));
      if (!matched[u.slot()] && !matched[v.slot()]) {
        matched[u.slot()] = matched[v.slot()] = true;
        ++matching;
      }
    }
    if (!any_uncovered) return budget == 0 || pad(start, budget);
    if (budget == 0 || matching > budget) return false;

    for (std::size_t c = start; c < candidates_.size() && candidates_[c] <= reach; ++c) {
      if (candidates_.size() - c < static_cast<std::size_t>(budget)) break;
      in_cover_[candidates_[c].slot()] = true;
      chosen_.push_back(candidates_[c]);
      if (descend(c + 1, budget - 1)) return true;
      chosen_.pop_back();
      in_cover_[candidates_[c].slot()] = false;
    }
    return false;
  }

  // Everything is covered with budget to spare: extend with the
  // lexicographically next candidates.
  bool pad(std::size_t start, int budget) {
    if (candidates_.size() - start < static_cast<std::size_t>(budget)) return false;
    for (int i = 0; i < budget; ++i) chosen_.push_back(candidates_[start + static_cast<std::size_t>(i)]);
    return true;
  }

  const StrongResolvingGraph& srg_;
  std::vector<VertexId> candidates_;
  std::vector<bool> in_cover_;
  std::vector<VertexId> chosen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult min_vertex_cover_sr(const StrongResolvingGraph& srg, int size_cap) {
  if (size_cap < 1) throw std::domain_error("size cap must be at least 1, got " + std::to_string(size_cap));
  const auto candidates = srg.incident_vertices();
  SearchResult result{Parameter::strong_metric_dimension, 0, VertexSet{}, {}, 0};
  for (int budget = 1; budget <= size_cap; ++budget) {
    CoverSearch search(srg, candidates);
    const bool found = search.find(budget);
    result.subsets_examined += search.nodes();
    if (found) {
      result.value = budget;
      result.witness = VertexSet(search.cover());
      return result;
    }
    result.exhausted_sizes.push_back(budget);
  }
  throw SearchCapExceeded(Parameter::strong_metric_dimension, size_cap, result.subsets_examined);
}

}  // namespace mdim
