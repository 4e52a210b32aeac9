#include "leapcycles/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace leapcycles {

namespace {

using Adjacency = std::vector<std::vector<Word>>;

Adjacency build_adjacency(Dimension k, StepClass h, NeighborOrder order) {
  const Word n = static_cast<Word>(k.vertex_count());
  std::vector<Word> masks;
  if (h.value() <= k.value()) {
    for (Word m = 0; m < n; ++m) {
      if (static_cast<unsigned>(std::popcount(m)) == h.value()) masks.push_back(m);
    }
  }
  Adjacency adj(n);
  for (Word v = 0; v < n; ++v) {
    auto& list = adj[v];
    list.reserve(masks.size());
    for (Word m : masks) list.push_back(v ^ m);
    if (order == NeighborOrder::Ascending) {
      std::sort(list.begin(), list.end());
    } else {
      std::sort(list.begin(), list.end(), std::greater<>());
    }
  }
  return adj;
}

enum class Mode { Exists, Count };

// One depth-first search below a fixed second vertex. Pruning, applied after
// every move:
//   - a neighbour of the head with one other option forces the next move;
//   - each unvisited vertex needs two possible cycle edges among its
//     unvisited neighbours, the current head and the anchor;
//   - the anchor keeps an unvisited neighbour or is adjacent to the head;
//   - the unvisited vertices together with head and anchor, closed by a
//     virtual head-anchor edge, form a 2-connected graph.
class BranchSearch {
 public:
  BranchSearch(const Adjacency& adj, unsigned h, Mode mode, const std::function<bool()>& cancelled)
      : adj_(adj),
        h_(h),
        n_(adj.size()),
        mode_(mode),
        cancelled_(cancelled),
        visited_(n_, 0),
        free_degree_(n_),
        mark_(n_, 0),
        disc_(n_),
        low_(n_) {
    for (std::size_t v = 0; v < n_; ++v) free_degree_[v] = static_cast<unsigned>(adj_[v].size());
    path_.reserve(n_);
  }

  void run(Word second) {
    visit(kAnchor);
    nodes_ = 1;
    visit(second);
    if (viable(kAnchor, second)) dfs(second);
  }

  [[nodiscard]] bool found() const noexcept { return count_ > 0; }
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] bool aborted() const noexcept { return aborted_; }
  [[nodiscard]] const std::vector<Word>& witness() const noexcept { return witness_; }

 private:
  static constexpr Word kAnchor = 0;

  bool adjacent(Word a, Word b) const noexcept {
    return static_cast<unsigned>(std::popcount(a ^ b)) == h_;
  }

  void visit(Word v) {
    visited_[v] = 1;
    path_.push_back(v);
    for (Word w : adj_[v]) --free_degree_[w];
  }

  void unvisit(Word v) {
    for (Word w : adj_[v]) ++free_degree_[w];
    path_.pop_back();
    visited_[v] = 0;
  }

  bool vertex_ok(Word v, Word head) const noexcept {
    if (visited_[v]) return true;
    const unsigned avail = free_degree_[v] + (adjacent(v, head) ? 1U : 0U) + (adjacent(v, kAnchor) ? 1U : 0U);
    return avail >= 2;
  }

  // Called after moving the head from prev to head.
  bool viable(Word prev, Word head) {
    const std::size_t remaining = n_ - path_.size();
    if (remaining == 0) return true;
    if (free_degree_[kAnchor] == 0 && !adjacent(head, kAnchor)) return false;
    for (Word v : adj_[head]) {
      if (!vertex_ok(v, head)) return false;
    }
    for (Word v : adj_[prev]) {
      if (!vertex_ok(v, head)) return false;
    }
    return biconnected(head, remaining);
  }

  bool in_residual(Word v, Word head) const noexcept { return !visited_[v] || v == head || v == kAnchor; }

  // The rest of the tour is a Hamiltonian path head -> ... -> anchor through
  // every unvisited vertex. Closing it with a virtual head-anchor edge gives a
  // Hamiltonian cycle, so that residual graph must be 2-connected: connected
  // and free of articulation points (iterative Tarjan lowpoint).
  bool biconnected(Word head, std::size_t remaining) {
    ++epoch_;
    if (epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      epoch_ = 1;
    }
    auto neighbours = [&](Word v, std::size_t i) -> std::optional<Word> {
      const auto& list = adj_[v];
      if (i < list.size()) return list[i];
      // Virtual edge closing the residual cycle.
      if (i == list.size()) {
        if (v == head) return kAnchor;
        if (v == kAnchor) return head;
      }
      return std::nullopt;
    };

    std::uint32_t timer = 0;
    frames_.clear();
    mark_[head] = epoch_;
    disc_[head] = low_[head] = timer++;
    frames_.push_back({head, head, 0, 0});
    std::size_t reached = 1;
    while (!frames_.empty()) {
      Frame& f = frames_.back();
      const auto next = neighbours(f.v, f.i);
      if (!next) {
        const Frame done = f;
        frames_.pop_back();
        if (!frames_.empty()) {
          Frame& parent = frames_.back();
          low_[parent.v] = std::min(low_[parent.v], low_[done.v]);
          // A non-root parent is a cut vertex when a child cannot climb above it.
          if (frames_.size() > 1 && low_[done.v] >= disc_[parent.v]) return false;
          ++parent.children;
        } else if (done.children > 1) {
          return false;
        }
        continue;
      }
      ++f.i;
      const Word w = *next;
      if (!in_residual(w, head) || w == f.parent) continue;
      if (mark_[w] == epoch_) {
        low_[f.v] = std::min(low_[f.v], disc_[w]);
        continue;
      }
      mark_[w] = epoch_;
      disc_[w] = low_[w] = timer++;
      ++reached;
      frames_.push_back({w, f.v, 0, 0});
    }
    // Residual vertices: the unvisited ones plus head and anchor.
    return reached == remaining + 2;
  }

  // Returns true when the search should stop.
  bool dfs(Word head) {
    ++nodes_;
    if (cancelled_ && (nodes_ & 0x3FF) == 0 && cancelled_()) {
      aborted_ = true;
      return true;
    }
    if (path_.size() == n_) {
      if (!adjacent(head, kAnchor)) return false;
      if (mode_ == Mode::Exists) {
        witness_ = path_;
        count_ = 1;
        return true;
      }
      if (path_[1] < path_.back()) ++count_;
      return false;
    }
    // A neighbour of the head with a single option left besides the head
    // must be visited next; two such neighbours cannot both be served.
    Word forced = 0;
    bool has_forced = false;
    for (Word v : adj_[head]) {
      if (visited_[v]) continue;
      const unsigned others = free_degree_[v] + (adjacent(v, kAnchor) ? 1U : 0U);
      if (others <= 1 && path_.size() + 1 < n_) {
        if (has_forced) return false;
        forced = v;
        has_forced = true;
      }
    }
    // Fewest remaining options first; the stable sort keeps the configured
    // neighbour order among ties.
    std::vector<Word> candidates;
    if (has_forced) {
      candidates.push_back(forced);
    } else {
      for (Word v : adj_[head]) {
        if (!visited_[v]) candidates.push_back(v);
      }
      std::stable_sort(candidates.begin(), candidates.end(),
                       [this](Word x, Word y) { return free_degree_[x] < free_degree_[y]; });
    }
    for (Word next : candidates) {
      visit(next);
      const bool stop = viable(head, next) && dfs(next);
      unvisit(next);
      if (stop) return true;
    }
    return false;
  }

  const Adjacency& adj_;
  unsigned h_;
  std::size_t n_;
  Mode mode_;
  const std::function<bool()>& cancelled_;
  std::vector<char> visited_;
  std::vector<unsigned> free_degree_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  struct Frame {
    Word v;
    Word parent;
    std::size_t i;
    unsigned children;
  };
  std::vector<Frame> frames_;
  std::vector<std::uint32_t> disc_;
  std::vector<std::uint32_t> low_;
  std::vector<Word> path_;
  std::vector<Word> witness_;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

struct BranchOutcome {
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  std::vector<Word> witness;
};

OracleResult search(Dimension k, StepClass h, Mode mode, bool want_witness, const OracleOptions& options) {
  OracleResult result;
  if (k.value() < 2) {
    if (mode == Mode::Count) result.count = 0;
    return result;
  }
  const Adjacency adj = build_adjacency(k, h, options.order);
  const std::vector<Word>& branches = adj[0];
  const std::size_t nb = branches.size();
  std::vector<BranchOutcome> outcomes(nb);

  // In Exists mode, branches after the first successful one are irrelevant.
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> winner{none};
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= nb) return;
      if (mode == Mode::Exists && i > winner.load()) continue;
      std::function<bool()> cancelled;
      if (mode == Mode::Exists) cancelled = [&winner, i] { return winner.load() < i; };
      BranchSearch s(adj, h.value(), mode, cancelled);
      s.run(branches[i]);
      if (s.aborted()) continue;
      outcomes[i] = {s.count(), s.nodes(), s.witness()};
      if (mode == Mode::Exists && s.found()) {
        std::size_t cur = winner.load();
        while (i < cur && !winner.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(nb)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Root node is counted once in addition to each branch's own nodes.
  result.nodes_explored = 1;
  if (mode == Mode::Exists) {
    const std::size_t last = winner.load() == none ? nb : winner.load() + 1;
    for (std::size_t i = 0; i < last; ++i) result.nodes_explored += outcomes[i].nodes - 1;
    result.exists = winner.load() != none;
    if (result.exists && want_witness) {
      result.witness = VertexPath(k, std::move(outcomes[winner.load()].witness));
    }
  } else {
    std::uint64_t total = 0;
    for (const auto& o : outcomes) {
      total += o.count;
      result.nodes_explored += o.nodes - 1;
    }
    result.count = total;
    result.exists = total > 0;
  }
  return result;
}

}  // namespace

OracleResult oracle_exists(Dimension k, StepClass h, bool want_witness, const OracleOptions& options) {
  if (k.value() > kOracleMaxDim) {
    throw CapacityError("oracle_exists: k = " + std::to_string(k.value()) + " exceeds the oracle limit " +
                        std::to_string(kOracleMaxDim));
  }
  return search(k, h, Mode::Exists, want_witness, options);
}

OracleResult oracle_count(Dimension k, StepClass h, const OracleOptions& options) {
  if (k.value() > kCountMaxDim) {
    throw CapacityError("oracle_count: k = " + std::to_string(k.value()) + " exceeds the counting limit " +
                        std::to_string(kCountMaxDim));
  }
  return search(k, h, Mode::Count, false, options);
}

}  // namespace leapcycles
