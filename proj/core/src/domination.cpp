#include "ktuple/domination.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktuple/errors.hpp"

namespace ktuple {

std::string_view to_string(Mode mode) { return mode == Mode::closed ? "closed" : "open"; }

Mode parse_mode(std::string_view text) {
  if (text == "closed") return Mode::closed;
  if (text == "open") return Mode::open;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected closed or open)");
}

namespace {

void require_positive_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer, got " + std::to_string(k));
}

void require_same_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw GraphError("vertex set over " + std::to_string(s.universe()) + " vertices used with a graph of order " +
                     std::to_string(g.order()));
  }
}

const VertexSet& reach(const Graph& g, Vertex v, Mode mode) {
  return mode == Mode::closed ? g.closed_neighborhood(v) : g.open_neighborhood(v);
}

}  // namespace

bool admits_ktuple_set(const Graph& g, int k, Mode mode) {
  require_positive_k(k);
  return g.min_degree() >= required_min_degree(k, mode);
}

void require_ktuple_set(const Graph& g, int k, Mode mode) {
  if (!admits_ktuple_set(g, k, mode)) throw PreconditionError(g.min_degree(), k, required_min_degree(k, mode));
}

bool is_ktuple_dominating(const Graph& g, const VertexSet& s, int k) {
  return is_dominating(g, s, k, Mode::closed);
}

bool is_ktuple_total_dominating(const Graph& g, const VertexSet& s, int k) {
  return is_dominating(g, s, k, Mode::open);
}

bool is_dominating(const Graph& g, const VertexSet& s, int k, Mode mode) {
  require_positive_k(k);
  require_same_universe(g, s);
  const auto need = static_cast<std::size_t>(k);
  for (Vertex v = 0; v < g.order(); ++v)
    if (reach(g, v, mode).count_common(s) < need) return false;
  return true;
}

VertexSet greedy_upper_bound(const Graph& g, int k, Mode mode) {
  require_ktuple_set(g, k, mode);
  const std::size_t n = g.order();
  std::vector<int> residual(n, k);
  VertexSet chosen(n);
  std::size_t unsatisfied = n;
  while (unsatisfied > 0) {
    Vertex best = 0;
    std::size_t best_score = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (chosen.contains(u)) continue;
      std::size_t score = 0;
      for (Vertex v : reach(g, u, mode)) score += residual[v] > 0 ? 1 : 0;
      if (score > best_score) {
        best_score = score;
        best = u;
      }
    }
    chosen.insert(best);
    for (Vertex v : reach(g, best, mode))
      if (residual[v] > 0 && --residual[v] == 0) --unsatisfied;
  }
  return chosen;
}

namespace {

class GammaSearch {
 public:
  GammaSearch(const Graph& g, int k, Mode mode) : g_(g), k_(k), mode_(mode), chosen_(g.order()) {
    const std::size_t n = g.order();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    cover_.assign(n, 0);
    avail_.resize(n);
    for (Vertex v = 0; v < n; ++v) avail_[v] = static_cast<int>(reach(g, v, mode).size());
    max_reach_ = mode == Mode::closed ? g.max_degree() + 1 : g.max_degree();

    best_set_ = greedy_upper_bound(g, k, mode);
    best_ = best_set_.size();
  }

  GammaResult run() {
    descend(0);
    return GammaResult{best_, best_set_, mode_, k_, nodes_};
  }

 private:
  void descend(std::size_t depth) {
    ++nodes_;
    int max_residual = 0;
    std::size_t residual_sum = 0;
    for (int c : cover_) {
      const int r = std::max(0, k_ - c);
      max_residual = std::max(max_residual, r);
      residual_sum += static_cast<std::size_t>(r);
    }
    if (max_residual == 0) {
      if (chosen_count_ < best_) {
        best_ = chosen_count_;
        best_set_ = chosen_;
      }
      return;
    }
    // Each further pick serves at most max_reach_ vertices, one unit each.
    const std::size_t by_volume = (residual_sum + max_reach_ - 1) / max_reach_;
    const std::size_t lower = std::max(static_cast<std::size_t>(max_residual), by_volume);
    if (chosen_count_ + lower >= best_) return;
    if (depth == order_.size()) return;

    const Vertex u = order_[depth];
    const VertexSet& served = reach(g_, u, mode_);

    chosen_.insert(u);
    ++chosen_count_;
    for (Vertex v : served) {
      ++cover_[v];
      --avail_[v];
    }
    descend(depth + 1);
    for (Vertex v : served) --cover_[v];
    chosen_.erase(u);
    --chosen_count_;

    bool feasible = true;
    for (Vertex v : served)
      if (cover_[v] + avail_[v] < k_) feasible = false;
    if (feasible) descend(depth + 1);
    for (Vertex v : served) ++avail_[v];
  }

  const Graph& g_;
  int k_;
  Mode mode_;
  std::vector<Vertex> order_;
  std::vector<int> cover_;
  std::vector<int> avail_;
  VertexSet chosen_;
  std::size_t chosen_count_ = 0;
  std::size_t max_reach_ = 1;
  std::size_t best_ = 0;
  VertexSet best_set_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

GammaResult gamma_xk(const Graph& g, int k, Mode mode) {
  require_ktuple_set(g, k, mode);
  return GammaSearch(g, k, mode).run();
}

GammaResult gamma_oracle(const Graph& g, int k, Mode mode, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > std::min(cap, kGammaOracleCap)) {
    throw CapExceeded("gamma oracle is limited to " + std::to_string(std::min(cap, kGammaOracleCap)) +
                      " vertices, graph has " + std::to_string(n));
  }
  require_ktuple_set(g, k, mode);

  std::vector<std::uint32_t> adjacency(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) adjacency[u] |= 1U << v;

  // Literal definition: members need k-1 (closed) or k (open) neighbours in
  // S, non-members need k.
  const int inside_need = mode == Mode::closed ? k - 1 : k;
  auto qualifies = [&](std::uint32_t set) {
    for (Vertex v = 0; v < n; ++v) {
      const int have = std::popcount(adjacency[v] & set);
      const bool member = ((set >> v) & 1U) != 0;
      if (have < (member ? inside_need : k)) return false;
    }
    return true;
  };

  std::uint64_t tested = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::size_t size = 0; size <= n; ++size) {
    if (size == 0) {
      ++tested;
      if (qualifies(0)) return GammaResult{0, VertexSet(n), mode, k, tested};
      continue;
    }
    // Gosper's hack: all n-bit words with `size` bits set, ascending.
    std::uint64_t set = (std::uint64_t{1} << size) - 1;
    while (set < limit) {
      ++tested;
      if (qualifies(static_cast<std::uint32_t>(set))) {
        VertexSet witness(n);
        for (Vertex v = 0; v < n; ++v)
          if ((set >> v) & 1U) witness.insert(v);
        return GammaResult{size, witness, mode, k, tested};
      }
      const std::uint64_t low = set & (~set + 1);
      const std::uint64_t ripple = set + low;
      set = (((ripple ^ set) >> 2) / low) | ripple;
    }
  }
  throw std::logic_error("gamma oracle found no dominating set although the degree gate passed");
}

namespace {

// Exact-cardinality search for a k-join decomposition: choose T in id order.
class DecompositionSearch {
 public:
  DecompositionSearch(const Graph& g, int k, std::size_t t) : g_(g), k_(k), target_(t), picked_(g.order()) {
    const std::size_t n = g.order();
    cover_.assign(n, 0);
    avail_.resize(n);
    for (Vertex v = 0; v < n; ++v) avail_[v] = static_cast<int>(g.closed_neighborhood(v).size());
  }

  std::optional<VertexSet> run() {
    if (descend(0)) return picked_;
    return std::nullopt;
  }

 private:
  bool viable() const {
    const int remaining = static_cast<int>(target_ - count_);
    for (std::size_t v = 0; v < cover_.size(); ++v)
      if (cover_[v] + std::min(avail_[v], remaining) < k_) return false;
    return true;
  }

  bool is_decomposition() const {
    for (Vertex v = 0; v < g_.order(); ++v) {
      const auto inside = g_.open_neighborhood(v).count_common(picked_);
      const auto need = static_cast<std::size_t>(picked_.contains(v) ? k_ - 1 : k_);
      if (inside < need) return false;
    }
    return true;
  }

  bool descend(Vertex next) {
    if (count_ == target_) return is_decomposition();
    if (next == g_.order() || !viable()) return false;
    const VertexSet& served = g_.closed_neighborhood(next);

    picked_.insert(next);
    ++count_;
    for (Vertex v : served) {
      ++cover_[v];
      --avail_[v];
    }
    if (descend(next + 1)) return true;
    for (Vertex v : served) --cover_[v];
    picked_.erase(next);
    --count_;

    bool found = false;
    if (g_.order() - next - 1 >= target_ - count_) found = descend(next + 1);
    for (Vertex v : served) ++avail_[v];
    return found;
  }

  const Graph& g_;
  int k_;
  std::size_t target_;
  VertexSet picked_;
  std::size_t count_ = 0;
  std::vector<int> cover_;
  std::vector<int> avail_;
};

}  // namespace

std::optional<VertexSet> kjoin_decomposition_exists(const Graph& g, int k, std::size_t t) {
  require_ktuple_set(g, k, Mode::closed);
  if (t > g.order()) {
    throw std::invalid_argument("decomposition size " + std::to_string(t) + " exceeds graph order " +
                                std::to_string(g.order()));
  }
  return DecompositionSearch(g, k, t).run();
}

std::size_t min_kjoin_decomposition(const Graph& g, int k) {
  for (std::size_t t = 0; t <= g.order(); ++t)
    if (kjoin_decomposition_exists(g, k, t)) return t;
  throw std::logic_error("no k-join decomposition found although the whole vertex set qualifies");
}

}  // namespace ktuple
