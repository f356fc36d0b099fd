#include "ktuple/domatic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ktuple/errors.hpp"

namespace ktuple {

std::size_t DomaticPartition::min_class_size() const {
  std::size_t smallest = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::size_t s = classes[i].size();
    if (i == 0 || s < smallest) smallest = s;
  }
  return smallest;
}

bool is_domatic_partition(const Graph& g, const DomaticPartition& p) {
  const std::size_t n = g.order();
  VertexSet seen(n);
  for (const VertexSet& cls : p.classes) {
    if (cls.universe() != n) throw GraphError("partition class refers to vertices outside the graph");
    if (cls.intersects(seen)) throw GraphError("partition classes overlap");
    seen |= cls;
  }
  if (p.classes.empty() || seen.size() != n) return false;
  for (const VertexSet& cls : p.classes) {
    if (cls.empty() || !is_dominating(g, cls, p.k, p.mode)) return false;
  }
  return true;
}

std::size_t zelinka_floor(const Graph& g, int k) {
  const std::size_t block = static_cast<std::size_t>(k) * (g.order() - g.min_degree());
  return g.order() / block;
}

std::optional<DomaticPartition> zelinka_partition(const Graph& g, int k) {
  require_ktuple_set(g, k, Mode::closed);
  const std::size_t n = g.order();
  const std::size_t block = static_cast<std::size_t>(k) * (n - g.min_degree());
  if (block > n) return std::nullopt;

  const std::size_t count = n / block;
  DomaticPartition p{k, Mode::closed, std::vector<VertexSet>(count, VertexSet(n))};
  for (Vertex v = 0; v < n; ++v) p.classes[std::min<std::size_t>(v / block, count - 1)].insert(v);
  for (const VertexSet& cls : p.classes) {
    if (!is_ktuple_dominating(g, cls, k)) {
      throw std::logic_error("constructive partition class failed the k-tuple domination test");
    }
  }
  return p;
}

namespace {

const VertexSet& reach(const Graph& g, Vertex v, Mode mode) {
  return mode == Mode::closed ? g.closed_neighborhood(v) : g.open_neighborhood(v);
}

// Backtracking ℓ-coloring where every color class must be a k-tuple
// (total) dominating set. For each vertex v we track, per color c, how many
// members of reach(v) carry c, plus how many members of reach(v) are still
// uncolored. deficit(v) = Σ_c max(0, k - count(v,c)) must never exceed the
// uncolored count, since each remaining vertex supplies one unit to one
// color.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, Mode mode, std::size_t colors)
      : g_(g), k_(k), mode_(mode), colors_(colors) {
    const std::size_t n = g.order();
    color_.assign(n, -1);
    count_.assign(n * colors, 0);
    uncolored_.resize(n);
    deficit_.assign(n, static_cast<int>(colors) * k);
    for (Vertex v = 0; v < n; ++v) uncolored_[v] = static_cast<int>(reach(g, v, mode).size());

    // Tightest neighborhoods first: walk vertices by ascending degree and
    // emit each one's neighborhood, so low-slack constraints close early.
    std::vector<Vertex> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    VertexSet placed(n);
    auto place = [&](Vertex w) {
      if (!placed.contains(w)) {
        placed.insert(w);
        order_.push_back(w);
      }
    };
    for (Vertex v : by_degree) {
      place(v);
      for (Vertex w : g.open_neighborhood(v)) place(w);
    }
  }

  std::optional<DomaticPartition> run() {
    for (Vertex v = 0; v < g_.order(); ++v)
      if (deficit_[v] > uncolored_[v]) return std::nullopt;
    if (!descend(0)) return std::nullopt;
    DomaticPartition p{k_, mode_, std::vector<VertexSet>(colors_, VertexSet(g_.order()))};
    for (Vertex v = 0; v < g_.order(); ++v) p.classes[static_cast<std::size_t>(color_[v])].insert(v);
    return p;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  int& count(Vertex v, std::size_t c) { return count_[v * colors_ + c]; }

  bool assign(Vertex u, std::size_t c) {
    color_[u] = static_cast<int>(c);
    bool ok = true;
    for (Vertex v : reach(g_, u, mode_)) {
      --uncolored_[v];
      if (count(v, c)++ < k_) --deficit_[v];
      if (deficit_[v] > uncolored_[v]) ok = false;
    }
    return ok;
  }

  void unassign(Vertex u, std::size_t c) {
    for (Vertex v : reach(g_, u, mode_)) {
      ++uncolored_[v];
      if (--count(v, c) < k_) ++deficit_[v];
    }
    color_[u] = -1;
  }

  bool descend(std::size_t depth) {
    ++nodes_;
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    // Colors are interchangeable: a fresh color is only opened as the next
    // unused index, which also pins the first vertex to color 0.
    const std::size_t limit = std::min(opened_ + 1, colors_);
    for (std::size_t c = 0; c < limit; ++c) {
      const bool fresh = c == opened_;
      if (fresh) ++opened_;
      const bool ok = assign(u, c);
      if (ok && descend(depth + 1)) return true;
      unassign(u, c);
      if (fresh) --opened_;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  Mode mode_;
  std::size_t colors_;
  std::vector<Vertex> order_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> uncolored_;
  std::vector<int> deficit_;
  std::size_t opened_ = 0;
  std::uint64_t nodes_ = 0;
};

DomaticPartition single_class(const Graph& g, int k, Mode mode) {
  return DomaticPartition{k, mode, {g.all_vertices()}};
}

}  // namespace

std::optional<DomaticPartition> find_domatic_partition(const Graph& g, int k, Mode mode, std::size_t classes,
                                                       std::uint64_t* nodes) {
  require_ktuple_set(g, k, mode);
  if (classes == 0) return std::nullopt;
  if (classes == 1) return single_class(g, k, mode);
  ColoringSearch search(g, k, mode, classes);
  auto found = search.run();
  if (nodes != nullptr) *nodes += search.nodes();
  return found;
}

DomaticResult d_xk(const Graph& g, int k, Mode mode) {
  require_ktuple_set(g, k, mode);
  const std::size_t n = g.order();
  const std::size_t delta = g.min_degree();

  DomaticResult result;
  DomaticBounds& bounds = result.bounds_used;
  bounds.gamma = gamma_xk(g, k, mode).value;
  const auto kk = static_cast<std::size_t>(k);
  bounds.degree_ceiling = mode == Mode::closed ? (delta + 1) / kk : delta / kk;
  bounds.gamma_ceiling = n / bounds.gamma;
  const std::size_t ceiling = std::min(bounds.degree_ceiling, bounds.gamma_ceiling);

  std::optional<DomaticPartition> incumbent;
  std::size_t floor = 1;
  if (mode == Mode::closed) {
    bounds.zelinka_floor = zelinka_floor(g, k);
    if (bounds.zelinka_floor >= 2) {
      incumbent = zelinka_partition(g, k);
      floor = incumbent->size();
    }
  }
  if (floor > ceiling) throw std::logic_error("constructive floor exceeds the domatic ceiling");

  for (std::size_t classes = ceiling; classes > floor; --classes) {
    if (auto found = find_domatic_partition(g, k, mode, classes, &result.nodes_explored)) {
      result.value = classes;
      result.witness = std::move(*found);
      return result;
    }
  }
  result.value = floor;
  result.witness = incumbent ? std::move(*incumbent) : single_class(g, k, mode);
  return result;
}

DomaticResult d_oracle(const Graph& g, int k, Mode mode) {
  const std::size_t n = g.order();
  if (n > kDomaticOracleCap) {
    throw CapExceeded("domatic oracle is limited to " + std::to_string(kDomaticOracleCap) + " vertices, graph has " +
                      std::to_string(n));
  }
  require_ktuple_set(g, k, mode);

  std::vector<std::uint32_t> adjacency(n, 0);
  int min_degree = static_cast<int>(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) adjacency[u] |= 1U << v;
    min_degree = std::min(min_degree, std::popcount(adjacency[u]));
  }

  const int inside_need = mode == Mode::closed ? k - 1 : k;
  const std::uint32_t subsets = 1U << n;
  std::vector<bool> valid(subsets, false);
  for (std::uint32_t set = 1; set < subsets; ++set) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      const bool member = ((set >> v) & 1U) != 0;
      ok = std::popcount(adjacency[v] & set) >= (member ? inside_need : k);
    }
    valid[set] = ok;
  }

  const std::size_t max_classes =
      static_cast<std::size_t>(mode == Mode::closed ? (min_degree + 1) / k : min_degree / k);

  DomaticResult result;
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> masks;
  std::uint64_t leaves = 0;

  // Restricted growth string: vertex i joins an existing class or opens the
  // next one.
  auto extend = [&](auto&& self, Vertex i) -> void {
    if (best.size() == max_classes && max_classes >= 2) return;
    if (i == n) {
      ++leaves;
      if (masks.size() < 2 || masks.size() <= best.size()) return;
      for (std::uint32_t m : masks)
        if (!valid[m]) return;
      best = masks;
      return;
    }
    for (std::size_t c = 0; c < masks.size(); ++c) {
      masks[c] |= 1U << i;
      self(self, i + 1);
      masks[c] &= ~(1U << i);
    }
    if (masks.size() < max_classes) {
      masks.push_back(1U << i);
      self(self, i + 1);
      masks.pop_back();
    }
  };
  if (max_classes >= 2) extend(extend, 0);

  result.nodes_explored = leaves;
  result.bounds_used.degree_ceiling = max_classes;
  if (best.empty()) {
    result.value = 1;
    result.witness = single_class(g, k, mode);
    return result;
  }
  result.value = best.size();
  result.witness = DomaticPartition{k, mode, {}};
  for (std::uint32_t m : best) {
    VertexSet cls(n);
    for (Vertex v = 0; v < n; ++v)
      if ((m >> v) & 1U) cls.insert(v);
    result.witness.classes.push_back(std::move(cls));
  }
  return result;
}

}  // namespace ktuple
