#include "regtool/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "regtool/random.hpp"
#include "text_format.hpp"

namespace regtool {

std::vector<VertexSubset> minimal_members(std::vector<VertexSubset> sets) {
  std::sort(sets.begin(), sets.end());
  std::vector<VertexSubset> kept;
  kept.reserve(sets.size());
  for (auto s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [s](VertexSubset k) { return k.is_subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

std::vector<VertexSubset> maximal_members(std::vector<VertexSubset> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSubset a, VertexSubset b) { return b < a; });
  std::vector<VertexSubset> kept;
  kept.reserve(sets.size());
  for (auto s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [s](VertexSubset k) { return s.is_subset_of(k); });
    if (!dominated) kept.push_back(s);
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

Labels make_labels(std::vector<std::string> names) {
  if (names.size() > kMaxVertices) {
    throw std::invalid_argument("vertex universe has " + std::to_string(names.size()) +
                                " vertices; at most 64 are supported");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Labels numbered_labels(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return make_labels(std::move(names));
}

Hypergraph::Hypergraph(Labels labels, std::vector<VertexSubset> edges) : labels_(std::move(labels)) {
  if (!labels_) throw std::invalid_argument("hypergraph needs a label list");
  if (labels_->size() > kMaxVertices) throw std::invalid_argument("at most 64 vertices are supported");
  const VertexSubset universe = vertices();
  for (auto e : edges) {
    if (e.empty()) throw std::invalid_argument("hypergraph edges must be nonempty");
    if (!e.is_subset_of(universe)) throw std::invalid_argument("edge uses a vertex outside the universe");
  }
  edges_ = minimal_members(std::move(edges));
}

bool Hypergraph::has_edge(VertexSubset e) const { return edge_index(e).has_value(); }

std::optional<std::size_t> Hypergraph::edge_index(VertexSubset e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<VertexSubset> minimalize_edges(std::vector<VertexSubset> edges) {
  return minimal_members(std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  auto doc = detail::parse_set_list(text);
  if (doc.sets.empty() && !doc.has_vertex_header) throw std::invalid_argument("no edges");
  for (auto e : doc.sets) {
    if (e.empty()) throw std::invalid_argument("empty edge");
  }
  return Hypergraph(make_labels(std::move(doc.names)), std::move(doc.sets));
}

std::string to_text(const Hypergraph& h) { return detail::format_set_list(*h.labels(), h.edges()); }

Hypergraph induced_subhypergraph(const Hypergraph& h, VertexSubset w) {
  if (!w.is_subset_of(h.vertices())) throw std::invalid_argument("subset is not inside the vertex universe");
  std::vector<std::string> names;
  for (auto v : w) names.push_back(h.label(v));
  std::vector<VertexSubset> edges;
  for (auto e : h.edges()) {
    if (e.is_subset_of(w)) edges.push_back(compress(e, w));
  }
  return Hypergraph(make_labels(std::move(names)), std::move(edges));
}

Hypergraph delete_edge(const Hypergraph& h, VertexSubset e) {
  if (!h.has_edge(e)) throw std::invalid_argument("delete_edge: not an edge of the hypergraph");
  std::vector<VertexSubset> edges;
  for (auto f : h.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Hypergraph(h.labels(), std::move(edges));
}

Hypergraph edge_fusion(const Hypergraph& h, VertexSubset e) {
  if (h.edge_count() < 2) throw std::invalid_argument("edge_fusion needs at least two edges");
  if (!h.has_edge(e)) throw std::invalid_argument("edge_fusion: not an edge of the hypergraph");
  std::vector<VertexSubset> fused;
  for (auto f : h.edges()) {
    if (f != e) fused.push_back(f | e);
  }
  return Hypergraph(h.labels(), std::move(fused));
}

std::optional<std::size_t> uniformity(const Hypergraph& h) {
  if (h.edges().empty()) return std::nullopt;
  const std::size_t d = h.edges().front().size();
  for (auto e : h.edges()) {
    if (e.size() != d) return std::nullopt;
  }
  return d;
}

bool is_graph(const Hypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [](VertexSubset e) { return e.size() == 2; });
}

std::vector<std::size_t> vertex_degrees(const Hypergraph& h) {
  std::vector<std::size_t> deg(h.vertex_count(), 0);
  for (auto e : h.edges()) {
    for (auto v : e) ++deg[v];
  }
  return deg;
}

// ---------------------------------------------------------------------------
// Families

Hypergraph hs_family(std::size_t s) {
  if (s < 1) throw std::invalid_argument("hs family needs s >= 1");
  if (2 * s + 1 > kMaxVertices) throw std::invalid_argument("hs family: s too large for 64 vertices");
  std::vector<std::string> names{"x"};
  std::vector<VertexSubset> edges;
  for (std::size_t i = 1; i <= s; ++i) {
    names.push_back("y" + std::to_string(i));
    names.push_back("z" + std::to_string(i));
    edges.push_back(VertexSubset{0, 2 * i - 1, 2 * i});
  }
  return Hypergraph(make_labels(std::move(names)), std::move(edges));
}

Hypergraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  if (n > kMaxVertices) throw std::invalid_argument("cycle: n exceeds 64");
  std::vector<VertexSubset> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(VertexSubset{i, (i + 1) % n});
  return Hypergraph(numbered_labels(n), std::move(edges));
}

Hypergraph path_graph(std::size_t n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  if (n > kMaxVertices) throw std::invalid_argument("path: n exceeds 64");
  std::vector<VertexSubset> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back(VertexSubset{i, i + 1});
  return Hypergraph(numbered_labels(n), std::move(edges));
}

Hypergraph complete_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  if (n > kMaxVertices) throw std::invalid_argument("complete graph: n exceeds 64");
  std::vector<VertexSubset> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back(VertexSubset{i, j});
  return Hypergraph(numbered_labels(n), std::move(edges));
}

Hypergraph star_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1 leaves");
  if (n + 1 > kMaxVertices) throw std::invalid_argument("star: too many leaves");
  std::vector<std::string> names{"c"};
  std::vector<VertexSubset> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back(std::to_string(i));
    edges.push_back(VertexSubset{0, i});
  }
  return Hypergraph(make_labels(std::move(names)), std::move(edges));
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::uint64_t{1} << 62)) return r;
  }
  return r;
}

}  // namespace

Hypergraph random_uniform(std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_uniform: n must be in 1..64");
  if (d < 1 || d > n) throw std::invalid_argument("random_uniform: need 1 <= d <= n");
  if (m < 1 || m > binomial(n, d)) throw std::invalid_argument("random_uniform: m must be in 1..C(n,d)");
  Rng rng(seed);
  std::vector<VertexSubset> edges;
  while (edges.size() < m) {
    // Partial Fisher-Yates for a uniform d-subset.
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    VertexSubset e;
    for (std::size_t i = 0; i < d; ++i) {
      auto j = i + rng.below(n - i);
      std::swap(pool[i], pool[j]);
      e = e.with(pool[i]);
    }
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Hypergraph(numbered_labels(n), std::move(edges));
}

Hypergraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_graph: n must be in 1..64");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p must lie in [0,1]");
  Rng rng(seed);
  std::vector<VertexSubset> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(p)) edges.push_back(VertexSubset{i, j});
  return Hypergraph(numbered_labels(n), std::move(edges));
}

Hypergraph generate_family(std::string_view name, const FamilyParams& params) {
  std::string id(name);
  std::replace(id.begin(), id.end(), '-', '_');
  if (id == "hs") return hs_family(params.s);
  if (id == "cycle") return cycle_graph(params.n);
  if (id == "path") return path_graph(params.n);
  if (id == "complete") return complete_graph(params.n);
  if (id == "star") return star_graph(params.n);
  if (id == "random_uniform") return random_uniform(params.n, params.d, params.m, params.seed);
  if (id == "random_graph") return random_graph(params.n, params.p, params.seed);
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

}  // namespace regtool
