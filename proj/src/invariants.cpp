#include "regtool/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace regtool {

namespace {

VertexSubset union_of(const Hypergraph& h, const std::vector<std::size_t>& members) {
  VertexSubset u;
  for (auto i : members) u |= h.edges()[i];
  return u;
}

std::size_t edges_inside(const Hypergraph& h, VertexSubset s) {
  return static_cast<std::size_t>(
      std::count_if(h.edges().begin(), h.edges().end(), [s](VertexSubset e) { return e.is_subset_of(s); }));
}

void require_graph(const Hypergraph& g, const char* what) {
  if (!is_graph(g)) throw std::invalid_argument(std::string(what) + " is defined for graphs only");
}

// Matching search over edges in index order, include-first, so the first
// optimum met is the lexicographically least one.
struct MatchingSearch {
  enum class Goal { largest, smallest_maximal, largest_induced };

  const Hypergraph& h;
  Goal goal;
  std::vector<std::size_t> chosen;
  std::optional<std::vector<std::size_t>> best;

  void run(std::size_t i, VertexSubset used) {
    const auto& edges = h.edges();
    const std::size_t m = edges.size();
    if (goal == Goal::smallest_maximal) {
      if (best && chosen.size() >= best->size()) return;
    } else if (best && chosen.size() + (m - i) <= best->size()) {
      return;
    }
    if (i == m) {
      if (goal == Goal::smallest_maximal) {
        const bool maximal =
            std::all_of(edges.begin(), edges.end(), [used](VertexSubset e) { return e.intersects(used); });
        if (!maximal) return;
      }
      best = chosen;
      return;
    }
    const auto e = edges[i];
    if (!e.intersects(used)) {
      const auto grown = used | e;
      // An extra induced edge can never disappear as the union grows.
      const bool allowed = goal != Goal::largest_induced || edges_inside(h, grown) == chosen.size() + 1;
      if (allowed) {
        chosen.push_back(i);
        run(i + 1, grown);
        chosen.pop_back();
      }
    }
    run(i + 1, used);
  }
};

Extremum run_matching(const Hypergraph& h, MatchingSearch::Goal goal, FamilyKind kind) {
  MatchingSearch search{h, goal, {}, std::nullopt};
  search.run(0, VertexSubset{});
  Extremum out;
  out.witness.kind = kind;
  if (search.best) {
    out.witness.members = *search.best;
    out.value = search.best->size();
  }
  return out;
}

}  // namespace

bool is_matching(const Hypergraph& h, const std::vector<std::size_t>& members) {
  VertexSubset used;
  for (auto i : members) {
    if (i >= h.edge_count()) return false;
    const auto e = h.edges()[i];
    if (e.intersects(used)) return false;
    used |= e;
  }
  return true;
}

bool is_induced_matching(const Hypergraph& h, const std::vector<std::size_t>& members) {
  return is_matching(h, members) && edges_inside(h, union_of(h, members)) == members.size();
}

Extremum matching_number(const Hypergraph& h) {
  return run_matching(h, MatchingSearch::Goal::largest, FamilyKind::matching);
}

Extremum minimax_matching_number(const Hypergraph& h) {
  return run_matching(h, MatchingSearch::Goal::smallest_maximal, FamilyKind::matching);
}

Extremum induced_matching_number(const Hypergraph& h) {
  return run_matching(h, MatchingSearch::Goal::largest_induced, FamilyKind::induced_matching);
}

bool is_t_separated(VertexSubset e, VertexSubset f, std::size_t t) {
  if (e == f) throw std::invalid_argument("t-separation compares two distinct edges");
  return (e - f).size() >= t || (f - e).size() >= t;
}

bool is_two_collage(const Hypergraph& h, const EdgeFamily& family) {
  for (auto i : family.members) {
    if (i >= h.edge_count()) throw std::invalid_argument("edge family index out of range");
  }
  return std::all_of(h.edges().begin(), h.edges().end(), [&](VertexSubset e) {
    return std::any_of(family.members.begin(), family.members.end(),
                       [&](std::size_t j) { return (e - h.edges()[j]).size() <= 1; });
  });
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CollageSearch {
  std::size_t m;
  std::vector<Bits> covers;  // covers[j] = edges E with |E∖F_j| ≤ 1
  std::vector<std::size_t> chosen;

  static bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

  std::optional<std::size_t> first_uncovered(const Bits& covered) const {
    for (std::size_t i = 0; i < m; ++i) {
      if (!test(covered, i)) return i;
    }
    return std::nullopt;
  }

  // Lexicographic k-combinations starting at index `from`.
  bool run(std::size_t from, std::size_t k, const Bits& covered) {
    const auto gap = first_uncovered(covered);
    if (!gap) return true;
    if (k == 0) return false;
    for (std::size_t j = from; j + k <= m; ++j) {
      // Some pick at index ≥ j must cover the lowest uncovered edge.
      bool reachable = false;
      for (std::size_t t = j; t < m; ++t) {
        if (test(covers[t], *gap)) {
          reachable = true;
          break;
        }
      }
      if (!reachable) return false;
      Bits next = covered;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] |= covers[j][w];
      chosen.push_back(j);
      if (run(j + 1, k - 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

Extremum min_two_collage(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  if (m == 0) throw std::invalid_argument("min_two_collage needs at least one edge");
  CollageSearch search{m, {}, {}};
  const std::size_t words = (m + 63) / 64;
  search.covers.assign(m, Bits(words, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if ((h.edges()[i] - h.edges()[j]).size() <= 1) search.covers[j][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  for (std::size_t k = 1; k <= m; ++k) {
    search.chosen.clear();
    if (search.run(0, k, Bits(words, 0))) {
      return Extremum{k, EdgeFamily{search.chosen, FamilyKind::collage}};
    }
  }
  throw std::logic_error("the full edge set is always a 2-collage");
}

std::size_t collage_weight(const Hypergraph& h, const EdgeFamily& family) {
  std::size_t total = 0;
  for (auto i : family.members) {
    if (i >= h.edge_count()) throw std::invalid_argument("edge family index out of range");
    total += h.edges()[i].size() - 1;
  }
  return total;
}

namespace {

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r,
                   std::vector<std::size_t> p, std::vector<std::size_t> x, std::vector<EdgeFamily>& out) {
  if (p.empty() && x.empty()) {
    auto members = r;
    std::sort(members.begin(), members.end());
    out.push_back(EdgeFamily{std::move(members), FamilyKind::separated_family});
    return;
  }
  // Pivot on the vertex of P ∪ X with most neighbours in P.
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* pool : {&p, &x}) {
    for (auto u : *pool) {
      std::size_t cnt = 0;
      for (auto w : p) cnt += adj[u][w] ? 1 : 0;
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  }
  const auto candidates = p;
  for (auto v : candidates) {
    if (adj[pivot][v]) continue;
    std::vector<std::size_t> p2;
    std::vector<std::size_t> x2;
    for (auto w : p) {
      if (adj[v][w]) p2.push_back(w);
    }
    for (auto w : x) {
      if (adj[v][w]) x2.push_back(w);
    }
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<EdgeFamily> maximal_2separated_families(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  std::vector<EdgeFamily> out;
  if (m == 0) return out;
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      adj[i][j] = adj[j][i] = is_t_separated(h.edges()[i], h.edges()[j], 2);
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  std::vector<std::size_t> r;
  bron_kerbosch(adj, r, all, {}, out);
  std::sort(out.begin(), out.end(), [](const EdgeFamily& a, const EdgeFamily& b) { return a.members < b.members; });
  return out;
}

namespace {

struct GraphView {
  std::vector<VertexSubset> neighbours;
  std::vector<std::size_t> degree;
};

GraphView graph_view(const Hypergraph& g) {
  GraphView view{std::vector<VertexSubset>(g.vertex_count()), std::vector<std::size_t>(g.vertex_count(), 0)};
  for (auto e : g.edges()) {
    const auto a = e.front();
    const auto b = e.back();
    view.neighbours[a] = view.neighbours[a].with(b);
    view.neighbours[b] = view.neighbours[b].with(a);
    ++view.degree[a];
    ++view.degree[b];
  }
  return view;
}

VertexSubset closed_neighbourhood(const GraphView& view, VertexSubset centers) {
  VertexSubset out = centers;
  for (auto a : centers) out |= view.neighbours[a];
  return out;
}

std::size_t remainder_edges(const Hypergraph& g, VertexSubset removed) {
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [removed](VertexSubset e) { return !e.intersects(removed); }));
}

// Degree of v in the graph left after deleting `removed`.
std::size_t degree_outside(const GraphView& view, std::size_t v, VertexSubset removed) {
  return (view.neighbours[v] - removed).size();
}

// Some ordering a_1, a_2, ... of the centers gives each a_i degree > 1 once
// N[a_1 .. a_{i-1}] is deleted. Subset DP over the centers.
bool orderable(const GraphView& view, VertexSubset centers) {
  const std::vector<std::size_t> list(centers.begin(), centers.end());
  const std::size_t k = list.size();
  std::vector<char> ok(std::size_t{1} << k, 0);
  ok[0] = 1;
  for (std::size_t mask = 1; mask < ok.size(); ++mask) {
    for (std::size_t i = 0; i < k && !ok[mask]; ++i) {
      if (!((mask >> i) & 1U) || !ok[mask & ~(std::size_t{1} << i)]) continue;
      VertexSubset earlier;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i && ((mask >> j) & 1U)) earlier = earlier.with(list[j]);
      }
      if (degree_outside(view, list[i], closed_neighbourhood(view, earlier)) > 1) ok[mask] = 1;
    }
  }
  return ok.back() != 0;
}

// Every vertex outside `removed` has degree ≤ 1 there.
bool leaves_matching(const GraphView& view, VertexSubset removed) {
  for (std::size_t v = 0; v < view.degree.size(); ++v) {
    if (!removed.contains(v) && degree_outside(view, v, removed) > 1) return false;
  }
  return true;
}

}  // namespace

bool is_valid_star_packing(const Hypergraph& g, const StarPacking& packing) {
  require_graph(g, "star packing");
  const auto view = graph_view(g);
  for (auto a : packing.centers) {
    if (view.neighbours[a].intersects(packing.centers)) return false;
  }
  const auto covered = closed_neighbourhood(view, packing.centers);
  return packing.centers.size() <= 24 && orderable(view, packing.centers) && leaves_matching(view, covered) &&
         packing.remainder_edges == remainder_edges(g, covered);
}

ZetaResult zeta_star_packing(const Hypergraph& g) {
  require_graph(g, "zeta");
  const auto view = graph_view(g);
  std::optional<ZetaResult> best;
  // Independent sets, each tested for a valid ordering and a matching remainder.
  auto visit = [&](auto&& self, std::size_t v, VertexSubset centers, VertexSubset blocked) -> void {
    if (v == g.vertex_count()) {
      const auto covered = closed_neighbourhood(view, centers);
      if (!leaves_matching(view, covered) || !orderable(view, centers)) return;
      const auto rest = remainder_edges(g, covered);
      ZetaResult r{centers.size() + rest, StarPacking{centers, rest}};
      if (!best || r.value > best->value || (r.value == best->value && r.packing.centers < best->packing.centers)) {
        best = r;
      }
      return;
    }
    if (view.degree[v] > 1 && !blocked.contains(v)) self(self, v + 1, centers.with(v), blocked | view.neighbours[v]);
    self(self, v + 1, centers, blocked);
  };
  visit(visit, 0, VertexSubset{}, VertexSubset{});
  if (!best) throw std::logic_error("no maximal star packing found");
  if (!is_valid_star_packing(g, best->packing)) {
    throw std::logic_error("star packing remainder is not an induced matching");
  }
  return *best;
}

std::size_t weak_packing_statistic(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("weak packing statistic of the void complex");
  // link_Δ σ is a simplex exactly when a single facet contains σ.
  auto single_facet = [&](VertexSubset s) {
    std::size_t n = 0;
    for (auto f : c.facets()) {
      if (s.is_subset_of(f) && ++n > 1) return false;
    }
    return n == 1;
  };
  std::size_t best = 0;
  for (auto sigma : c.faces()) {
    if (sigma.size() <= best || !single_facet(sigma)) continue;
    const bool minimal = std::none_of(sigma.begin(), sigma.end(), [&](std::size_t v) { return single_facet(sigma.without(v)); });
    if (minimal) best = sigma.size();
  }
  return best;
}

std::size_t independence_number(const Hypergraph& g) {
  require_graph(g, "independence number");
  return static_cast<std::size_t>(independence_complex(g).dimension() + 1);
}

}  // namespace regtool
