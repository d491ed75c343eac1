#include "regtool/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "text_format.hpp"

namespace regtool {

SimplicialComplex::SimplicialComplex(Labels labels, std::vector<VertexSubset> facets)
    : labels_(std::move(labels)) {
  if (!labels_) throw std::invalid_argument("complex needs a label list");
  if (labels_->size() > kMaxVertices) throw std::invalid_argument("at most 64 vertices are supported");
  const auto universe = VertexSubset::prefix(labels_->size());
  for (auto f : facets) {
    if (!f.is_subset_of(universe)) throw std::invalid_argument("facet uses a vertex outside the universe");
  }
  facets_ = maximal_members(std::move(facets));
}

VertexSubset SimplicialComplex::vertices() const {
  VertexSubset all;
  for (auto f : facets_) all |= f;
  return all;
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw std::invalid_argument("the void complex has no dimension");
  // Facets are sorted by cardinality, so the last one is largest.
  return static_cast<int>(facets_.back().size()) - 1;
}

bool SimplicialComplex::contains_face(VertexSubset s) const {
  return std::any_of(facets_.begin(), facets_.end(), [s](VertexSubset f) { return s.is_subset_of(f); });
}

std::vector<VertexSubset> SimplicialComplex::faces() const {
  std::vector<VertexSubset> out;
  for (auto f : facets_) {
    const std::uint64_t bits = f.bits();
    std::uint64_t sub = bits;
    while (true) {
      out.emplace_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & bits;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<VertexSubset>> SimplicialComplex::faces_by_size() const {
  std::vector<std::vector<VertexSubset>> levels;
  for (auto s : faces()) {
    if (levels.size() <= s.size()) levels.resize(s.size() + 1);
    levels[s.size()].push_back(s);
  }
  return levels;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto w : k.words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

CanonicalKey canonical_key(const SimplicialComplex& c) {
  CanonicalKey key;
  if (c.is_void()) {
    key.words.push_back(~std::uint64_t{0});
    return key;
  }
  const auto support = c.vertices();
  key.words.reserve(c.facets().size() + 1);
  key.words.push_back(support.size());
  // compress is monotone on subsets of the support, so the canonical facet
  // order survives relabelling.
  for (auto f : c.facets()) key.words.push_back(compress(f, support).bits());
  return key;
}

namespace {

void maximal_independent_sets(const std::vector<VertexSubset>& edges, std::size_t n, std::size_t v,
                              VertexSubset chosen, VertexSubset rejected,
                              std::vector<VertexSubset>& out) {
  if (v == n) {
    // Maximal: every rejected vertex is blocked by an edge whose rest is chosen.
    for (auto u : rejected) {
      bool blocked = false;
      for (auto e : edges) {
        if (e.contains(u) && e.without(u).is_subset_of(chosen)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) return;
    }
    out.push_back(chosen);
    return;
  }
  const auto with_v = chosen.with(v);
  bool can_take = true;
  bool can_be_blocked = false;
  for (auto e : edges) {
    if (!e.contains(v)) continue;
    if (e.is_subset_of(with_v)) can_take = false;
    // v can only be blocked later if no already-rejected vertex sits in e.
    if (!e.intersects(rejected)) can_be_blocked = true;
  }
  if (can_take) maximal_independent_sets(edges, n, v + 1, with_v, rejected, out);
  if (can_be_blocked) maximal_independent_sets(edges, n, v + 1, chosen, rejected.with(v), out);
}

}  // namespace

SimplicialComplex independence_complex(const Hypergraph& h) {
  std::vector<VertexSubset> facets;
  maximal_independent_sets(h.edges(), h.vertex_count(), 0, VertexSubset{}, VertexSubset{}, facets);
  return SimplicialComplex(h.labels(), std::move(facets));
}

Hypergraph minimal_nonfaces(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("the void complex has no Stanley-Reisner hypergraph");
  const auto universe = VertexSubset::prefix(c.universe_size());
  // A nonface meets the complement of every facet: minimal nonfaces are the
  // minimal transversals of the facet complements.
  std::vector<VertexSubset> complements;
  for (auto f : c.facets()) complements.push_back(universe - f);
  std::sort(complements.begin(), complements.end());
  if (complements.front().empty()) return Hypergraph(c.labels(), {});

  std::vector<VertexSubset> transversals{VertexSubset{}};
  for (auto comp : complements) {
    std::vector<VertexSubset> next;
    for (auto t : transversals) {
      if (t.intersects(comp)) {
        next.push_back(t);
      } else {
        for (auto v : comp) next.push_back(t.with(v));
      }
    }
    transversals = minimal_members(std::move(next));
  }
  return Hypergraph(c.labels(), std::move(transversals));
}

SimplicialComplex link(const SimplicialComplex& c, VertexSubset sigma) {
  std::vector<VertexSubset> facets;
  for (auto f : c.facets()) {
    if (sigma.is_subset_of(f)) facets.push_back(f - sigma);
  }
  if (facets.empty()) throw std::invalid_argument("link: the given set is not a face");
  return SimplicialComplex(c.labels(), std::move(facets));
}

SimplicialComplex deletion(const SimplicialComplex& c, std::size_t v) {
  if (v >= c.universe_size()) throw std::invalid_argument("deletion: vertex outside the universe");
  std::vector<VertexSubset> facets;
  facets.reserve(c.facets().size());
  for (auto f : c.facets()) facets.push_back(f.without(v));
  return SimplicialComplex(c.labels(), std::move(facets));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexSubset s) {
  if (!s.is_subset_of(VertexSubset::prefix(c.universe_size()))) {
    throw std::invalid_argument("induced_subcomplex: subset outside the universe");
  }
  std::vector<VertexSubset> facets;
  facets.reserve(c.facets().size());
  for (auto f : c.facets()) facets.push_back(f & s);
  return SimplicialComplex(c.labels(), std::move(facets));
}

SimplicialComplex pure_skeleton(const SimplicialComplex& c, int n) {
  if (c.is_void()) throw std::invalid_argument("pure_skeleton of the void complex");
  if (n < -1 || n > c.dimension()) throw std::invalid_argument("pure_skeleton: dimension out of range");
  const auto k = static_cast<std::size_t>(n + 1);
  std::vector<VertexSubset> top;
  for (auto f : c.facets()) {
    if (f.size() < k) continue;
    if (f.size() == k) {
      top.push_back(f);
      continue;
    }
    // All k-element subsets of f via Gosper's hack in compressed coordinates.
    const std::size_t m = f.size();
    if (k == 0) {
      top.push_back(VertexSubset{});
      continue;
    }
    std::uint64_t comb = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << m;
    while (comb < limit) {
      top.push_back(expand(VertexSubset(comb), f));
      const std::uint64_t low = comb & (~comb + 1);
      const std::uint64_t ripple = comb + low;
      comb = (((ripple ^ comb) >> 2) / low) | ripple;
    }
  }
  std::sort(top.begin(), top.end());
  top.erase(std::unique(top.begin(), top.end()), top.end());
  return SimplicialComplex(c.labels(), std::move(top));
}

bool is_simplex(const SimplicialComplex& c) { return c.facets().size() == 1; }

std::size_t complex_vertex_degree(const SimplicialComplex& c, std::size_t v) {
  if (v >= c.universe_size()) throw std::invalid_argument("vertex outside the universe");
  const auto h = minimal_nonfaces(c);
  return static_cast<std::size_t>(
      std::count_if(h.edges().begin(), h.edges().end(), [v](VertexSubset e) { return e.contains(v); }));
}

SimplicialComplex cone_over(const SimplicialComplex& c, std::string apex_label) {
  if (c.is_void()) throw std::invalid_argument("cannot cone over the void complex");
  auto names = *c.labels();
  const std::size_t apex = names.size();
  names.push_back(std::move(apex_label));
  std::vector<VertexSubset> facets;
  for (auto f : c.facets()) facets.push_back(f.with(apex));
  return SimplicialComplex(make_labels(std::move(names)), std::move(facets));
}

SimplicialComplex parse_facets(std::string_view text) {
  auto doc = detail::parse_set_list(text);
  if (doc.sets.empty()) throw std::invalid_argument("no facets");
  return SimplicialComplex(make_labels(std::move(doc.names)), std::move(doc.sets));
}

std::string to_text(const SimplicialComplex& c) { return detail::format_set_list(*c.labels(), c.facets()); }

}  // namespace regtool
