#include "regtool/decomp.hpp"

#include <map>

namespace regtool {

bool is_shedding_vertex(const SimplicialComplex& c, std::size_t v) {
  if (c.is_void() || !c.vertices().contains(v)) {
    throw std::invalid_argument("is_shedding_vertex: not a vertex of the complex");
  }
  // A facet F ∋ v leaves F∖v behind in the deletion; that is a facet of the
  // deletion but not of Δ unless some facet avoiding v swallows it.
  for (auto f : c.facets()) {
    if (!f.contains(v)) continue;
    const auto rest = f.without(v);
    bool swallowed = false;
    for (auto g : c.facets()) {
      if (!g.contains(v) && rest.is_subset_of(g)) {
        swallowed = true;
        break;
      }
    }
    if (!swallowed) return false;
  }
  return true;
}

namespace {

VdEntry search(const SimplicialComplex& c, ComputeCache& cache) {
  if (is_simplex(c)) return {true, -1};
  const bool store = cache.storable(c);
  CanonicalKey key;
  if (store) {
    key = canonical_key(c);
    if (auto hit = cache.vd_table.find(key)) return *hit;
  }
  VdEntry entry{false, -1};
  int position = 0;
  for (auto v : c.vertices()) {
    if (is_shedding_vertex(c, v) && search(link(c, VertexSubset::singleton(v)), cache).decomposable &&
        search(deletion(c, v), cache).decomposable) {
      entry = {true, position};
      break;
    }
    ++position;
  }
  if (store) cache.vd_table.insert(std::move(key), entry);
  return entry;
}

SimplicialComplex failure_witness(const SimplicialComplex& c, ComputeCache& cache) {
  for (auto v : c.vertices()) {
    if (!is_shedding_vertex(c, v)) continue;
    auto l = link(c, VertexSubset::singleton(v));
    if (!search(l, cache).decomposable) return failure_witness(l, cache);
    auto d = deletion(c, v);
    if (!search(d, cache).decomposable) return failure_witness(d, cache);
  }
  return c;
}

std::shared_ptr<const SheddingNode> build_tree(
    const SimplicialComplex& c, ComputeCache& cache,
    std::map<std::vector<VertexSubset>, std::shared_ptr<const SheddingNode>>& seen) {
  if (auto it = seen.find(c.facets()); it != seen.end()) return it->second;
  auto node = std::make_shared<SheddingNode>(SheddingNode{c, std::nullopt, nullptr, nullptr});
  if (auto v = chosen_shedding_vertex(c, cache)) {
    node->vertex = *v;
    node->link = build_tree(link(c, VertexSubset::singleton(*v)), cache, seen);
    node->deletion = build_tree(deletion(c, *v), cache, seen);
  }
  seen.emplace(c.facets(), node);
  return node;
}

}  // namespace

std::optional<std::size_t> chosen_shedding_vertex(const SimplicialComplex& c, ComputeCache& cache) {
  if (c.is_void()) throw std::invalid_argument("vertex decomposability of the void complex");
  const auto entry = search(c, cache);
  if (!entry.decomposable) {
    throw NotVertexDecomposable("complex is not vertex-decomposable", failure_witness(c, cache));
  }
  if (entry.shedding_vertex < 0) return std::nullopt;
  return expand(VertexSubset::singleton(static_cast<std::size_t>(entry.shedding_vertex)), c.vertices()).front();
}

bool decomposes(const SimplicialComplex& c, ComputeCache* cache) {
  if (c.is_void()) throw std::invalid_argument("vertex decomposability of the void complex");
  ComputeCache local;
  return search(c, cache ? *cache : local).decomposable;
}

VdResult is_vertex_decomposable(const SimplicialComplex& c, ComputeCache* cache) {
  if (c.is_void()) throw std::invalid_argument("vertex decomposability of the void complex");
  ComputeCache local;
  auto& memo = cache ? *cache : local;
  VdResult result;
  result.decomposable = search(c, memo).decomposable;
  if (result.decomposable) {
    std::map<std::vector<VertexSubset>, std::shared_ptr<const SheddingNode>> seen;
    result.certificate.root = build_tree(c, memo, seen);
  } else {
    result.certificate.failure_witness = failure_witness(c, memo);
  }
  return result;
}

std::vector<std::size_t> shedding_order(const SimplicialComplex& c, ComputeCache* cache) {
  ComputeCache local;
  auto& memo = cache ? *cache : local;
  std::vector<std::size_t> order;
  auto current = c;
  while (auto v = chosen_shedding_vertex(current, memo)) {
    order.push_back(*v);
    current = deletion(current, *v);
  }
  return order;
}

namespace {

bool cm_uncached(const SimplicialComplex& c, FieldPrime p, ComputeCache& cache) {
  for (auto sigma : c.faces()) {
    const auto l = link(c, sigma);
    const auto betti = cache.betti(l, p);
    const int top = l.dimension();
    for (int i = -1; i < top; ++i) {
      if (betti[i] != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_cohen_macaulay(const SimplicialComplex& c, FieldPrime p, ComputeCache* cache) {
  if (c.is_void()) throw std::invalid_argument("Cohen-Macaulay test of the void complex");
  ComputeCache local;
  auto& memo = cache ? *cache : local;
  if (!memo.storable(c)) return cm_uncached(c, p, memo);
  auto key = ComputeCache::tagged(canonical_key(c), p.value());
  if (auto hit = memo.cm_table.find(key)) return *hit;
  return memo.cm_table.insert(std::move(key), cm_uncached(c, p, memo));
}

bool is_sequentially_cm(const SimplicialComplex& c, FieldPrime p, ComputeCache* cache) {
  if (c.is_void()) throw std::invalid_argument("sequential Cohen-Macaulay test of the void complex");
  ComputeCache local;
  auto& memo = cache ? *cache : local;
  for (int n = 0; n <= c.dimension(); ++n) {
    if (!is_cohen_macaulay(pure_skeleton(c, n), p, &memo)) return false;
  }
  return true;
}

}  // namespace regtool
