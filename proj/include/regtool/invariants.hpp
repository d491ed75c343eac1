#ifndef REGTOOL_INVARIANTS_HPP
#define REGTOOL_INVARIANTS_HPP

#include <cstddef>
#include <vector>

#include "regtool/complex.hpp"
#include "regtool/hypergraph.hpp"

namespace regtool {

enum class FamilyKind { matching, induced_matching, collage, separated_family };

/// A set of edges of some hypergraph, by index into Hypergraph::edges().
struct EdgeFamily {
  std::vector<std::size_t> members;  // ascending
  FamilyKind kind = FamilyKind::matching;
  friend bool operator==(const EdgeFamily&, const EdgeFamily&) = default;
};

/// Centers a_1, ..., a_k of a maximal packing of nondegenerate stars, taken
/// one after another: each a_i has degree > 1 in G ∖ N[a_1, ..., a_{i-1}],
/// and nothing left after removing N[A] has degree > 1. remainder_edges
/// counts the edges of that remainder, an induced matching of G.
struct StarPacking {
  VertexSubset centers;
  std::size_t remainder_edges = 0;
};

/// Value of an extremal statistic with the witness achieving it.
struct Extremum {
  std::size_t value = 0;
  EdgeFamily witness;
};

bool is_matching(const Hypergraph& h, const std::vector<std::size_t>& members);
/// A matching whose vertex union induces no edge outside the matching.
bool is_induced_matching(const Hypergraph& h, const std::vector<std::size_t>& members);

/// ν: largest matching.
Extremum matching_number(const Hypergraph& h);
/// ν_min: smallest inclusion-maximal matching.
Extremum minimax_matching_number(const Hypergraph& h);
/// ν_ind: largest induced matching.
Extremum induced_matching_number(const Hypergraph& h);

/// |E∖F| ≥ t or |F∖E| ≥ t. Throws when e == f.
bool is_t_separated(VertexSubset e, VertexSubset f, std::size_t t);

/// Every edge E has some F in the family with |E∖F| ≤ 1.
bool is_two_collage(const Hypergraph& h, const EdgeFamily& family);

/// Exact minimum 2-collage, searched by increasing size; the witness is the
/// lexicographically least family of that size. Throws on edgeless H.
Extremum min_two_collage(const Hypergraph& h);

/// Σ (|E_i| − 1) over the family.
std::size_t collage_weight(const Hypergraph& h, const EdgeFamily& family);

/// All inclusion-maximal families of pairwise 2-separated edges, sorted.
std::vector<EdgeFamily> maximal_2separated_families(const Hypergraph& h);

struct ZetaResult {
  std::size_t value = 0;
  StarPacking packing;
};

/// ζ(G): maximum of |A| + ℓ over maximal center-separated packings of
/// nondegenerate stars, stars taken in what is left of G so they are vertex
/// disjoint. Ties go to the canonically least center set. Throws unless G is
/// a graph.
ZetaResult zeta_star_packing(const Hypergraph& g);

/// True when the centers admit a valid order, the packing is maximal and its
/// remainder count is right.
bool is_valid_star_packing(const Hypergraph& g, const StarPacking& packing);

/// Max cardinality among the inclusion-minimal faces whose link is a simplex.
std::size_t weak_packing_statistic(const SimplicialComplex& c);

/// α(G) = dim Δ(G) + 1. Throws unless G is a graph.
std::size_t independence_number(const Hypergraph& g);

}  // namespace regtool

#endif  // REGTOOL_INVARIANTS_HPP
