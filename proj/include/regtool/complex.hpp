#ifndef REGTOOL_COMPLEX_HPP
#define REGTOOL_COMPLEX_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "regtool/hypergraph.hpp"
#include "regtool/vertex_subset.hpp"

namespace regtool {

/// A simplicial complex given by its facets over a labelled vertex universe.
///
/// Two degenerate values are kept apart: the void complex (no faces at all,
/// no facets) and the empty complex {∅} (one facet, the empty set). Universe
/// elements that lie in no facet are non-vertices of the complex.
class SimplicialComplex {
 public:
  /// Facets are maximalized and sorted; an empty list gives the void complex.
  SimplicialComplex(Labels labels, std::vector<VertexSubset> facets);

  static SimplicialComplex void_complex(Labels labels) { return SimplicialComplex(std::move(labels), {}); }
  static SimplicialComplex simplex(Labels labels, VertexSubset face) {
    return SimplicialComplex(std::move(labels), {face});
  }

  std::size_t universe_size() const { return labels_->size(); }
  const Labels& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return (*labels_)[v]; }
  const std::vector<VertexSubset>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  /// Union of the facets.
  VertexSubset vertices() const;
  /// Largest facet size minus one; -1 for {∅}. Throws on the void complex.
  int dimension() const;
  bool contains_face(VertexSubset s) const;
  /// Every face, in canonical order (so ∅ first when the complex is not void).
  std::vector<VertexSubset> faces() const;
  /// faces grouped by cardinality: result[k] holds the faces with k vertices.
  std::vector<std::vector<VertexSubset>> faces_by_size() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_ && *a.labels_ == *b.labels_;
  }

 private:
  Labels labels_;
  std::vector<VertexSubset> facets_;
};

/// Memo key: the facets relabelled onto 0..k-1 in vertex index order,
/// preceded by the vertex count k. Non-vertices are dropped, so complexes that
/// differ only by unused universe elements or by an order-preserving
/// relabelling share a key.
struct CanonicalKey {
  std::vector<std::uint64_t> words;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

CanonicalKey canonical_key(const SimplicialComplex& c);

/// Faces are the independent sets of h (subsets containing no edge).
SimplicialComplex independence_complex(const Hypergraph& h);

/// The simple hypergraph whose independence complex is c (its Stanley–Reisner
/// generators). Throws on the void complex.
Hypergraph minimal_nonfaces(const SimplicialComplex& c);

/// Faces τ disjoint from σ with τ ∪ σ a face. Throws when σ is not a face.
SimplicialComplex link(const SimplicialComplex& c, VertexSubset sigma);
/// Faces avoiding v; v stays in the universe as a non-vertex.
SimplicialComplex deletion(const SimplicialComplex& c, std::size_t v);
/// Faces contained in s.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexSubset s);
/// Subcomplex generated by the n-dimensional faces; -1 <= n <= dim.
SimplicialComplex pure_skeleton(const SimplicialComplex& c, int n);
/// Exactly one facet; {∅} counts, the void complex does not.
bool is_simplex(const SimplicialComplex& c);
/// Number of minimal non-faces containing v.
std::size_t complex_vertex_degree(const SimplicialComplex& c, std::size_t v);
/// Cone with a fresh apex appended to the universe.
SimplicialComplex cone_over(const SimplicialComplex& c, std::string apex_label);

/// Facet-list text: same format as edge lists.
SimplicialComplex parse_facets(std::string_view text);
std::string to_text(const SimplicialComplex& c);

}  // namespace regtool

#endif  // REGTOOL_COMPLEX_HPP
