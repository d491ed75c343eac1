#ifndef REGTOOL_HYPERGRAPH_HPP
#define REGTOOL_HYPERGRAPH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regtool/vertex_subset.hpp"

namespace regtool {

/// Vertex names, shared between a hypergraph and everything derived from it.
using Labels = std::shared_ptr<const std::vector<std::string>>;

Labels make_labels(std::vector<std::string> names);
/// "1", "2", ..., "n"
Labels numbered_labels(std::size_t n);

/// A simple hypergraph (clutter) over a labelled vertex universe. It stands
/// for the square-free monomial ideal generated by its edges.
///
/// Construction minimalizes the edge list: supersets and duplicates are
/// dropped and the survivors kept in canonical order. Empty edges and
/// indices outside the universe are rejected with std::invalid_argument.
class Hypergraph {
 public:
  Hypergraph() : Hypergraph(make_labels({}), {}) {}
  Hypergraph(Labels labels, std::vector<VertexSubset> edges);

  std::size_t vertex_count() const { return labels_->size(); }
  VertexSubset vertices() const { return VertexSubset::prefix(vertex_count()); }
  const Labels& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return (*labels_)[v]; }
  const std::vector<VertexSubset>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(VertexSubset e) const;
  std::optional<std::size_t> edge_index(VertexSubset e) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return *a.labels_ == *b.labels_ && a.edges_ == b.edges_;
  }

 private:
  Labels labels_;
  std::vector<VertexSubset> edges_;
};

/// Inclusion-minimal members, deduplicated, canonical order.
std::vector<VertexSubset> minimalize_edges(std::vector<VertexSubset> edges);

/// Parses the edge-list text format: one edge per line, whitespace-separated
/// labels, `#` starts a comment line. Labels get indices in order of first
/// appearance. A `# vertices: a b c` header (as written by to_text) fixes the
/// label order and keeps isolated vertices.
Hypergraph parse_hypergraph(std::string_view text);

/// Canonical serialization; parse_hypergraph(to_text(h)) == h.
std::string to_text(const Hypergraph& h);

/// Restriction to W, relabelled onto W in index order.
Hypergraph induced_subhypergraph(const Hypergraph& h, VertexSubset w);

/// Same vertices, edge `e` removed. Throws if `e` is not an edge.
Hypergraph delete_edge(const Hypergraph& h, VertexSubset e);

/// Minimal members of { e' | e : e' != e an edge }. Requires at least two edges.
Hypergraph edge_fusion(const Hypergraph& h, VertexSubset e);

/// Common edge size, or nullopt when sizes differ or there are no edges.
std::optional<std::size_t> uniformity(const Hypergraph& h);

/// True when every edge has exactly two vertices (vacuously for edgeless H).
bool is_graph(const Hypergraph& h);

std::vector<std::size_t> vertex_degrees(const Hypergraph& h);

/// Parameters for the named families. Only the fields a family uses matter.
struct FamilyParams {
  std::size_t s = 2;
  std::size_t n = 5;
  std::size_t d = 3;
  std::size_t m = 5;
  double p = 0.5;
  std::uint64_t seed = 0;
};

/// Families: hs, cycle, path, complete, star, random_uniform, random_graph.
/// Hyphenated spellings (random-uniform) are accepted too.
Hypergraph generate_family(std::string_view name, const FamilyParams& params);

Hypergraph hs_family(std::size_t s);
Hypergraph cycle_graph(std::size_t n);
Hypergraph path_graph(std::size_t n);
Hypergraph complete_graph(std::size_t n);
/// K_{1,n}: a center joined to n leaves.
Hypergraph star_graph(std::size_t n);
Hypergraph random_uniform(std::size_t n, std::size_t d, std::size_t m, std::uint64_t seed);
Hypergraph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace regtool

#endif  // REGTOOL_HYPERGRAPH_HPP
