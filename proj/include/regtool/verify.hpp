#ifndef REGTOOL_VERIFY_HPP
#define REGTOOL_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "regtool/cache.hpp"
#include "regtool/complex.hpp"
#include "regtool/homology.hpp"
#include "regtool/hypergraph.hpp"
#include "regtool/regularity.hpp"

namespace regtool {

enum class Outcome { pass, fail, skipped };
/// le: left ≤ right[0]; eq: left = right[0]; ne: left ≠ right[0];
/// member: left ∈ right.
enum class Relation { le, eq, ne, member };

std::string_view outcome_name(Outcome o);
std::string_view relation_name(Relation r);

/// One atomic assertion about one instance. A chain a ≤ b ≤ c is reported as
/// two entries.
struct PropertyReport {
  std::string property;
  std::string instance;
  std::uint32_t field_char = 2;
  Relation relation = Relation::le;
  long long left = 0;
  std::vector<long long> right;
  Outcome outcome = Outcome::skipped;
  /// Witnesses behind the values, or why the hypothesis failed.
  std::vector<std::string> certificates;

  bool hypothesis_satisfied() const { return outcome != Outcome::skipped; }
};

PropertyReport assert_relation(std::string property, std::string instance, FieldPrime p, Relation relation,
                               long long left, std::vector<long long> right,
                               std::vector<std::string> certificates = {});
PropertyReport skipped(std::string property, std::string instance, FieldPrime p, std::string reason);

/// Shared state for a run of checks. Every regularity report computed by the
/// checks is passed to `on_report` together with its complex.
struct CheckContext {
  ComputeCache* cache = nullptr;
  Method method = Method::automatic;
  std::function<void(const SimplicialComplex&, const RegularityReport&)> on_report;
  /// Passed on as RegularityOptions::self_check.
  bool self_check = true;

  RegularityReport reg(const SimplicialComplex& c, FieldPrime p) const;
  RegularityReport reg(const Hypergraph& h, FieldPrime p) const;
};

/// Compact instance text: "{a,b} {b,c}".
std::string describe(const Hypergraph& h);
std::string describe(const SimplicialComplex& c);
std::string describe(const Certificate& cert, const Labels& labels);

/// Σ over a maximum induced matching ≤ reg ≤ weight of a minimum 2-collage;
/// for d-uniform H also (d−1)ν_ind ≤ reg ≤ (d−1)c; for graphs also c = ν_min.
/// Throws on edgeless H.
std::vector<PropertyReport> check_collage_bounds(const Hypergraph& h, FieldPrime p, const CheckContext& ctx = {},
                                                 const std::string& instance = {});

/// reg(H) ≤ Σ reg(H_i), H_i spanned by each part on the full vertex set.
/// Throws unless the parts cover the edges (indices into h.edges()).
std::vector<PropertyReport> check_km_subadditivity(const Hypergraph& h,
                                                   const std::vector<std::vector<std::size_t>>& partition,
                                                   FieldPrime p, const CheckContext& ctx = {},
                                                   const std::string& instance = {});

/// reg(I(H)) ≤ max{reg(I(H∖E)), reg(I(H_E)) − 1}. Throws unless H has at
/// least two edges and e is one of them.
std::vector<PropertyReport> check_edge_split(const Hypergraph& h, VertexSubset e, FieldPrime p,
                                             const CheckContext& ctx = {}, const std::string& instance = {});

/// Per vertex: reg Δ ∈ {reg(link v)+1, reg(del v)}. Once per complex: the
/// vertex-link sandwich, a vertex of nonzero degree with reg Δ ≤ reg(link)+1,
/// the same for a vertex of degree > 1 when Δ = Δ(G) for a graph G without
/// isolated edges, and reg Δ ≤ weak packing statistic.
std::vector<PropertyReport> check_dichotomy(const SimplicialComplex& c, FieldPrime p, const CheckContext& ctx = {},
                                            const std::string& instance = {});

/// At shedding vertices with sequentially CM deletion: reg equality and
/// homology lifting. When Δ is vertex-decomposable: the Betti splitting at
/// every shedding step of its decomposition, and reg_vd_recursive agreeing
/// with reg_by_subcomplexes.
std::vector<PropertyReport> check_vd_formula(const SimplicialComplex& c, FieldPrime p, const CheckContext& ctx = {},
                                             const std::string& instance = {});

/// reg(R/I(G)) ≤ ζ(G) ≤ ν(G). Throws unless G is a graph.
std::vector<PropertyReport> check_zeta_bound(const Hypergraph& g, FieldPrime p, const CheckContext& ctx = {},
                                             const std::string& instance = {});

/// reg_by_subcomplexes = reg_by_links.
std::vector<PropertyReport> check_method_agreement(const SimplicialComplex& c, FieldPrime p,
                                                   const CheckContext& ctx = {}, const std::string& instance = {});

// Instance sources.

/// Every labeled graph on n ≤ 8 vertices, by edge bitmask over the pairs in
/// lexicographic order.
void for_each_graph(std::size_t n, const std::function<void(const Hypergraph&)>& fn);

/// Every non-void complex on vertex universe [n], n ≤ 6, given as face masks:
/// bit s of the mask is set when subset s is a face.
void for_each_face_mask(std::size_t n, const std::function<void(std::uint64_t)>& fn);
SimplicialComplex complex_from_face_mask(std::size_t n, std::uint64_t faces);

/// m random subsets of [n], each vertex kept with probability density.
SimplicialComplex random_complex(std::size_t n, std::size_t m, double density, std::uint64_t seed);

/// Assigns every edge index to one of `parts` classes; no class is empty
/// when there are at least `parts` edges.
std::vector<std::vector<std::size_t>> random_partition(std::size_t edges, std::size_t parts, std::uint64_t seed);

/// Families for the verify verb: random-graph, random-uniform, random-complex,
/// all-graphs, all-complexes, hs, cycle, path, complete, star.
struct SweepOptions {
  std::string family;
  std::size_t trials = 20;
  FamilyParams params;
  std::vector<FieldPrime> primes;
};

std::vector<PropertyReport> run_sweep(const SweepOptions& options, const CheckContext& ctx = {});

}  // namespace regtool

#endif  // REGTOOL_VERIFY_HPP
