#ifndef REGTOOL_REGULARITY_HPP
#define REGTOOL_REGULARITY_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "regtool/cache.hpp"
#include "regtool/complex.hpp"
#include "regtool/homology.hpp"
#include "regtool/hypergraph.hpp"

namespace regtool {

enum class Method { automatic, subsets, links, vd };

std::string_view method_name(Method m);
/// Accepts auto, subsets, links, vd.
Method parse_method(std::string_view name);

/// Witness for reg ≥ degree: H̃_{degree-1} of Δ[set] (induced kind) or of
/// link_Δ set (link kind) is nonzero.
struct Certificate {
  enum class Kind { induced_subcomplex, link };
  Kind kind = Kind::induced_subcomplex;
  VertexSubset set;
  int degree = 0;
};

/// reg(R/I_Δ) with a witnessing certificate. reg(I) is value + 1.
struct RegularityReport {
  int value = 0;
  Certificate certificate;
  Method method = Method::automatic;
  std::uint32_t field_char = 2;
  /// The search stopped early at RegularityOptions::max_degree; value is then
  /// only a lower bound.
  bool capped = false;
};

struct RegularityOptions {
  ComputeCache* cache = nullptr;
  std::optional<int> max_degree;
  /// Re-verify the certificate before returning; a failure throws std::logic_error.
  bool self_check = true;
};

/// max d such that some induced subcomplex has H̃_{d-1} ≠ 0. Subsets are
/// scanned by cardinality then bit pattern; the certificate is the first
/// maximizer in that order.
RegularityReport reg_by_subcomplexes(const SimplicialComplex& c, FieldPrime p, const RegularityOptions& options = {});

/// max d such that some link has H̃_{d-1} ≠ 0; faces scanned in canonical order.
RegularityReport reg_by_links(const SimplicialComplex& c, FieldPrime p, const RegularityOptions& options = {});

/// reg Δ = max{reg(link_Δ v) + 1, reg(del_Δ v)} at each shedding vertex, down
/// to simplices (reg 0). With `order`, the given vertices are used along the
/// deletion spine; otherwise the decomposition's choices are. Throws
/// NotVertexDecomposable, or std::invalid_argument naming the first vertex of
/// `order` that does not shed.
RegularityReport reg_vd_recursive(const SimplicialComplex& c, FieldPrime p,
                                  const std::optional<std::vector<std::size_t>>& order = std::nullopt,
                                  const RegularityOptions& options = {});

/// Regularity of R/I(H) via its independence complex; automatic = links.
RegularityReport reg_edge_ideal(const Hypergraph& h, FieldPrime p, Method method = Method::automatic,
                                const RegularityOptions& options = {});

/// Dispatches on the method for an arbitrary complex.
RegularityReport regularity(const SimplicialComplex& c, FieldPrime p, Method method = Method::automatic,
                            const RegularityOptions& options = {});

/// Recomputes the certificate's homology from scratch (no cache).
bool verify_certificate(const SimplicialComplex& c, const RegularityReport& report);

}  // namespace regtool

#endif  // REGTOOL_REGULARITY_HPP
