#ifndef REGTOOL_DECOMP_HPP
#define REGTOOL_DECOMP_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "regtool/cache.hpp"
#include "regtool/complex.hpp"
#include "regtool/homology.hpp"

namespace regtool {

/// Thrown when an operation needs a vertex-decomposable complex. Carries a
/// complex reached by the link/deletion recursion in which no vertex sheds.
class NotVertexDecomposable : public std::runtime_error {
 public:
  NotVertexDecomposable(const std::string& what, SimplicialComplex witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const SimplicialComplex& witness() const { return witness_; }

 private:
  SimplicialComplex witness_;
};

/// Every facet of del_Δ(v) is a facet of Δ. Throws if v is not a vertex.
bool is_shedding_vertex(const SimplicialComplex& c, std::size_t v);

struct SheddingNode {
  SimplicialComplex complex;
  /// Shedding vertex used at this node; empty at simplex leaves.
  std::optional<std::size_t> vertex;
  std::shared_ptr<const SheddingNode> link;
  std::shared_ptr<const SheddingNode> deletion;
};

struct SheddingCertificate {
  /// Decomposition tree when the complex is vertex-decomposable.
  std::shared_ptr<const SheddingNode> root;
  /// Otherwise a complex from the recursion none of whose vertices shed.
  std::optional<SimplicialComplex> failure_witness;
};

struct VdResult {
  bool decomposable = false;
  SheddingCertificate certificate;
};

/// Exact recursive decision with memoization. At every node the lowest
/// shedding vertex whose link and deletion both decompose is chosen.
VdResult is_vertex_decomposable(const SimplicialComplex& c, ComputeCache* cache = nullptr);

/// Same decision without building the certificate.
bool decomposes(const SimplicialComplex& c, ComputeCache* cache = nullptr);

/// The shedding vertex is_vertex_decomposable would pick (original
/// coordinates); nullopt for a simplex. Throws NotVertexDecomposable.
std::optional<std::size_t> chosen_shedding_vertex(const SimplicialComplex& c, ComputeCache& cache);

/// Shedding vertices along the deletion spine of the certificate, ending at a
/// simplex. Throws NotVertexDecomposable.
std::vector<std::size_t> shedding_order(const SimplicialComplex& c, ComputeCache* cache = nullptr);

/// Reisner: every link (including Δ itself) has vanishing H̃_i below its dimension.
bool is_cohen_macaulay(const SimplicialComplex& c, FieldPrime p, ComputeCache* cache = nullptr);

/// Every pure n-skeleton, 0 <= n <= dim, is Cohen–Macaulay.
bool is_sequentially_cm(const SimplicialComplex& c, FieldPrime p, ComputeCache* cache = nullptr);

}  // namespace regtool

#endif  // REGTOOL_DECOMP_HPP
