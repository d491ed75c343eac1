#ifndef REGTOOL_HOMOLOGY_HPP
#define REGTOOL_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "regtool/complex.hpp"

namespace regtool {

/// Coefficient field GF(p). Construction checks that p is a prime below 2^31.
class FieldPrime {
 public:
  explicit FieldPrime(std::uint32_t p);
  std::uint32_t value() const { return p_; }
  friend bool operator==(FieldPrime, FieldPrime) = default;

 private:
  std::uint32_t p_;
};

/// Dense matrix over GF(p), entries stored reduced into [0, p).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> entries;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}
  std::uint32_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Reduced Betti numbers dim H̃_i for i = -1 .. dim. Degrees outside the
/// stored range read as zero.
class BettiVector {
 public:
  BettiVector() = default;
  /// dims[0] is degree -1, dims[1] degree 0, and so on.
  explicit BettiVector(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

  std::size_t operator[](int degree) const {
    const auto idx = degree + 1;
    if (idx < 0 || static_cast<std::size_t>(idx) >= dims_.size()) return 0;
    return dims_[static_cast<std::size_t>(idx)];
  }
  /// Highest stored degree (dimension of the complex it came from).
  int top_degree() const { return static_cast<int>(dims_.size()) - 2; }
  /// Largest degree with nonzero homology, if any.
  std::optional<int> highest_nonzero() const;
  bool is_zero() const { return !highest_nonzero().has_value(); }
  const std::vector<std::size_t>& raw() const { return dims_; }

  friend bool operator==(const BettiVector& a, const BettiVector& b);

 private:
  std::vector<std::size_t> dims_;
};

/// Matrix of ∂_i : C_i -> C_{i-1}. Columns are the i-faces and rows the
/// (i-1)-faces, both in canonical order; C_{-1} is spanned by ∅. Degrees
/// outside -1 .. dim+1 give a 0x0 matrix. Throws on the void complex.
Matrix boundary_matrix(const SimplicialComplex& c, int degree, FieldPrime p);

/// Rank by Gaussian elimination over GF(p).
std::size_t rank_mod_p(Matrix m, FieldPrime p);

/// Reduced homology over GF(p). {∅} has H̃_{-1} = 1. Throws on the void complex.
BettiVector reduced_betti(const SimplicialComplex& c, FieldPrime p);

}  // namespace regtool

#endif  // REGTOOL_HOMOLOGY_HPP
