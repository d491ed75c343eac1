#include "regtool/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace regtool {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint32_t result = 1;
  std::uint32_t base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::size_t index_in_level(const std::vector<VertexSubset>& level, VertexSubset face) {
  // Levels hold faces of one cardinality, so canonical order is numeric order.
  auto it = std::lower_bound(level.begin(), level.end(), face);
  return static_cast<std::size_t>(it - level.begin());
}

// Sparse column over GF(p): (row, coefficient) sorted by row.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// col <- col + factor * other, both sorted.
void axpy(SparseColumn& col, const SparseColumn& other, std::uint32_t factor, std::uint32_t p,
          SparseColumn& scratch) {
  scratch.clear();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < col.size() || j < other.size()) {
    if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
      scratch.push_back(col[i++]);
    } else if (i == col.size() || other[j].first < col[i].first) {
      scratch.emplace_back(other[j].first, mul_mod(other[j].second, factor, p));
      ++j;
    } else {
      const auto v = (col[i].second + mul_mod(other[j].second, factor, p)) % p;
      if (v != 0) scratch.emplace_back(col[i].first, v);
      ++i;
      ++j;
    }
  }
  col.swap(scratch);
}

// Rank of ∂ from `upper` (faces of size k) to `lower` (faces of size k-1),
// by column reduction keyed on the lowest nonzero (largest row index).
std::size_t boundary_rank(const std::vector<VertexSubset>& upper, const std::vector<VertexSubset>& lower,
                          std::uint32_t p) {
  if (upper.empty() || lower.empty()) return 0;
  std::vector<SparseColumn> reduced;
  std::vector<std::int32_t> pivot_of(lower.size(), -1);
  SparseColumn col;
  SparseColumn scratch;
  std::size_t rank = 0;
  for (auto face : upper) {
    col.clear();
    std::uint32_t j = 0;
    for (auto v : face) {
      const auto row = static_cast<std::uint32_t>(index_in_level(lower, face.without(v)));
      col.emplace_back(row, (j % 2 == 0) ? 1U % p : p - 1);
      ++j;
    }
    std::sort(col.begin(), col.end());
    while (!col.empty()) {
      const auto low = col.back().first;
      const auto owner = pivot_of[low];
      if (owner < 0) break;
      const auto& pivot_col = reduced[static_cast<std::size_t>(owner)];
      // Cancel col's entry at `low` against the pivot column.
      const auto factor = mul_mod(p - col.back().second, inverse_mod(pivot_col.back().second, p), p);
      axpy(col, pivot_col, factor, p, scratch);
    }
    if (!col.empty()) {
      pivot_of[col.back().first] = static_cast<std::int32_t>(reduced.size());
      reduced.push_back(col);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

FieldPrime::FieldPrime(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
}

std::optional<int> BettiVector::highest_nonzero() const {
  for (std::size_t i = dims_.size(); i-- > 0;) {
    if (dims_[i] != 0) return static_cast<int>(i) - 1;
  }
  return std::nullopt;
}

bool operator==(const BettiVector& a, const BettiVector& b) {
  const auto n = std::max(a.dims_.size(), b.dims_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int deg = static_cast<int>(i) - 1;
    if (a[deg] != b[deg]) return false;
  }
  return true;
}

Matrix boundary_matrix(const SimplicialComplex& c, int degree, FieldPrime p) {
  if (c.is_void()) throw std::invalid_argument("boundary_matrix of the void complex");
  const int dim = c.dimension();
  if (degree < -1 || degree > dim + 1) return Matrix{};
  const auto levels = c.faces_by_size();
  auto level = [&](int size) -> std::vector<VertexSubset> {
    if (size < 0 || static_cast<std::size_t>(size) >= levels.size()) return {};
    return levels[static_cast<std::size_t>(size)];
  };
  const auto cols = level(degree + 1);
  const auto rows = level(degree);
  Matrix m(rows.size(), cols.size());
  for (std::size_t col = 0; col < cols.size(); ++col) {
    std::uint32_t j = 0;
    for (auto v : cols[col]) {
      const auto row = index_in_level(rows, cols[col].without(v));
      m.at(row, col) = (j % 2 == 0) ? 1U % p.value() : p.value() - 1;
      ++j;
    }
  }
  return m;
}

std::size_t rank_mod_p(Matrix m, FieldPrime field) {
  const auto p = field.value();
  for (auto& x : m.entries) x %= p;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    }
    const auto inv = inverse_mod(m.at(rank, col), p);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const auto x = m.at(r, col);
      if (x == 0) continue;
      const auto factor = mul_mod(x, inv, p);
      for (std::size_t c = col; c < m.cols; ++c) {
        m.at(r, c) = (m.at(r, c) + p - mul_mod(factor, m.at(rank, c), p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

BettiVector reduced_betti(const SimplicialComplex& c, FieldPrime field) {
  if (c.is_void()) throw std::invalid_argument("reduced homology of the void complex is undefined");
  const auto levels = c.faces_by_size();
  const int dim = c.dimension();
  // rank[k] = rank of the boundary from faces of size k to size k-1.
  std::vector<std::size_t> rank(levels.size() + 1, 0);
  for (std::size_t k = 1; k < levels.size(); ++k) rank[k] = boundary_rank(levels[k], levels[k - 1], field.value());
  std::vector<std::size_t> dims(static_cast<std::size_t>(dim + 2), 0);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    // degree k-1
    dims[k] = levels[k].size() - rank[k] - rank[k + 1];
  }
  return BettiVector(std::move(dims));
}

}  // namespace regtool
