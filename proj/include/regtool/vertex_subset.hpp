#ifndef REGTOOL_VERTEX_SUBSET_HPP
#define REGTOOL_VERTEX_SUBSET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <type_traits>
#include <vector>

#ifdef __BMI2__
#include <immintrin.h>
#endif

namespace regtool {

// Hard cap on the vertex universe; every subset is one machine word.
inline constexpr std::size_t kMaxVertices = 64;

/// A subset of a vertex universe of at most 64 elements, stored as a bitmask.
/// The universe size lives in the owning Hypergraph / SimplicialComplex.
///
/// The default ordering is the canonical one used for edges, facets and
/// witnesses throughout: by cardinality first, then by numeric bit pattern.
class VertexSubset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSubset() = default;
  constexpr explicit VertexSubset(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSubset(std::initializer_list<std::size_t> vertices) {
    for (auto v : vertices) bits_ |= std::uint64_t{1} << v;
  }

  static constexpr VertexSubset singleton(std::size_t v) {
    return VertexSubset(std::uint64_t{1} << v);
  }
  /// {0, 1, ..., n-1}
  static constexpr VertexSubset prefix(std::size_t n) {
    return VertexSubset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(VertexSubset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(VertexSubset other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(VertexSubset other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest element; undefined on the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  /// Largest element; undefined on the empty set.
  constexpr std::size_t back() const { return 63 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  constexpr VertexSubset with(std::size_t v) const { return VertexSubset(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSubset without(std::size_t v) const { return VertexSubset(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr VertexSubset operator|(VertexSubset a, VertexSubset b) { return VertexSubset(a.bits_ | b.bits_); }
  friend constexpr VertexSubset operator&(VertexSubset a, VertexSubset b) { return VertexSubset(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSubset operator-(VertexSubset a, VertexSubset b) { return VertexSubset(a.bits_ & ~b.bits_); }
  VertexSubset& operator|=(VertexSubset o) { bits_ |= o.bits_; return *this; }
  VertexSubset& operator&=(VertexSubset o) { bits_ &= o.bits_; return *this; }
  VertexSubset& operator-=(VertexSubset o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSubset, VertexSubset) = default;
  friend constexpr std::strong_ordering operator<=>(VertexSubset a, VertexSubset b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Order-preserving relabelling of `s` onto the positions of `support`
/// (the software equivalent of BMI2 pext). Elements of `s` outside `support`
/// are dropped.
constexpr VertexSubset compress(VertexSubset s, VertexSubset support) {
#ifdef __BMI2__
  if (!std::is_constant_evaluated()) return VertexSubset(_pext_u64(s.bits(), support.bits()));
#endif
  std::uint64_t out = 0;
  std::uint64_t bit = 1;
  for (auto v : support) {
    if (s.contains(v)) out |= bit;
    bit <<= 1;
  }
  return VertexSubset(out);
}

/// Inverse of compress: spreads the low bits of `s` onto the positions of `support`.
constexpr VertexSubset expand(VertexSubset s, VertexSubset support) {
#ifdef __BMI2__
  if (!std::is_constant_evaluated()) return VertexSubset(_pdep_u64(s.bits(), support.bits()));
#endif
  std::uint64_t out = 0;
  std::size_t i = 0;
  for (auto v : support) {
    if (s.contains(i)) out |= std::uint64_t{1} << v;
    ++i;
  }
  return VertexSubset(out);
}

/// Keeps the inclusion-minimal members, deduplicated, in canonical order.
std::vector<VertexSubset> minimal_members(std::vector<VertexSubset> sets);

/// Keeps the inclusion-maximal members, deduplicated, in canonical order.
std::vector<VertexSubset> maximal_members(std::vector<VertexSubset> sets);

struct VertexSubsetHash {
  std::size_t operator()(VertexSubset s) const noexcept {
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

}  // namespace regtool

#endif  // REGTOOL_VERTEX_SUBSET_HPP
