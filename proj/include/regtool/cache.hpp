#ifndef REGTOOL_CACHE_HPP
#define REGTOOL_CACHE_HPP

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "regtool/complex.hpp"
#include "regtool/homology.hpp"

namespace regtool {

/// Map with atomic get-or-insert, keyed on canonical complex forms plus a tag
/// (the field characteristic where results depend on it).
template <class Value>
class MemoTable {
 public:
  std::optional<Value> find(const CanonicalKey& key) const {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  /// Inserts unless present; returns the stored value either way.
  Value insert(CanonicalKey key, Value value) {
    std::lock_guard lock(mutex_);
    return map_.try_emplace(std::move(key), std::move(value)).first->second;
  }
  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return map_.size();
  }
  void clear() {
    std::lock_guard lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<CanonicalKey, Value, CanonicalKeyHash> map_;
};

/// Outcome of the vertex-decomposability search for one canonical complex.
struct VdEntry {
  bool decomposable = false;
  /// Lowest shedding vertex whose link and deletion decompose, in
  /// canonical (support-compressed) coordinates; -1 for simplices and failures.
  int shedding_vertex = -1;
};

/// Memo tables shared by the homology, regularity and decomposition engines.
/// Results depend only on the canonical form (and p), so sharing one cache
/// across many instances is safe. Complexes with more than `max_vertices`
/// vertices are computed but not stored.
class ComputeCache {
 public:
  explicit ComputeCache(std::size_t max_vertices = kMaxVertices) : max_vertices_(max_vertices) {}

  BettiVector betti(const SimplicialComplex& c, FieldPrime p);

  bool storable(const SimplicialComplex& c) const { return c.vertices().size() <= max_vertices_; }
  static CanonicalKey tagged(CanonicalKey key, std::uint64_t tag) {
    key.words.push_back(tag);
    return key;
  }

  MemoTable<BettiVector> betti_table;
  MemoTable<VdEntry> vd_table;
  MemoTable<int> vd_reg_table;
  MemoTable<bool> cm_table;

 private:
  std::size_t max_vertices_;
};

}  // namespace regtool

#endif  // REGTOOL_CACHE_HPP
