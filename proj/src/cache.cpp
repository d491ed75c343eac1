#include "regtool/cache.hpp"

namespace regtool {

BettiVector ComputeCache::betti(const SimplicialComplex& c, FieldPrime p) {
  if (!storable(c)) return reduced_betti(c, p);
  auto key = tagged(canonical_key(c), p.value());
  if (auto hit = betti_table.find(key)) return *hit;
  return betti_table.insert(std::move(key), reduced_betti(c, p));
}

}  // namespace regtool
