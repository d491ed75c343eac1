#ifndef REGTOOL_TESTS_ORACLE_HPP
#define REGTOOL_TESTS_ORACLE_HPP

// Brute-force reference implementations. Everything here works on plain
// bitmasks and face lists and shares no code with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;
/// A complex as the sorted list of all its faces. Empty list = void.
using Faces = std::vector<Mask>;

inline int bits(Mask m) { return std::popcount(m); }

inline Faces independent_sets(int n, const std::vector<Mask>& edges) {
  Faces out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool ok = true;
    for (auto e : edges) {
      if ((e & s) == e) ok = false;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

inline Faces closure(const std::vector<Mask>& generators) {
  std::vector<Mask> out;
  for (auto g : generators) {
    Mask sub = g;
    while (true) {
      out.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & g;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool contains(const Faces& f, Mask s) { return std::binary_search(f.begin(), f.end(), s); }

inline Faces restrict_to(const Faces& f, Mask s) {
  Faces out;
  for (auto x : f) {
    if ((x & ~s) == 0) out.push_back(x);
  }
  return out;
}

inline Faces link_of(const Faces& f, Mask sigma) {
  Faces out;
  for (auto x : f) {
    if ((x & sigma) == 0 && contains(f, x | sigma)) out.push_back(x);
  }
  return out;
}

inline Faces delete_vertex(const Faces& f, int v) { return restrict_to(f, ~(Mask{1} << v)); }

inline std::vector<Mask> maximal_faces(const Faces& f) {
  std::vector<Mask> out;
  for (auto x : f) {
    bool maximal = true;
    for (auto y : f) {
      if (y != x && (x & y) == x) maximal = false;
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

inline int dimension(const Faces& f) {
  int d = -1;
  for (auto x : f) d = std::max(d, bits(x) - 1);
  return d;
}

inline long long power_mod(long long a, long long e, long long p) {
  long long r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Row echelon rank with inverses by the extended Euclidean algorithm.
inline int rank_mod(std::vector<std::vector<long long>> m, long long p) {
  auto inverse = [p](long long a) {
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr) {
      const long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return ((t % p) + p) % p;
  };
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (((m[r][c] % p) + p) % p) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    const long long inv = inverse(((m[rank][c] % p) + p) % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const long long factor = ((m[r][c] % p) + p) % p * inv % p;
      if (!factor) continue;
      for (int k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// dims[k] is the reduced Betti number in degree k−1. Sized dim+2.
inline std::vector<long long> betti(const Faces& f, long long p) {
  const int top = dimension(f);
  std::vector<std::vector<Mask>> by_size(top + 2);
  for (auto x : f) by_size[bits(x)].push_back(x);
  // rank of the boundary from size k to size k-1, for k = 1..top+1.
  std::vector<int> rank(top + 3, 0);
  for (int k = 1; k <= top + 1; ++k) {
    const auto& upper = by_size[k];
    const auto& lower = by_size[k - 1];
    if (upper.empty() || lower.empty()) continue;
    std::vector<std::vector<long long>> m(lower.size(), std::vector<long long>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      int position = 0;
      for (int v = 0; v < 64; ++v) {
        if (!((upper[j] >> v) & 1U)) continue;
        const Mask face = upper[j] & ~(Mask{1} << v);
        const auto row = std::lower_bound(lower.begin(), lower.end(), face) - lower.begin();
        m[row][j] = (position % 2) ? p - 1 : 1;
        ++position;
      }
    }
    rank[k] = rank_mod(m, p);
  }
  std::vector<long long> dims(top + 2, 0);
  for (int k = 0; k <= top + 1; ++k) {
    dims[k] = static_cast<long long>(by_size[k].size()) - rank[k] - rank[k + 1];
  }
  return dims;
}

/// Highest d with some nonzero Betti number in degree d−1, or nullopt.
inline std::optional<int> top_homology(const Faces& f, long long p) {
  const auto dims = betti(f, p);
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    if (dims[k]) return k;
  }
  return std::nullopt;
}

/// reg = max d over all S ⊆ [n] with H̃_{d−1}(Δ[S]) ≠ 0.
inline int reg(const Faces& f, int n, long long p) {
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (auto d = top_homology(restrict_to(f, s), p)) best = std::max(best, *d);
  }
  return best;
}

inline bool is_simplex(const Faces& f) { return maximal_faces(f).size() == 1; }

inline bool sheds(const Faces& f, int v) {
  const auto facets = maximal_faces(f);
  for (auto g : maximal_faces(delete_vertex(f, v))) {
    if (std::find(facets.begin(), facets.end(), g) == facets.end()) return false;
  }
  return true;
}

inline Mask vertex_set(const Faces& f) {
  Mask m = 0;
  for (auto x : f) m |= x;
  return m;
}

inline bool vertex_decomposable(const Faces& f) {
  if (is_simplex(f)) return true;
  const Mask vs = vertex_set(f);
  for (int v = 0; v < 64; ++v) {
    if (!((vs >> v) & 1U)) continue;
    if (sheds(f, v) && vertex_decomposable(link_of(f, Mask{1} << v)) && vertex_decomposable(delete_vertex(f, v))) {
      return true;
    }
  }
  return false;
}

inline bool cohen_macaulay(const Faces& f, long long p) {
  for (auto sigma : f) {
    const auto l = link_of(f, sigma);
    const auto dims = betti(l, p);
    const int top = dimension(l);
    for (int i = -1; i < top; ++i) {
      if (dims[i + 1]) return false;
    }
  }
  return true;
}

inline bool sequentially_cm(const Faces& f, long long p) {
  for (int n = 0; n <= dimension(f); ++n) {
    std::vector<Mask> gens;
    for (auto x : f) {
      if (bits(x) == n + 1) gens.push_back(x);
    }
    if (!cohen_macaulay(closure(gens), p)) return false;
  }
  return true;
}

// Edge-family statistics by scanning every subset of the edge list.

inline void for_each_family(std::size_t m, const std::function<void(Mask)>& fn) {
  for (Mask c = 0; c < (Mask{1} << m); ++c) fn(c);
}

inline Mask union_of(const std::vector<Mask>& edges, Mask family) {
  Mask u = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((family >> i) & 1U) u |= edges[i];
  }
  return u;
}

inline bool is_matching(const std::vector<Mask>& edges, Mask family) {
  int total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((family >> i) & 1U) total += bits(edges[i]);
  }
  return total == bits(union_of(edges, family));
}

inline int nu(const std::vector<Mask>& edges) {
  int best = 0;
  for_each_family(edges.size(), [&](Mask c) {
    if (is_matching(edges, c)) best = std::max(best, bits(c));
  });
  return best;
}

inline int nu_min(const std::vector<Mask>& edges) {
  int best = static_cast<int>(edges.size());
  for_each_family(edges.size(), [&](Mask c) {
    if (!is_matching(edges, c)) return;
    const Mask u = union_of(edges, c);
    for (auto e : edges) {
      if (!(e & u)) return;
    }
    best = std::min(best, bits(c));
  });
  return best;
}

inline int nu_ind(const std::vector<Mask>& edges) {
  int best = 0;
  for_each_family(edges.size(), [&](Mask c) {
    if (!is_matching(edges, c)) return;
    const Mask u = union_of(edges, c);
    int inside = 0;
    for (auto e : edges) inside += (e & ~u) == 0;
    if (inside == bits(c)) best = std::max(best, bits(c));
  });
  return best;
}

inline int min_collage(const std::vector<Mask>& edges) {
  int best = static_cast<int>(edges.size());
  for_each_family(edges.size(), [&](Mask c) {
    for (auto e : edges) {
      bool ok = false;
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (((c >> j) & 1U) && bits(e & ~edges[j]) <= 1) ok = true;
      }
      if (!ok) return;
    }
    best = std::min(best, bits(c));
  });
  return best;
}

/// ζ for a graph on [n] given by 2-element edge masks: every sequence of
/// centers, each of degree > 1 in what the earlier closed neighbourhoods
/// leave, run until no such vertex remains.
inline int zeta(int n, const std::vector<Mask>& edges) {
  std::vector<Mask> nbr(n, 0);
  for (auto e : edges) {
    const int a = std::countr_zero(e);
    const int b = 63 - std::countl_zero(e);
    nbr[a] |= Mask{1} << b;
    nbr[b] |= Mask{1} << a;
  }
  std::function<int(Mask, int)> walk = [&](Mask alive, int stars) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (((alive >> v) & 1U) && bits(nbr[v] & alive) > 1) {
        best = std::max(best, walk(alive & ~(nbr[v] | (Mask{1} << v)), stars + 1));
      }
    }
    if (best >= 0) return best;
    int rest = 0;
    for (auto e : edges) rest += (e & ~alive) == 0;
    return stars + rest;
  };
  return walk(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1, 0);
}

inline int weak_packing(const Faces& f) {
  int best = 0;
  auto simplex_link = [&](Mask s) { return is_simplex(link_of(f, s)); };
  for (auto sigma : f) {
    if (!simplex_link(sigma)) continue;
    bool minimal = true;
    for (int v = 0; v < 64; ++v) {
      if (((sigma >> v) & 1U) && simplex_link(sigma & ~(Mask{1} << v))) minimal = false;
    }
    if (minimal) best = std::max(best, bits(sigma));
  }
  return best;
}

}  // namespace oracle

#endif  // REGTOOL_TESTS_ORACLE_HPP
