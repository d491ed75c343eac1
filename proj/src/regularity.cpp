#include "regtool/regularity.hpp"

#include <stdexcept>
#include <string>

#include "regtool/decomp.hpp"

namespace regtool {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::subsets: return "subsets";
    case Method::links: return "links";
    case Method::vd: return "vd";
  }
  return "auto";
}

Method parse_method(std::string_view name) {
  if (name == "auto") return Method::automatic;
  if (name == "subsets") return Method::subsets;
  if (name == "links") return Method::links;
  if (name == "vd") return Method::vd;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

namespace {

// Calls fn on every r-subset of `support`, in increasing numeric order.
// Returns false if fn asked to stop.
template <class Fn>
bool for_each_subset_of_size(VertexSubset support, std::size_t r, Fn&& fn) {
  const std::size_t k = support.size();
  if (r > k) return true;
  if (r == 0) return fn(VertexSubset{});
  using Wide = unsigned __int128;
  const Wide limit = Wide{1} << k;
  Wide comb = (Wide{1} << r) - 1;
  while (comb < limit) {
    if (!fn(expand(VertexSubset(static_cast<std::uint64_t>(comb)), support))) return false;
    const Wide low = comb & (~comb + 1);
    const Wide ripple = comb + low;
    comb = (((ripple ^ comb) >> 2) / low) | ripple;
  }
  return true;
}

BettiVector betti_of(const SimplicialComplex& c, FieldPrime p, ComputeCache* cache) {
  return cache ? cache->betti(c, p) : reduced_betti(c, p);
}

void require_certified(const SimplicialComplex& c, const RegularityReport& report, const RegularityOptions& options) {
  if (options.self_check && !verify_certificate(c, report)) {
    throw std::logic_error("regularity certificate failed re-verification");
  }
}

}  // namespace

RegularityReport reg_by_subcomplexes(const SimplicialComplex& c, FieldPrime p, const RegularityOptions& options) {
  if (c.is_void()) throw std::invalid_argument("regularity of the void complex is undefined");
  RegularityReport report;
  report.method = Method::subsets;
  report.field_char = p.value();
  // Δ[∅] = {∅} has H̃_{-1} ≠ 0, so d = 0 is always witnessed.
  report.certificate = {Certificate::Kind::induced_subcomplex, VertexSubset{}, 0};
  const auto support = c.vertices();
  const int ceiling = c.dimension() + 1;
  auto stop = [&] {
    if (options.max_degree && report.value >= *options.max_degree) {
      report.capped = report.value < ceiling;
      return true;
    }
    return report.value >= ceiling;
  };
  for (std::size_t r = 1; r <= support.size() && !stop(); ++r) {
    // d ≤ dim Δ[S] + 1 ≤ |S|, so small subsets cannot beat the current best.
    if (static_cast<int>(r) <= report.value) continue;
    for_each_subset_of_size(support, r, [&](VertexSubset s) {
      const auto top = betti_of(induced_subcomplex(c, s), p, options.cache).highest_nonzero();
      if (top && *top + 1 > report.value) {
        report.value = *top + 1;
        report.certificate = {Certificate::Kind::induced_subcomplex, s, report.value};
        if (stop()) return false;
      }
      return true;
    });
  }
  require_certified(c, report, options);
  return report;
}

RegularityReport reg_by_links(const SimplicialComplex& c, FieldPrime p, const RegularityOptions& options) {
  if (c.is_void()) throw std::invalid_argument("regularity of the void complex is undefined");
  RegularityReport report;
  report.method = Method::links;
  report.field_char = p.value();
  report.value = -1;
  const int dim = c.dimension();
  for (auto sigma : c.faces()) {
    // dim link σ ≤ dim Δ − |σ|
    const int bound = dim - static_cast<int>(sigma.size()) + 1;
    if (bound <= report.value) continue;
    const auto top = betti_of(link(c, sigma), p, options.cache).highest_nonzero();
    if (top && *top + 1 > report.value) {
      report.value = *top + 1;
      report.certificate = {Certificate::Kind::link, sigma, report.value};
      if (options.max_degree && report.value >= *options.max_degree) {
        report.capped = report.value < dim + 1;
        break;
      }
    }
  }
  require_certified(c, report, options);
  return report;
}

namespace {

int vd_value(const SimplicialComplex& c, FieldPrime p, ComputeCache& cache) {
  if (is_simplex(c)) return 0;
  const bool store = cache.storable(c);
  CanonicalKey key;
  if (store) {
    key = ComputeCache::tagged(canonical_key(c), p.value());
    if (auto hit = cache.vd_reg_table.find(key)) return *hit;
  }
  const auto v = *chosen_shedding_vertex(c, cache);
  const int value = std::max(vd_value(link(c, VertexSubset::singleton(v)), p, cache) + 1,
                             vd_value(deletion(c, v), p, cache));
  if (store) cache.vd_reg_table.insert(std::move(key), value);
  return value;
}

// Face-form witness following the recursion: a link-branch witness σ of
// link_Δ v lifts to (σ, d+1); a deletion-branch witness carries over as is.
Certificate vd_witness(const SimplicialComplex& c, FieldPrime p, ComputeCache& cache, std::optional<std::size_t> forced) {
  if (is_simplex(c)) return {Certificate::Kind::link, c.facets().front(), 0};
  const auto v = forced ? *forced : *chosen_shedding_vertex(c, cache);
  const auto l = link(c, VertexSubset::singleton(v));
  const auto d = deletion(c, v);
  const int via_link = vd_value(l, p, cache) + 1;
  const int via_deletion = vd_value(d, p, cache);
  if (via_link >= via_deletion) {
    auto w = vd_witness(l, p, cache, std::nullopt);
    w.degree += 1;
    return w;
  }
  return vd_witness(d, p, cache, std::nullopt);
}

}  // namespace

RegularityReport reg_vd_recursive(const SimplicialComplex& c, FieldPrime p,
                                  const std::optional<std::vector<std::size_t>>& order,
                                  const RegularityOptions& options) {
  if (c.is_void()) throw std::invalid_argument("regularity of the void complex is undefined");
  ComputeCache local;
  auto& cache = options.cache ? *options.cache : local;
  RegularityReport report;
  report.method = Method::vd;
  report.field_char = p.value();

  if (!order) {
    report.value = vd_value(c, p, cache);
    report.certificate = vd_witness(c, p, cache, std::nullopt);
  } else {
    // Walk the supplied deletion spine; links use the automatic choice.
    auto current = c;
    std::vector<SimplicialComplex> spine;
    for (auto v : *order) {
      auto name = v < c.universe_size() ? c.label(v) : std::to_string(v);
      if (!current.vertices().contains(v) || !is_shedding_vertex(current, v)) {
        throw std::invalid_argument("shedding order: vertex '" + name + "' does not shed");
      }
      if (!decomposes(link(current, VertexSubset::singleton(v)), &cache) ||
          !decomposes(deletion(current, v), &cache)) {
        throw std::invalid_argument("shedding order: vertex '" + name +
                                    "' sheds but its link or deletion is not vertex-decomposable");
      }
      spine.push_back(current);
      current = deletion(current, v);
    }
    if (!is_simplex(current)) throw std::invalid_argument("shedding order ends before reaching a simplex");

    // Values bottom-up along the spine, then the witness top-down.
    std::vector<int> below(spine.size() + 1, 0);
    for (std::size_t i = spine.size(); i-- > 0;) {
      const auto v = (*order)[i];
      below[i] = std::max(vd_value(link(spine[i], VertexSubset::singleton(v)), p, cache) + 1, below[i + 1]);
    }
    report.value = below[0];
    report.certificate = {Certificate::Kind::link, current.facets().front(), 0};
    for (std::size_t i = 0; i < spine.size(); ++i) {
      const auto v = (*order)[i];
      const auto l = link(spine[i], VertexSubset::singleton(v));
      if (vd_value(l, p, cache) + 1 >= below[i + 1]) {
        report.certificate = vd_witness(l, p, cache, std::nullopt);
        report.certificate.degree += 1;
        break;
      }
    }
  }
  require_certified(c, report, options);
  return report;
}

RegularityReport regularity(const SimplicialComplex& c, FieldPrime p, Method method, const RegularityOptions& options) {
  switch (method) {
    case Method::subsets: return reg_by_subcomplexes(c, p, options);
    case Method::vd: return reg_vd_recursive(c, p, std::nullopt, options);
    case Method::links:
    case Method::automatic: {
      auto report = reg_by_links(c, p, options);
      report.method = method;
      return report;
    }
  }
  throw std::invalid_argument("unknown method");
}

RegularityReport reg_edge_ideal(const Hypergraph& h, FieldPrime p, Method method, const RegularityOptions& options) {
  return regularity(independence_complex(h), p, method, options);
}

bool verify_certificate(const SimplicialComplex& c, const RegularityReport& report) {
  const auto& cert = report.certificate;
  if (cert.degree != report.value) return false;
  if (cert.kind == Certificate::Kind::induced_subcomplex) {
    if (!cert.set.is_subset_of(VertexSubset::prefix(c.universe_size()))) return false;
    return reduced_betti(induced_subcomplex(c, cert.set), FieldPrime(report.field_char))[cert.degree - 1] != 0;
  }
  if (!c.contains_face(cert.set)) return false;
  return reduced_betti(link(c, cert.set), FieldPrime(report.field_char))[cert.degree - 1] != 0;
}

}  // namespace regtool
