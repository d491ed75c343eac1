#include "regtool/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "regtool/decomp.hpp"
#include "regtool/invariants.hpp"
#include "regtool/random.hpp"

namespace regtool {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skipped: return "skipped";
  }
  return "skipped";
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::eq: return "==";
    case Relation::ne: return "!=";
    case Relation::member: return "in";
  }
  return "<=";
}

PropertyReport assert_relation(std::string property, std::string instance, FieldPrime p, Relation relation,
                               long long left, std::vector<long long> right, std::vector<std::string> certificates) {
  if (right.empty()) throw std::invalid_argument("relation needs a right-hand side");
  bool holds = false;
  switch (relation) {
    case Relation::le: holds = left <= right.front(); break;
    case Relation::eq: holds = left == right.front(); break;
    case Relation::ne: holds = left != right.front(); break;
    case Relation::member: holds = std::find(right.begin(), right.end(), left) != right.end(); break;
  }
  return PropertyReport{std::move(property), std::move(instance), p.value(),  relation, left,
                        std::move(right),    holds ? Outcome::pass : Outcome::fail, std::move(certificates)};
}

PropertyReport skipped(std::string property, std::string instance, FieldPrime p, std::string reason) {
  PropertyReport r;
  r.property = std::move(property);
  r.instance = std::move(instance);
  r.field_char = p.value();
  r.outcome = Outcome::skipped;
  r.certificates.push_back(std::move(reason));
  return r;
}

RegularityReport CheckContext::reg(const SimplicialComplex& c, FieldPrime p) const {
  auto report = regularity(c, p, method, RegularityOptions{cache, std::nullopt, self_check});
  if (on_report) on_report(c, report);
  return report;
}

RegularityReport CheckContext::reg(const Hypergraph& h, FieldPrime p) const {
  return reg(independence_complex(h), p);
}

namespace {

std::string set_text(VertexSubset s, const Labels& labels, char open, char close) {
  std::string out(1, open);
  bool first = true;
  for (auto v : s) {
    if (!first) out += ',';
    out += (*labels)[v];
    first = false;
  }
  out += close;
  return out;
}

std::string family_text(const Hypergraph& h, const std::vector<std::size_t>& members) {
  std::string out;
  for (auto i : members) {
    if (!out.empty()) out += ' ';
    out += set_text(h.edges()[i], h.labels(), '{', '}');
  }
  return out;
}

std::string or_describe(const std::string& instance, const std::string& fallback) {
  return instance.empty() ? fallback : instance;
}

std::string reg_text(const RegularityReport& r, const Labels& labels) {
  return "reg " + std::to_string(r.value) + " by " + describe(r.certificate, labels);
}

long long part_weight(const Hypergraph& h, const std::vector<std::size_t>& members) {
  long long w = 0;
  for (auto i : members) w += static_cast<long long>(h.edges()[i].size()) - 1;
  return w;
}

}  // namespace

std::string describe(const Hypergraph& h) {
  if (h.edge_count() == 0) return "edgeless on " + std::to_string(h.vertex_count()) + " vertices";
  std::string out;
  for (auto e : h.edges()) {
    if (!out.empty()) out += ' ';
    out += set_text(e, h.labels(), '{', '}');
  }
  return out;
}

std::string describe(const SimplicialComplex& c) {
  if (c.is_void()) return "void";
  std::string out;
  for (auto f : c.facets()) {
    if (!out.empty()) out += ' ';
    out += set_text(f, c.labels(), '[', ']');
  }
  return out;
}

std::string describe(const Certificate& cert, const Labels& labels) {
  const bool induced = cert.kind == Certificate::Kind::induced_subcomplex;
  return std::string(induced ? "induced " : "link ") + set_text(cert.set, labels, '{', '}') + " H~_" +
         std::to_string(cert.degree - 1);
}

std::vector<PropertyReport> check_collage_bounds(const Hypergraph& h, FieldPrime p, const CheckContext& ctx,
                                                 const std::string& instance) {
  if (h.edge_count() == 0) throw std::invalid_argument("collage bounds need at least one edge");
  const auto inst = or_describe(instance, describe(h));
  const auto r = ctx.reg(h, p);
  const auto induced = induced_matching_number(h);
  const auto collage = min_two_collage(h);
  const auto ind_text = "induced matching " + family_text(h, induced.witness.members);
  const auto col_text = "2-collage " + family_text(h, collage.witness.members);
  const auto reg_cert = reg_text(r, h.labels());

  std::vector<PropertyReport> out;
  out.push_back(assert_relation("induced_matching_lower", inst, p, Relation::le,
                                part_weight(h, induced.witness.members), {r.value}, {ind_text, reg_cert}));
  out.push_back(assert_relation("collage_upper", inst, p, Relation::le, r.value,
                                {static_cast<long long>(collage_weight(h, collage.witness))}, {reg_cert, col_text}));
  if (auto d = uniformity(h)) {
    const auto k = static_cast<long long>(*d) - 1;
    out.push_back(assert_relation("uniform_lower", inst, p, Relation::le,
                                  k * static_cast<long long>(induced.value), {r.value}, {ind_text, reg_cert}));
    out.push_back(assert_relation("uniform_upper", inst, p, Relation::le, r.value,
                                  {k * static_cast<long long>(collage.value)}, {reg_cert, col_text}));
  }
  if (is_graph(h)) {
    const auto minimax = minimax_matching_number(h);
    out.push_back(assert_relation("graph_collage_minimax", inst, p, Relation::eq,
                                  static_cast<long long>(collage.value), {static_cast<long long>(minimax.value)},
                                  {col_text, "maximal matching " + family_text(h, minimax.witness.members)}));
  }
  return out;
}

std::vector<PropertyReport> check_km_subadditivity(const Hypergraph& h,
                                                   const std::vector<std::vector<std::size_t>>& partition,
                                                   FieldPrime p, const CheckContext& ctx,
                                                   const std::string& instance) {
  std::vector<bool> covered(h.edge_count(), false);
  for (const auto& part : partition) {
    for (auto i : part) {
      if (i >= h.edge_count()) throw std::invalid_argument("partition names an edge outside the hypergraph");
      covered[i] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw std::invalid_argument("partition does not cover every edge");
  }
  const auto inst = or_describe(instance, describe(h));
  const auto r = ctx.reg(h, p);
  long long total = 0;
  std::vector<std::string> certs{reg_text(r, h.labels())};
  for (const auto& part : partition) {
    std::vector<VertexSubset> edges;
    for (auto i : part) edges.push_back(h.edges()[i]);
    const Hypergraph piece(h.labels(), edges);
    const auto rp = ctx.reg(piece, p);
    total += rp.value;
    certs.push_back("part " + describe(piece) + ": " + reg_text(rp, h.labels()));
  }
  return {assert_relation("km_subadditivity", inst, p, Relation::le, r.value, {total}, std::move(certs))};
}

std::vector<PropertyReport> check_edge_split(const Hypergraph& h, VertexSubset e, FieldPrime p,
                                             const CheckContext& ctx, const std::string& instance) {
  if (h.edge_count() < 2) throw std::invalid_argument("edge split needs at least two edges");
  if (!h.has_edge(e)) throw std::invalid_argument("edge split: not an edge of the hypergraph");
  const auto inst = or_describe(instance, describe(h)) + " E=" + set_text(e, h.labels(), '{', '}');
  const auto whole = ctx.reg(h, p);
  const auto without = ctx.reg(delete_edge(h, e), p);
  const auto fused = ctx.reg(edge_fusion(h, e), p);
  // reg(I) = reg(R/I) + 1 on each side.
  const long long bound = std::max<long long>(without.value + 1, fused.value);
  return {assert_relation("edge_split", inst, p, Relation::le, whole.value + 1, {bound},
                          {reg_text(whole, h.labels()), "without E: " + reg_text(without, h.labels()),
                           "fused: " + reg_text(fused, h.labels())})};
}

std::vector<PropertyReport> check_dichotomy(const SimplicialComplex& c, FieldPrime p, const CheckContext& ctx,
                                            const std::string& instance) {
  if (c.is_void()) throw std::invalid_argument("dichotomy check of the void complex");
  const auto inst = or_describe(instance, describe(c));
  const auto r = ctx.reg(c, p);
  const auto reg_cert = reg_text(r, c.labels());
  std::vector<PropertyReport> out;

  const auto vertices = c.vertices();
  std::vector<long long> link_reg(c.universe_size(), 0);
  for (auto v : vertices) {
    const auto lv = ctx.reg(link(c, VertexSubset::singleton(v)), p);
    const auto dv = ctx.reg(deletion(c, v), p);
    link_reg[v] = lv.value;
    out.push_back(assert_relation("dichotomy", inst + " v=" + c.label(v), p, Relation::member, r.value,
                                  {lv.value + 1LL, dv.value},
                                  {reg_cert, "link: " + reg_text(lv, c.labels()), "deletion: " + reg_text(dv, c.labels())}));
  }

  if (vertices.empty()) {
    out.push_back(skipped("link_sandwich_lower", inst, p, "no vertices"));
    out.push_back(skipped("link_sandwich_upper", inst, p, "no vertices"));
  } else {
    long long top = -1;
    std::size_t arg = vertices.front();
    for (auto v : vertices) {
      if (link_reg[v] > top) {
        top = link_reg[v];
        arg = v;
      }
    }
    const auto cert = "max link reg at " + c.label(arg);
    out.push_back(assert_relation("link_sandwich_lower", inst, p, Relation::le, top, {r.value}, {cert, reg_cert}));
    out.push_back(assert_relation("link_sandwich_upper", inst, p, Relation::le, r.value, {top + 1}, {reg_cert, cert}));
  }

  // Best vertex among `allowed` for reg Δ ≤ reg(link v) + 1.
  auto best_link = [&](const std::string& property, VertexSubset allowed, const std::string& none) {
    if (allowed.empty()) return skipped(property, inst, p, none);
    std::size_t arg = allowed.front();
    for (auto v : allowed) {
      if (link_reg[v] > link_reg[arg]) arg = v;
    }
    return assert_relation(property, inst, p, Relation::le, r.value, {link_reg[arg] + 1},
                           {reg_cert, "link of " + c.label(arg)});
  };

  VertexSubset nonzero_degree;
  for (auto v : vertices) {
    const bool in_every_facet =
        std::all_of(c.facets().begin(), c.facets().end(), [v](VertexSubset f) { return f.contains(v); });
    if (!in_every_facet) nonzero_degree = nonzero_degree.with(v);
  }
  out.push_back(best_link("nonzero_degree_link", nonzero_degree, "every vertex is a cone point"));

  const auto g = minimal_nonfaces(c);
  if (g.edge_count() == 0 || !is_graph(g)) {
    out.push_back(skipped("graph_degree_link", inst, p, "not the independence complex of a graph with edges"));
  } else {
    const auto degree = vertex_degrees(g);
    const bool isolated_edge = std::any_of(g.edges().begin(), g.edges().end(),
                                           [&](VertexSubset e) { return degree[e.front()] == 1 && degree[e.back()] == 1; });
    if (isolated_edge) {
      out.push_back(skipped("graph_degree_link", inst, p, "graph has an isolated edge"));
    } else {
      VertexSubset high;
      for (auto v : vertices) {
        if (degree[v] > 1) high = high.with(v);
      }
      out.push_back(best_link("graph_degree_link", high, "no vertex of degree > 1"));
    }
  }

  out.push_back(assert_relation("weak_packing_bound", inst, p, Relation::le, r.value,
                                {static_cast<long long>(weak_packing_statistic(c))}, {reg_cert}));
  return out;
}

std::vector<PropertyReport> check_vd_formula(const SimplicialComplex& c, FieldPrime p, const CheckContext& ctx,
                                             const std::string& instance) {
  if (c.is_void()) throw std::invalid_argument("vertex-decomposable formula check of the void complex");
  const auto inst = or_describe(instance, describe(c));
  const auto r = ctx.reg(c, p);
  const auto reg_cert = reg_text(r, c.labels());
  std::vector<PropertyReport> out;

  auto betti = [&](const SimplicialComplex& x) { return ctx.cache ? ctx.cache->betti(x, p) : reduced_betti(x, p); };
  const auto betti_c = betti(c);

  for (auto v : c.vertices()) {
    const auto at = inst + " v=" + c.label(v);
    if (!is_shedding_vertex(c, v)) {
      out.push_back(skipped("vd_equality", at, p, "vertex does not shed"));
      continue;
    }
    const auto del = deletion(c, v);
    if (!is_sequentially_cm(del, p, ctx.cache)) {
      out.push_back(skipped("vd_equality", at, p, "deletion is not sequentially Cohen-Macaulay"));
      continue;
    }
    const auto lk = link(c, VertexSubset::singleton(v));
    const auto rl = ctx.reg(lk, p);
    const auto rd = ctx.reg(del, p);
    out.push_back(assert_relation("vd_equality", at, p, Relation::eq, r.value,
                                  {std::max<long long>(rd.value, rl.value + 1LL)},
                                  {reg_cert, "link: " + reg_text(rl, c.labels()), "deletion: " + reg_text(rd, c.labels())}));
    const auto betti_l = betti(lk);
    for (int n = -1; n <= betti_l.top_degree(); ++n) {
      if (betti_l[n] == 0) continue;
      out.push_back(assert_relation("homology_lift", at + " n=" + std::to_string(n), p, Relation::ne,
                                    static_cast<long long>(betti_c[n + 1]), {0},
                                    {"link dims_" + std::to_string(n) + " = " + std::to_string(betti_l[n])}));
    }
  }

  const auto vd = is_vertex_decomposable(c, ctx.cache);
  if (!vd.decomposable) {
    out.push_back(skipped("betti_splitting", inst, p, "not vertex-decomposable"));
    out.push_back(skipped("vd_recursion", inst, p, "not vertex-decomposable"));
    return out;
  }

  std::set<const SheddingNode*> seen;
  std::vector<const SheddingNode*> stack{vd.certificate.root.get()};
  while (!stack.empty()) {
    const auto* node = stack.back();
    stack.pop_back();
    if (!node->vertex || !seen.insert(node).second) continue;
    const auto& gamma = node->complex;
    const auto bg = betti(gamma);
    const auto bd = betti(node->deletion->complex);
    const auto bl = betti(node->link->complex);
    const auto at = inst + " step " + describe(gamma) + " v=" + gamma.label(*node->vertex);
    const int top = std::max({bg.top_degree(), bd.top_degree(), bl.top_degree() + 1});
    for (int n = -2; n < top; ++n) {
      const auto lhs = bg[n + 1];
      const auto rhs = bd[n + 1] + bl[n];
      if (lhs == 0 && rhs == 0) continue;
      out.push_back(assert_relation("betti_splitting", at + " n=" + std::to_string(n), p, Relation::eq,
                                    static_cast<long long>(lhs), {static_cast<long long>(rhs)}));
    }
    stack.push_back(node->link.get());
    stack.push_back(node->deletion.get());
  }

  const RegularityOptions options{ctx.cache, std::nullopt, ctx.self_check};
  const auto by_vd = reg_vd_recursive(c, p, std::nullopt, options);
  const auto by_subsets = reg_by_subcomplexes(c, p, options);
  if (ctx.on_report) {
    ctx.on_report(c, by_vd);
    ctx.on_report(c, by_subsets);
  }
  out.push_back(assert_relation("vd_recursion", inst, p, Relation::eq, by_vd.value, {by_subsets.value},
                                {"vd: " + reg_text(by_vd, c.labels()), "subsets: " + reg_text(by_subsets, c.labels())}));
  return out;
}

std::vector<PropertyReport> check_zeta_bound(const Hypergraph& g, FieldPrime p, const CheckContext& ctx,
                                             const std::string& instance) {
  if (!is_graph(g)) throw std::invalid_argument("zeta bound is defined for graphs only");
  const auto inst = or_describe(instance, describe(g));
  const auto r = ctx.reg(g, p);
  const auto zeta = zeta_star_packing(g);
  const auto nu = matching_number(g);
  const auto packing = "star centers " + set_text(zeta.packing.centers, g.labels(), '{', '}') + " remainder " +
                       std::to_string(zeta.packing.remainder_edges);
  const auto z = static_cast<long long>(zeta.value);
  return {assert_relation("zeta_upper", inst, p, Relation::le, r.value, {z}, {reg_text(r, g.labels()), packing}),
          assert_relation("zeta_matching", inst, p, Relation::le, z, {static_cast<long long>(nu.value)},
                          {packing, "matching " + family_text(g, nu.witness.members)})};
}

std::vector<PropertyReport> check_method_agreement(const SimplicialComplex& c, FieldPrime p, const CheckContext& ctx,
                                                   const std::string& instance) {
  if (c.is_void()) throw std::invalid_argument("method agreement on the void complex");
  const RegularityOptions options{ctx.cache, std::nullopt, ctx.self_check};
  const auto by_subsets = reg_by_subcomplexes(c, p, options);
  const auto by_links = reg_by_links(c, p, options);
  if (ctx.on_report) {
    ctx.on_report(c, by_subsets);
    ctx.on_report(c, by_links);
  }
  return {assert_relation("method_agreement", or_describe(instance, describe(c)), p, Relation::eq, by_subsets.value,
                          {by_links.value},
                          {"subsets: " + reg_text(by_subsets, c.labels()), "links: " + reg_text(by_links, c.labels())})};
}

void for_each_graph(std::size_t n, const std::function<void(const Hypergraph&)>& fn) {
  if (n > 8) throw std::invalid_argument("graph enumeration is limited to 8 vertices");
  const auto labels = numbered_labels(n);
  std::vector<VertexSubset> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.push_back(VertexSubset{a, b});
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  std::vector<VertexSubset> edges;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    }
    fn(Hypergraph(labels, edges));
  }
}

namespace {

// Face masks of every complex (void included) on [k], k ≤ 5.
const std::vector<std::uint64_t>& face_masks(std::size_t k) {
  static std::array<std::vector<std::uint64_t>, 6> table;
  auto& out = table[k];
  if (!out.empty()) return out;
  if (k == 0) {
    out = {0, 1};
    return out;
  }
  const auto& smaller = face_masks(k - 1);
  const std::size_t shift = std::size_t{1} << (k - 1);
  // A complex on [k] is its deletion D and link L of vertex k−1, with L ⊆ D.
  for (auto d : smaller)
    for (auto l : smaller)
      if ((l & ~d) == 0) out.push_back(d | (l << shift));
  return out;
}

const Labels& cached_labels(std::size_t n) {
  static std::array<Labels, 7> table;
  if (!table[n]) table[n] = numbered_labels(n);
  return table[n];
}

}  // namespace

void for_each_face_mask(std::size_t n, const std::function<void(std::uint64_t)>& fn) {
  if (n > 6) throw std::invalid_argument("complex enumeration is limited to 6 vertices");
  if (n == 0) {
    fn(1);
    return;
  }
  const auto& smaller = face_masks(n - 1);
  const std::size_t shift = std::size_t{1} << (n - 1);
  for (auto d : smaller) {
    if (d == 0) continue;  // D void forces L void: the void complex
    for (auto l : smaller) {
      if ((l & ~d) == 0) fn(d | (l << shift));
    }
  }
}

SimplicialComplex complex_from_face_mask(std::size_t n, std::uint64_t faces) {
  if (n > 6) throw std::invalid_argument("face masks cover at most 6 vertices");
  std::vector<VertexSubset> facets;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < count; ++s) {
    if (!((faces >> s) & 1U)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      const auto up = s | (std::uint64_t{1} << v);
      if (up != s && ((faces >> up) & 1U)) maximal = false;
    }
    if (maximal) facets.push_back(VertexSubset(s));
  }
  return SimplicialComplex(cached_labels(n), std::move(facets));
}

SimplicialComplex random_complex(std::size_t n, std::size_t m, double density, std::uint64_t seed) {
  if (n > kMaxVertices) throw std::invalid_argument("too many vertices");
  Rng rng(seed);
  std::vector<VertexSubset> sets;
  for (std::size_t i = 0; i < m; ++i) {
    VertexSubset s;
    for (std::size_t v = 0; v < n; ++v) {
      if (rng.chance(density)) s = s.with(v);
    }
    sets.push_back(s);
  }
  if (sets.empty()) sets.push_back(VertexSubset{});
  return SimplicialComplex(numbered_labels(n), std::move(sets));
}

std::vector<std::vector<std::size_t>> random_partition(std::size_t edges, std::size_t parts, std::uint64_t seed) {
  if (parts == 0) throw std::invalid_argument("partition needs at least one part");
  Rng rng(seed);
  std::vector<std::size_t> order(edges);
  for (std::size_t i = 0; i < edges; ++i) order[i] = i;
  for (std::size_t i = edges; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<std::vector<std::size_t>> out(parts);
  for (std::size_t i = 0; i < edges; ++i) {
    const auto part = i < parts ? i : static_cast<std::size_t>(rng.below(parts));
    out[part].push_back(order[i]);
  }
  for (auto& part : out) std::sort(part.begin(), part.end());
  return out;
}

namespace {

void append(std::vector<PropertyReport>& out, std::vector<PropertyReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

void complex_checks(const SimplicialComplex& c, FieldPrime p, const CheckContext& ctx, const std::string& inst,
                    std::vector<PropertyReport>& out) {
  append(out, check_dichotomy(c, p, ctx, inst));
  append(out, check_vd_formula(c, p, ctx, inst));
  append(out, check_method_agreement(c, p, ctx, inst));
}

// `every_edge`: split at each edge instead of one drawn at random.
void hypergraph_checks(const Hypergraph& h, FieldPrime p, const CheckContext& ctx, const std::string& inst,
                       std::uint64_t seed, bool every_edge, std::vector<PropertyReport>& out) {
  Rng rng(seed);
  if (h.edge_count() > 0) append(out, check_collage_bounds(h, p, ctx, inst));
  if (is_graph(h)) append(out, check_zeta_bound(h, p, ctx, inst));
  if (h.edge_count() >= 2) {
    if (every_edge) {
      for (auto e : h.edges()) append(out, check_edge_split(h, e, p, ctx, inst));
    } else {
      append(out, check_edge_split(h, h.edges()[rng.below(h.edge_count())], p, ctx, inst));
    }
    const auto parts = static_cast<std::size_t>(rng.between(2, 3));
    append(out, check_km_subadditivity(h, random_partition(h.edge_count(), parts, rng.next()), p, ctx, inst));
  }
  complex_checks(independence_complex(h), p, ctx, inst, out);
}

}  // namespace

std::vector<PropertyReport> run_sweep(const SweepOptions& options, const CheckContext& ctx) {
  std::string family = options.family;
  std::replace(family.begin(), family.end(), '_', '-');
  const auto& params = options.params;
  std::vector<FieldPrime> primes = options.primes;
  if (primes.empty()) primes = {FieldPrime(2), FieldPrime(3)};
  std::vector<PropertyReport> out;

  auto over_primes = [&](auto&& body) {
    for (auto p : primes) body(p);
  };

  const auto base = family + " seed=" + std::to_string(params.seed);
  if (family == "random-graph" || family == "random-uniform" || family == "random-complex") {
    for (std::size_t t = 0; t < options.trials; ++t) {
      const auto seed = mix_seed(params.seed, t);
      const auto inst = base + " trial=" + std::to_string(t) + " instance-seed=" + std::to_string(seed);
      if (family == "random-complex") {
        const auto c = random_complex(params.n, params.m, params.p, seed);
        over_primes([&](FieldPrime p) { complex_checks(c, p, ctx, inst + " " + describe(c), out); });
      } else {
        const auto h = family == "random-graph" ? random_graph(params.n, params.p, seed)
                                                : random_uniform(params.n, params.d, params.m, seed);
        over_primes([&](FieldPrime p) {
          hypergraph_checks(h, p, ctx, inst + " " + describe(h), mix_seed(seed, 1), false, out);
        });
      }
    }
    return out;
  }
  if (family == "all-graphs") {
    std::size_t index = 0;
    for_each_graph(params.n, [&](const Hypergraph& g) {
      const auto inst = "all-graphs n=" + std::to_string(params.n) + " index=" + std::to_string(index++) + " " + describe(g);
      over_primes([&](FieldPrime p) { hypergraph_checks(g, p, ctx, inst, mix_seed(params.seed, index), false, out); });
    });
    return out;
  }
  if (family == "all-complexes") {
    for_each_face_mask(params.n, [&](std::uint64_t mask) {
      const auto c = complex_from_face_mask(params.n, mask);
      const auto inst = "all-complexes n=" + std::to_string(params.n) + " mask=" + std::to_string(mask) + " " + describe(c);
      over_primes([&](FieldPrime p) { complex_checks(c, p, ctx, inst, out); });
    });
    return out;
  }
  const auto h = generate_family(family, params);
  std::string inst = family;
  if (family == "hs") {
    inst += " s=" + std::to_string(params.s);
  } else {
    inst += " n=" + std::to_string(params.n);
  }
  over_primes([&](FieldPrime p) { hypergraph_checks(h, p, ctx, inst, params.seed, true, out); });
  return out;
}

}  // namespace regtool
