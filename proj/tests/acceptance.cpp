// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as
// arguments to run a subset.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "regtool/cli.hpp"
#include "regtool/decomp.hpp"
#include "regtool/invariants.hpp"
#include "regtool/regularity.hpp"
#include "regtool/verify.hpp"

using namespace regtool;
using Clock = std::chrono::steady_clock;

namespace {

const FieldPrime two(2);
const FieldPrime three(3);

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Tally {
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void add(const PropertyReport& r) {
    switch (r.outcome) {
      case Outcome::pass: ++passed; break;
      case Outcome::skipped: ++skipped; break;
      case Outcome::fail:
        if (failed++ == 0) {
          std::ostringstream s;
          s << r.property << " on " << r.instance << " (char " << r.field_char << "): " << r.left << ' '
            << relation_name(r.relation) << ' ';
          for (auto x : r.right) s << x << ' ';
          first_failure = s.str();
        }
        break;
    }
  }
  void add(const std::vector<PropertyReport>& rs) {
    for (const auto& r : rs) add(r);
  }
  void fail(const std::string& what) {
    if (failed++ == 0) first_failure = what;
  }
  bool ok() const { return failed == 0; }
  std::string summary() const {
    std::string s = std::to_string(passed) + " passed, " + std::to_string(skipped) + " skipped, " +
                    std::to_string(failed) + " failed";
    if (failed) s += "; first: " + first_failure;
    return s;
  }
};

// Every regularity report emitted by a check is re-verified from scratch here.
struct ReportSink {
  std::size_t emitted = 0;
  std::size_t verified = 0;
  std::string first_failure;

  void operator()(const SimplicialComplex& c, const RegularityReport& r) {
    ++emitted;
    if (verify_certificate(c, r)) {
      ++verified;
    } else if (first_failure.empty()) {
      first_failure = describe(c);
    }
  }
};

// Results of the vertex-decomposable suite, fed by every sweep.
struct VdSuite {
  std::set<std::string> properties{"vd_recursion", "vd_equality", "betti_splitting", "homology_lift"};
  std::size_t complexes = 0;
  std::size_t decomposable = 0;
  Tally tally;
  double seconds = 0;

  void run(const SimplicialComplex& c, const std::vector<FieldPrime>& primes, const CheckContext& ctx) {
    const auto t0 = Clock::now();
    ++complexes;
    if (decomposes(c, ctx.cache)) {
      ++decomposable;
      for (auto p : primes) {
        for (const auto& r : check_vd_formula(c, p, ctx)) {
          if (properties.count(r.property)) tally.add(r);
        }
      }
    }
    seconds += seconds_since(t0);
  }
};

struct Run {
  ReportSink sink;
  VdSuite vd;
  bool all_ok = true;
  std::set<int> selected;

  CheckContext context(ComputeCache* cache) {
    CheckContext ctx;
    ctx.cache = cache;
    ctx.self_check = false;
    ctx.on_report = [this](const SimplicialComplex& c, const RegularityReport& r) { sink(c, r); };
    return ctx;
  }
  bool wants(int k) const { return selected.empty() || selected.count(k); }
  void print(int k, bool ok, const std::string& detail) {
    all_ok = all_ok && ok;
    std::cout << "criterion " << k << ": " << (ok ? "PASS" : "FAIL") << " - " << detail << std::endl;
  }
};

int cli_reg(const Hypergraph& h) {
  std::istringstream in(to_text(h));
  std::ostringstream out;
  std::ostringstream err;
  if (run_cli({"reg", "-", "--json"}, in, out, err) != 0) return -1;
  return nlohmann::json::parse(out.str())["reg_RI"].get<int>();
}

void hs_values(Run& run) {
  Tally t;
  std::ostringstream detail;
  for (std::size_t s = 1; s <= 4; ++s) {
    const auto h = hs_family(s);
    const auto t0 = Clock::now();
    const auto lib = reg_edge_ideal(h, two);
    const auto cli = cli_reg(h);
    const double secs = seconds_since(t0);
    run.sink(independence_complex(h), lib);
    const auto expect = static_cast<int>(s) + 1;
    const auto name = "H_" + std::to_string(s);
    if (lib.value != expect || cli != expect) {
      t.fail(name + ": reg " + std::to_string(lib.value) + " / cli " + std::to_string(cli));
    }
    if (secs >= 10) t.fail(name + " took " + std::to_string(secs) + " s");
    if (matching_number(h).value != 1 || minimax_matching_number(h).value != 1) t.fail(name + ": matching numbers");
    const auto collage = min_two_collage(h);
    const auto weight = collage_weight(h, collage.witness);
    if (collage.value != s || weight != 2 * s) t.fail(name + ": collage");
    if (!(lib.value <= static_cast<int>(weight))) t.fail(name + ": collage bound");
    const bool minimax_bound_holds = lib.value <= 2 * static_cast<int>(minimax_matching_number(h).value);
    if (minimax_bound_holds != (s < 2)) t.fail(name + ": (d-1) nu_min bound");
    ++t.passed;
    detail << name << " reg=" << lib.value << " (" << secs << " s) ";
  }
  run.print(1, t.ok(), detail.str() + t.summary());
}

void single_edge(Run& run) {
  Tally t;
  for (std::size_t d = 2; d <= 6; ++d) {
    const Hypergraph h(numbered_labels(d), {VertexSubset::prefix(d)});
    for (auto m : {Method::subsets, Method::links, Method::vd}) {
      for (auto p : {two, three}) {
        const auto r = reg_edge_ideal(h, p, m);
        run.sink(independence_complex(h), r);
        if (r.value + 1 == static_cast<int>(d)) {
          ++t.passed;
        } else {
          t.fail("edge of size " + std::to_string(d) + ": reg(I) = " + std::to_string(r.value + 1));
        }
      }
    }
  }
  run.print(2, t.ok(), "sizes 2..6, all methods, char 2 and 3; " + t.summary());
}

void graph_sweep(Run& run) {
  ComputeCache cache(6);
  const auto ctx = run.context(&cache);
  Tally t;
  std::size_t graphs = 0;
  double vd_before = run.vd.seconds;
  const auto t0 = Clock::now();
  for (std::size_t n = 0; n <= 7; ++n) {
    for_each_graph(n, [&](const Hypergraph& g) {
      ++graphs;
      for (auto p : {two, three}) {
        if (g.edge_count() == 0) {
          const auto r = ctx.reg(g, p);
          if (r.value != 0 || induced_matching_number(g).value != 0 || minimax_matching_number(g).value != 0) {
            t.fail("edgeless graph on " + std::to_string(n) + " vertices");
          } else {
            ++t.passed;
          }
        } else {
          for (const auto& r : check_collage_bounds(g, p, ctx)) {
            if (r.property == "induced_matching_lower" || r.property == "collage_upper" ||
                r.property == "graph_collage_minimax") {
              t.add(r);
            }
          }
        }
        t.add(check_zeta_bound(g, p, ctx));
      }
      run.vd.run(independence_complex(g), {two}, ctx);
    });
  }
  const double secs = seconds_since(t0) - (run.vd.seconds - vd_before);
  const bool in_time = secs <= 30 * 60;
  run.print(3, t.ok() && in_time,
            std::to_string(graphs) + " graphs, char 2 and 3, in " + std::to_string(secs) + " s; " + t.summary());
}

void uniform_sweep(Run& run) {
  ComputeCache cache(10);
  const auto ctx = run.context(&cache);
  Tally t;
  const auto t0 = Clock::now();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 5 + seed % 6;
    const std::size_t m = 2 + (seed / 6) % 8;
    const auto h = random_uniform(n, 3, m, seed);
    for (auto p : {two, three}) {
      for (const auto& r : check_collage_bounds(h, p, ctx)) {
        if (r.property == "uniform_lower" || r.property == "collage_upper") t.add(r);
      }
    }
    run.vd.run(independence_complex(h), {two, three}, ctx);
  }
  const double secs = seconds_since(t0);
  run.print(4, t.ok() && secs <= 30 * 60,
            "200 hypergraphs in " + std::to_string(secs) + " s; " + t.summary());
}

void method_agreement(Run& run) {
  Tally t;
  std::size_t complexes = 0;
  {
    ComputeCache cache(5);
    const auto ctx = run.context(&cache);
    for (std::size_t n = 0; n <= 6; ++n) {
      for_each_face_mask(n, [&](std::uint64_t mask) {
        const auto c = complex_from_face_mask(n, mask);
        ++complexes;
        for (auto p : {two, three}) t.add(check_method_agreement(c, p, ctx));
        run.vd.run(c, {two}, ctx);
      });
    }
  }
  ComputeCache cache(8);
  const auto ctx = run.context(&cache);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto c = random_complex(7 + seed % 4, 3 + seed % 5, 0.55, seed);
    ++complexes;
    for (auto p : {two, three}) t.add(check_method_agreement(c, p, ctx));
    run.vd.run(c, {two, three}, ctx);
  }
  run.print(5, t.ok(), std::to_string(complexes) + " complexes, char 2 and 3; " + t.summary());
}

void dichotomy_suite(Run& run) {
  ComputeCache cache(9);
  const auto ctx = run.context(&cache);
  Tally t;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = random_complex(5 + seed % 5, 2 + seed % 6, 0.5, 1000 + seed);
    for (auto p : {two, three}) t.add(check_dichotomy(c, p, ctx));
    run.vd.run(c, {two, three}, ctx);
  }
  run.print(6, t.ok(), "100 complexes, char 2 and 3; " + t.summary());
}

void vd_suite(Run& run) {
  const auto& vd = run.vd;
  const bool ok = vd.tally.ok() && vd.decomposable > 0;
  run.print(7, ok,
            std::to_string(vd.decomposable) + " of " + std::to_string(vd.complexes) +
                " swept complexes vertex-decomposable (" + std::to_string(vd.seconds) + " s); " + vd.tally.summary());
}

void km_partitions(Run& run) {
  ComputeCache cache(10);
  const auto ctx = run.context(&cache);
  Tally t;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = seed % 2 ? random_graph(6 + seed % 4, 0.45, seed) : random_uniform(6 + seed % 4, 3, 4 + seed % 4, seed);
    if (h.edge_count() < 3) {
      t.fail("seed " + std::to_string(seed) + " gave fewer than 3 edges");
      continue;
    }
    const std::size_t parts = 2 + seed % 2;
    const auto partition = random_partition(h.edge_count(), parts, seed);
    for (auto p : {two, three}) t.add(check_km_subadditivity(h, partition, p, ctx));
  }
  run.print(8, t.ok(), "100 partitions, char 2 and 3; " + t.summary());
}

void report_consistency(Run& run) {
  const auto& s = run.sink;
  const bool ok = s.emitted > 0 && s.verified == s.emitted;
  std::string detail = std::to_string(s.verified) + " of " + std::to_string(s.emitted) + " reports re-verified";
  if (!s.first_failure.empty()) detail += "; first failure on " + s.first_failure;
  run.print(9, ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  Run run;
  for (int i = 1; i < argc; ++i) run.selected.insert(std::atoi(argv[i]));
  using Step = void (*)(Run&);
  const std::vector<std::pair<int, Step>> steps{
      {1, hs_values},       {2, single_edge},     {3, graph_sweep}, {4, uniform_sweep},     {5, method_agreement},
      {6, dichotomy_suite}, {7, vd_suite},        {8, km_partitions}, {9, report_consistency}};
  for (const auto& [k, step] : steps) {
    if (!run.wants(k)) continue;
    try {
      step(run);
    } catch (const std::exception& e) {
      run.print(k, false, std::string("exception: ") + e.what());
    }
  }
  return run.all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
