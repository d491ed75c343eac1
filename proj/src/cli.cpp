#include "regtool/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "regtool/decomp.hpp"
#include "regtool/invariants.hpp"
#include "regtool/regularity.hpp"
#include "regtool/verify.hpp"

namespace regtool {

namespace {

using Json = nlohmann::ordered_json;

// Input or usage problem: reported on stderr, exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string input;
  bool facets = false;
  bool json = false;
  std::uint32_t field_char = 2;
  std::string method = "auto";
  std::optional<int> max_degree;
  std::string family;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  FamilyParams params;
  bool char_given = false;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

SimplicialComplex load_complex(const Settings& s, std::istream& in) {
  const auto text = read_input(s.input, in);
  return s.facets ? parse_facets(text) : independence_complex(parse_hypergraph(text));
}

Json label_list(VertexSubset set, const SimplicialComplex& c) {
  Json out = Json::array();
  for (auto v : set) out.push_back(c.label(v));
  return out;
}

Json report_json(const PropertyReport& r) {
  Json right = Json::array();
  for (auto x : r.right) right.push_back(x);
  Json j;
  j["property"] = r.property;
  j["instance"] = r.instance;
  j["char"] = r.field_char;
  j["hypothesis"] = r.hypothesis_satisfied();
  j["relation"] = relation_name(r.relation);
  if (r.hypothesis_satisfied()) {
    j["left"] = r.left;
    j["right"] = right;
  }
  j["outcome"] = outcome_name(r.outcome);
  j["certificates"] = r.certificates;
  return j;
}

int cmd_reg(const Settings& s, std::istream& in, std::ostream& out) {
  const auto c = load_complex(s, in);
  if (c.is_void()) throw UsageError("regularity of the void complex is undefined");
  const FieldPrime p(s.field_char);
  const RegularityReport r = [&] {
    try {
      return regularity(c, p, parse_method(s.method), RegularityOptions{nullptr, s.max_degree});
    } catch (const NotVertexDecomposable& e) {
      throw UsageError(std::string(e.what()) + "; no vertex sheds in " + describe(e.witness()));
    }
  }();
  const bool induced = r.certificate.kind == Certificate::Kind::induced_subcomplex;
  if (s.json) {
    Json j;
    j["schema"] = 1;
    j["reg_RI"] = r.value;
    j["reg_I"] = r.value + 1;
    j["method"] = method_name(r.method);
    j["char"] = r.field_char;
    j["capped"] = r.capped;
    j["certificate"] = {{"kind", induced ? "induced_subcomplex" : "link"},
                        {"set", label_list(r.certificate.set, c)},
                        {"degree", r.certificate.degree}};
    out << j.dump(2) << '\n';
  } else {
    out << "reg(R/I) = " << r.value << (r.capped ? " (lower bound, search capped)" : "") << '\n';
    out << "reg(I)   = " << r.value + 1 << '\n';
    out << "method: " << method_name(r.method) << ", char " << r.field_char << '\n';
    out << "certificate: " << describe(r.certificate, c.labels()) << " is nonzero\n";
  }
  return 0;
}

int cmd_homology(const Settings& s, std::istream& in, std::ostream& out) {
  const auto c = load_complex(s, in);
  const FieldPrime p(s.field_char);
  const auto betti = reduced_betti(c, p);
  if (s.json) {
    Json dims = Json::object();
    for (int i = -1; i <= betti.top_degree(); ++i) dims[std::to_string(i)] = betti[i];
    Json j;
    j["schema"] = 1;
    j["char"] = p.value();
    j["betti"] = dims;
    out << j.dump(2) << '\n';
  } else {
    if (c.is_void()) out << "void complex: all reduced homology vanishes\n";
    for (int i = -1; i <= betti.top_degree(); ++i) out << "dim H~_" << i << " = " << betti[i] << '\n';
  }
  return 0;
}

int cmd_invariants(const Settings& s, std::istream& in, std::ostream& out) {
  const auto h = parse_hypergraph(read_input(s.input, in));
  const auto nu = matching_number(h);
  const auto nu_min = minimax_matching_number(h);
  const auto nu_ind = induced_matching_number(h);
  std::optional<Extremum> collage;
  if (h.edge_count() > 0) collage = min_two_collage(h);
  std::optional<std::size_t> zeta;
  std::optional<std::size_t> alpha;
  if (is_graph(h)) {
    zeta = zeta_star_packing(h).value;
    alpha = independence_number(h);
  }
  const auto weak = weak_packing_statistic(independence_complex(h));

  auto maybe = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  if (s.json) {
    Json j;
    j["schema"] = 1;
    j["nu"] = nu.value;
    j["nu_min"] = nu_min.value;
    j["nu_ind"] = nu_ind.value;
    j["collage_min"] = collage ? Json(collage->value) : Json(nullptr);
    j["collage_weight"] = collage ? Json(collage_weight(h, collage->witness)) : Json(nullptr);
    j["zeta"] = maybe(zeta);
    j["alpha"] = maybe(alpha);
    j["weak_packing"] = weak;
    out << j.dump(2) << '\n';
  } else {
    auto text = [](const auto& v) { return v ? std::to_string(*v) : std::string("n/a"); };
    out << "matching number          " << nu.value << '\n';
    out << "minimax matching number  " << nu_min.value << '\n';
    out << "induced matching number  " << nu_ind.value << '\n';
    out << "min 2-collage            " << (collage ? std::to_string(collage->value) : "n/a") << '\n';
    out << "min 2-collage weight     "
        << (collage ? std::to_string(collage_weight(h, collage->witness)) : "n/a") << '\n';
    out << "zeta                     " << text(zeta) << '\n';
    out << "independence number      " << text(alpha) << '\n';
    out << "weak packing             " << weak << '\n';
  }
  return 0;
}

int cmd_vd(const Settings& s, std::istream& in, std::ostream& out) {
  const auto c = load_complex(s, in);
  if (c.is_void()) throw UsageError("vertex decomposability of the void complex is undefined");
  const FieldPrime p(s.field_char);
  ComputeCache cache;
  const auto vd = is_vertex_decomposable(c, &cache);
  std::vector<std::string> order;
  if (vd.decomposable) {
    for (auto v : shedding_order(c, &cache)) order.push_back(c.label(v));
  }
  const bool scm = is_sequentially_cm(c, p, &cache);
  const bool cm = is_cohen_macaulay(c, p, &cache);
  if (s.json) {
    Json j;
    j["schema"] = 1;
    j["vd"] = vd.decomposable;
    j["shedding_order"] = order;
    j["scm"] = scm;
    j["cm"] = cm;
    j["char"] = p.value();
    if (vd.certificate.failure_witness) j["failure_witness"] = describe(*vd.certificate.failure_witness);
    out << j.dump(2) << '\n';
  } else {
    out << "vertex-decomposable: " << (vd.decomposable ? "yes" : "no") << '\n';
    if (vd.decomposable) {
      out << "shedding order:";
      for (const auto& v : order) out << ' ' << v;
      out << '\n';
    } else {
      out << "no vertex sheds in " << describe(*vd.certificate.failure_witness) << '\n';
    }
    out << "sequentially Cohen-Macaulay (char " << p.value() << "): " << (scm ? "yes" : "no") << '\n';
    out << "Cohen-Macaulay (char " << p.value() << "): " << (cm ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  SweepOptions options;
  options.family = s.family;
  options.trials = s.trials;
  options.params = s.params;
  options.params.seed = s.seed;
  if (s.char_given) options.primes = {FieldPrime(s.field_char)};
  ComputeCache cache;
  CheckContext ctx;
  ctx.cache = &cache;
  const auto reports = run_sweep(options, ctx);
  std::size_t failures = 0;
  std::size_t passes = 0;
  for (const auto& r : reports) {
    failures += r.outcome == Outcome::fail;
    passes += r.outcome == Outcome::pass;
  }
  if (s.json) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    Json j;
    j["schema"] = 1;
    j["family"] = s.family;
    j["failures"] = failures;
    j["reports"] = list;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << outcome_name(r.outcome) << "  " << r.property << "  p=" << r.field_char << "  ";
      if (r.hypothesis_satisfied()) {
        out << r.left << ' ' << relation_name(r.relation) << ' ';
        for (std::size_t i = 0; i < r.right.size(); ++i) out << (i ? "," : "") << r.right[i];
      } else {
        out << r.certificates.front();
      }
      out << "  | " << r.instance << '\n';
    }
    out << reports.size() << " reports: " << passes << " pass, " << failures << " fail, "
        << reports.size() - passes - failures << " skipped\n";
  }
  return failures == 0 ? 0 : 1;
}

int cmd_gen(const Settings& s, std::ostream& out) {
  auto params = s.params;
  params.seed = s.seed;
  if (s.family == "random-complex" || s.family == "random_complex") {
    out << to_text(random_complex(params.n, params.m, params.p, params.seed));
  } else {
    out << to_text(generate_family(s.family, params));
  }
  return 0;
}

std::uint32_t default_char() {
  const char* env = std::getenv("REGTOOL_CHAR");
  if (!env || !*env) return 2;
  try {
    std::size_t used = 0;
    const auto value = std::stoul(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return static_cast<std::uint32_t>(value);
  } catch (const std::exception&) {
    throw UsageError(std::string("REGTOOL_CHAR is not a number: '") + env + "'");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Castelnuovo-Mumford regularity of square-free monomial ideals"};
  app.name("regtool");
  app.require_subcommand(1, 1);

  auto input_verb = [&](const std::string& name, const std::string& about, bool complexes, bool field) {
    auto* cmd = app.add_subcommand(name, about);
    cmd->add_option("input", s.input, "edge list file, or - for stdin")->required();
    if (complexes) cmd->add_flag("--facets", s.facets, "input lists facets of a complex instead of edges");
    if (field) cmd->add_option("--char", s.field_char, "field characteristic (default $REGTOOL_CHAR or 2)");
    cmd->add_flag("--json", s.json, "machine-readable output");
    return cmd;
  };
  auto* reg = input_verb("reg", "regularity of R/I with a homology certificate", true, true);
  reg->add_option("--method", s.method, "auto, subsets, links or vd");
  reg->add_option("--max-degree", s.max_degree, "stop once this value is reached");
  auto* homology = input_verb("homology", "reduced Betti numbers of the complex", true, true);
  auto* invariants = input_verb("invariants", "matching, collage and packing statistics", false, false);
  auto* vd = input_verb("vd", "vertex decomposability and Cohen-Macaulay tests", true, true);

  auto family_options = [&](CLI::App* cmd) {
    cmd->add_option("--seed", s.seed, "random seed");
    cmd->add_option("--n", s.params.n, "vertex count");
    cmd->add_option("--s", s.params.s, "index of the hs family");
    cmd->add_option("--d", s.params.d, "edge size for random-uniform");
    cmd->add_option("--m", s.params.m, "edge or facet count");
    cmd->add_option("--p", s.params.p, "edge or vertex probability");
  };
  auto* verify = app.add_subcommand("verify", "check the regularity bounds over a family of instances");
  verify->add_option("--family", s.family, "random-graph, random-uniform, random-complex, all-graphs, "
                                           "all-complexes, hs, cycle, path, complete, star")
      ->required();
  verify->add_option("--trials", s.trials, "instances for random families");
  verify->add_option("--char", s.field_char, "check this characteristic only (default: 2 and 3)");
  verify->add_flag("--json", s.json, "machine-readable output");
  family_options(verify);
  auto* gen = app.add_subcommand("gen", "print a member of a named family");
  gen->add_option("family", s.family, "hs, cycle, path, complete, star, random-uniform, random-graph, random-complex")
      ->required();
  family_options(gen);

  std::vector<const char*> argv{"regtool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    s.field_char = default_char();
    app.parse(static_cast<int>(argv.size()), argv.data());
    s.char_given = verify->count("--char") > 0;
    if (reg->parsed()) return cmd_reg(s, in, out);
    if (homology->parsed()) return cmd_homology(s, in, out);
    if (invariants->parsed()) return cmd_invariants(s, in, out);
    if (vd->parsed()) return cmd_vd(s, in, out);
    if (verify->parsed()) return cmd_verify(s, out);
    if (gen->parsed()) return cmd_gen(s, out);
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "regtool: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "regtool: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "regtool: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "regtool: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace regtool
