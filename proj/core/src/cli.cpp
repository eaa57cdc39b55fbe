#include "ttr/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttr/cache.hpp"
#include "ttr/canonical.hpp"
#include "ttr/coeffs.hpp"
#include "ttr/compare.hpp"
#include "ttr/cutsets.hpp"
#include "ttr/enumerate.hpp"
#include "ttr/errors.hpp"
#include "ttr/families.hpp"
#include "ttr/graph_io.hpp"
#include "ttr/minimal.hpp"
#include "ttr/montecarlo.hpp"
#include "ttr/search.hpp"
#include "ttr/subgraph_count.hpp"
#include "ttr/verify.hpp"
#include "ttr/version.hpp"

namespace ttr::cli {

namespace {

using nlohmann::json;

Engine engine_from_flag(const std::string& s) {
  if (s == "auto") return Engine::kAuto;
  if (s == "bruteforce") return Engine::kBruteForce;
  if (s == "decomposition") return Engine::kDecomposition;
  throw std::invalid_argument("engine flag '" + s + "' not valid here");
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Shared graph-selection flags: exactly one of --graph / --family / --edges.
struct GraphFlags {
  std::string spec, family, edges;
  int n = -1, l = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", spec,
                    "graph spec: NAME:n[:l], @file, \"n=..; edges=..\" or \"n=..; deleted=..\"");
    cmd->add_option("--family", family, "family name: A, Astar, Aprime, X, Y, Z, Kn");
    cmd->add_option("--n", n, "vertex count (with --family or --edges)");
    cmd->add_option("--l", l, "deleted-edge parameter (with --family)");
    cmd->add_option("--edges", edges, "explicit edge list u-v,u-v,...");
  }

  LabeledGraph resolve() const {
    const int given = !spec.empty() + !family.empty() + !edges.empty();
    if (given != 1)
      throw std::invalid_argument("give exactly one of --graph, --family, --edges");
    if (!spec.empty()) return graph_from_spec(spec);
    if (!family.empty()) {
      if (n < 0) throw std::invalid_argument("--family needs --n");
      return family_by_name(family, n, l);
    }
    std::string text;
    if (n >= 0) text = "n=" + std::to_string(n) + "; ";
    return graph_from_text(text + "edges=" + edges);
  }
};

std::optional<CoeffCache> open_cache(const std::string& flag_dir) {
  if (!flag_dir.empty()) return CoeffCache(flag_dir);
  if (const char* env = std::getenv("TTR_CACHE_DIR"); env && *env)
    return CoeffCache(env);
  return std::nullopt;
}

CoeffVector cached_coeffs(const LabeledGraph& g, Engine engine,
                          std::optional<CoeffCache>& cache) {
  if (cache) {
    const auto key = canonical_key(g);
    if (auto hit = cache->load(key, engine)) return *hit;
    auto cv = coeffs(g, engine);
    cache->store(key, engine, cv);
    return cv;
  }
  return coeffs(g, engine);
}

json suite_to_json(const SuiteReport& rep) {
  json claims = json::array();
  for (const auto& c : rep.claims)
    claims.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  return {{"suite", rep.suite}, {"pass", rep.pass()}, {"claims", claims}};
}

std::string suite_text(const SuiteReport& rep) {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& c : rep.claims) {
    os << (c.pass ? "PASS" : "FAIL") << ' ' << rep.suite << '.' << c.name
       << (c.details.empty() ? "" : " -- " + c.details) << '\n';
    ok += c.pass;
  }
  os << rep.suite << ": " << ok << '/' << rep.claims.size() << " claims passed\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact three-terminal reliability laboratory"};
  app.require_subcommand(1);

  std::string format = "json", engine_flag = "auto", record_path, cache_dir;
  std::uint64_t budget = 1'000'000;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--engine", engine_flag, "coefficient engine")
      ->check(CLI::IsMember({"auto", "bruteforce", "decomposition", "both", "mc"}));
  app.add_option("--budget", budget, "enumeration budget (complement combinations)");
  app.add_option("--record", record_path, "write a replayable run record to this file");
  app.add_option("--cache-dir", cache_dir,
                 "coefficient cache directory (default: $TTR_CACHE_DIR)");

  auto* c_coeffs = app.add_subcommand("coeffs", "coefficient vector N_2..N_m of one graph");
  GraphFlags coeffs_g;
  coeffs_g.attach(c_coeffs);
  double mc_p = 0.5;
  std::uint64_t mc_samples = 100'000, mc_seed = 1;
  c_coeffs->add_option("--p", mc_p, "edge survival probability (engine mc)");
  c_coeffs->add_option("--samples", mc_samples, "Monte Carlo sample count");
  c_coeffs->add_option("--seed", mc_seed, "Monte Carlo RNG seed");

  auto* c_family = app.add_subcommand("family", "construct a named extremal family");
  std::string fam_name;
  int fam_n = 0, fam_l = -1;
  c_family->add_option("--name", fam_name, "A, Astar, Aprime, X, Y, Z, Kn")->required();
  c_family->add_option("--n", fam_n, "vertex count")->required();
  c_family->add_option("--l", fam_l, "deleted-edge parameter (A, Aprime)");

  auto* c_enum = app.add_subcommand("enumerate", "isomorphism classes of G_{n,m}");
  int en_n = 0, en_m = 0;
  bool en_coeffs = false;
  c_enum->add_option("--n", en_n, "vertex count")->required();
  c_enum->add_option("--m", en_m, "edge count")->required();
  c_enum->add_flag("--coeffs", en_coeffs, "include each class's coefficient vector");

  auto* c_cuts = app.add_subcommand("cutsets", "minimal target-separating cutsets");
  GraphFlags cuts_g;
  cuts_g.attach(c_cuts);
  std::string cut_method = "partition";
  c_cuts->add_option("--method", cut_method, "enumeration method")
      ->check(CLI::IsMember({"partition", "sweep"}));

  auto* c_cmp = app.add_subcommand("compare", "exact reliability comparison of two graphs");
  std::string cmp_first, cmp_second;
  int grid_bits = 10, refine_bits = 40;
  c_cmp->add_option("first", cmp_first, "first graph spec")->required();
  c_cmp->add_option("second", cmp_second, "second graph spec")->required();
  c_cmp->add_option("--grid-bits", grid_bits, "initial sign-scan grid 2^-bits");
  c_cmp->add_option("--refine-bits", refine_bits, "bisection width 2^-bits");

  auto* c_search = app.add_subcommand("search", "optimizers over G_{n,m}");
  std::string search_kind;
  int s_n = 0, s_m = -1, s_l = -1;
  c_search->add_option("--kind", search_kind, "local-zero, local-one, umrg, max-p3")
      ->required()
      ->check(CLI::IsMember({"local-zero", "local-one", "umrg", "max-p3"}));
  c_search->add_option("--n", s_n, "vertex count")->required();
  c_search->add_option("--m", s_m, "edge count");
  c_search->add_option("--l", s_l, "deleted edges (m = C(n,2) - l)");

  auto* c_verify = app.add_subcommand("verify", "run a named claim suite");
  std::string suite;
  int v_n = -1, v_l = -1;
  std::uint64_t v_seed = 20260815, v_graphs = 100, v_samples = 100'000;
  c_verify->add_option("suite", suite, "suite name, 'list', or 'cross-validation'")
      ->required();
  c_verify->add_option("--n", v_n, "narrow to one vertex count");
  c_verify->add_option("--l", v_l, "narrow to one deletion parameter");
  c_verify->add_option("--seed", v_seed, "cross-validation RNG seed");
  c_verify->add_option("--graphs", v_graphs, "cross-validation graph count");
  c_verify->add_option("--samples", v_samples, "cross-validation Monte Carlo samples");

  auto* c_plot = app.add_subcommand("plot-data", "CSV of (p, R_G, R_H, R_G - R_H)");
  std::string plot_first, plot_second;
  int points = 101;
  c_plot->add_option("first", plot_first, "first graph spec")->required();
  c_plot->add_option("second", plot_second, "second graph spec")->required();
  c_plot->add_option("--points", points, "uniform grid size")->check(CLI::Range(2, 1 << 20));

  auto* c_cache = app.add_subcommand("cache", "inspect or edit the coefficient cache");
  bool cache_clear = false;
  std::string cache_put, cache_get;
  c_cache->add_flag("--clear", cache_clear, "remove all entries");
  c_cache->add_option("--put", cache_put, "compute and store this graph spec");
  c_cache->add_option("--get", cache_get, "look up this graph spec");

  for (auto* sub : {c_coeffs, c_family, c_enum, c_cuts, c_cmp, c_search, c_verify,
                    c_plot, c_cache})
    sub->fallthrough();

  std::vector<std::string> argv_owned;
  argv_owned.reserve(args.size() + 1);
  argv_owned.push_back("ttr");
  for (const auto& a : args) argv_owned.push_back(a);
  std::vector<const char*> argv;
  for (const auto& a : argv_owned) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help / --version
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::string command = "ttr";
  for (const auto& a : args) command += ' ' + a;

  json payload, inputs;
  std::string plain, engine_used = "exact";
  int exit_code = 0;
  const bool want_json = format == "json";

  try {
    auto cache = open_cache(cache_dir);
    const auto exact_engine = [&] { return engine_from_flag(engine_flag); };

    if (*c_coeffs) {
      const LabeledGraph g = coeffs_g.resolve();
      inputs = {{"graph", graph_to_json(g)}, {"key", canonical_key(g).bytes}};
      if (engine_flag == "mc") {
        const auto est = mc_reliability(g, mc_p, mc_samples, mc_seed);
        engine_used = "montecarlo";
        payload = {{"p", est.p},           {"samples", est.samples},
                   {"seed", est.seed},     {"rng", mc_rng_name()},
                   {"estimate", est.estimate}, {"half_width", est.half_width}};
        plain = "p,estimate,half_width\n" + g17(est.p) + ',' + g17(est.estimate) + ',' +
                g17(est.half_width) + '\n';
      } else if (engine_flag == "both") {
        const auto cb = coeffs_bruteforce(g);
        const auto cd = coeffs_decomposition(g);
        if (!(cb == cd)) {
          err << "engines disagree on " << graph_to_text(g) << '\n';
          return 1;
        }
        engine_used = "both";
        payload = coeffs_to_json(cb);
        plain = coeffs_to_csv(cb);
      } else {
        const Engine eng = exact_engine();
        engine_used = engine_name(eng);
        const auto cv = cached_coeffs(g, eng, cache);
        payload = coeffs_to_json(cv);
        plain = coeffs_to_csv(cv);
      }
    } else if (*c_family) {
      const LabeledGraph g = family_by_name(fam_name, fam_n, fam_l);
      inputs = {{"name", fam_name}, {"n", fam_n}, {"l", fam_l}};
      payload = {{"name", fam_name},
                 {"n", g.num_vertices()},
                 {"m", g.num_edges()},
                 {"graph", graph_to_json(g)},
                 {"text", graph_to_text(g)},
                 {"key", canonical_key(g).bytes}};
      plain = graph_to_text(g) + '\n';
    } else if (*c_enum) {
      const auto classes = enumerate_gnm(en_n, en_m, {budget});
      inputs = {{"n", en_n}, {"m", en_m}, {"budget", budget}};
      json arr = json::array();
      std::ostringstream csv;
      for (const auto& cls : classes) {
        json row = {{"graph", graph_to_json(cls.graph)},
                    {"orbit_size", cls.orbit_size},
                    {"key", cls.key.bytes}};
        csv << graph_to_text(cls.graph) << ';' << cls.orbit_size;
        if (en_coeffs) {
          const auto cv = cached_coeffs(cls.graph, exact_engine(), cache);
          row["coeffs"] = coeffs_to_json(cv);
          for (int i = 2; i <= cv.m; ++i) csv << (i == 2 ? ';' : ',') << cv.at(i);
        }
        csv << '\n';
        arr.push_back(std::move(row));
      }
      payload = {{"n", en_n}, {"m", en_m}, {"num_classes", classes.size()},
                 {"classes", arr}};
      plain = csv.str();
    } else if (*c_cuts) {
      const LabeledGraph g = cuts_g.resolve();
      inputs = {{"graph", graph_to_json(g)}, {"method", cut_method}};
      const auto method =
          cut_method == "sweep" ? CutsetMethod::kSweep : CutsetMethod::kPartition;
      const auto profile = enumerate_minimal_cutsets(g, method);
      const auto bounds = cutset_size_bounds_report(g, profile);
      const auto structure = cutset_structure_report(g, profile);
      payload = json::parse(cutset_profile_to_json(profile));
      payload["lambda_rst"] = lambda_rst(g);
      payload["bounds"] = {{"checked", bounds.checked},
                           {"violations", bounds.violations},
                           {"at_lower", bounds.at_lower}};
      payload["structure"] = {
          {"smallest_are_target_stars", structure.smallest_are_target_stars},
          {"next_smallest_leaves_order2", structure.next_smallest_leaves_order2},
          {"smallest_size", structure.smallest_size},
          {"next_size", structure.next_size}};
      std::ostringstream csv;
      csv << "size,count\n";
      for (const auto& [size, count] : profile.counts_by_size)
        csv << size << ',' << count << '\n';
      plain = csv.str();
    } else if (*c_cmp) {
      const LabeledGraph a = graph_from_spec(cmp_first), b = graph_from_spec(cmp_second);
      inputs = {{"first", graph_to_json(a)}, {"second", graph_to_json(b)}};
      const auto ca = cached_coeffs(a, exact_engine(), cache),
                 cb = cached_coeffs(b, exact_engine(), cache);
      const auto verdict = classify_pair(ca, cb, grid_bits, refine_bits);
      payload = json::parse(verdict_to_json(verdict));
      plain = verdict_to_json(verdict) + '\n';
    } else if (*c_search) {
      inputs = {{"kind", search_kind}, {"n", s_n}};
      if (search_kind == "max-p3") {
        if (s_m < 0) throw std::invalid_argument("search --kind max-p3 needs --m");
        const auto r = max_p3_search(s_n, s_m, budget);
        payload = {{"n", r.n},
                   {"m", r.m},
                   {"max_p3", r.max_p3},
                   {"achievers", r.achievers},
                   {"star_achieves", r.star_achieves},
                   {"triangle_achieves", r.triangle_achieves}};
      } else {
        if ((s_m < 0) == (s_l < 0))
          throw std::invalid_argument("search needs exactly one of --m, --l");
        const int m = s_m >= 0 ? s_m : num_slots(s_n) - s_l;
        inputs["m"] = m;
        const SearchOptions sopts{budget, exact_engine(), cache ? &*cache : nullptr};
        if (search_kind == "umrg") {
          const auto r = find_umrg(s_n, m, sopts);
          payload = {{"n", s_n},
                     {"m", m},
                     {"num_classes", r.num_classes},
                     {"status", r.status == UmrgStatus::kUniformBest ? "uniform_best"
                                : r.status == UmrgStatus::kNone      ? "none"
                                                                     : "inconclusive"}};
          if (r.best) payload["best_key"] = r.best->bytes;
          if (r.crossing_pair)
            payload["crossing_pair"] = {r.crossing_pair->first.bytes,
                                        r.crossing_pair->second.bytes};
          if (r.crossing)
            payload["crossing"] = {{"lo", to_decimal(r.crossing->lo)},
                                   {"hi", to_decimal(r.crossing->hi)},
                                   {"bits", r.crossing->bits}};
        } else {
          const End end = search_kind == "local-zero" ? End::kZero : End::kOne;
          const auto r = find_local_opt(s_n, m, end, sopts);
          payload = {{"n", r.n},
                     {"m", r.m},
                     {"end", search_kind == "local-zero" ? "zero" : "one"},
                     {"num_classes", r.num_classes},
                     {"unique", r.unique},
                     {"winner", graph_to_json(r.winner)},
                     {"winner_text", graph_to_text(r.winner)},
                     {"winner_key", r.winner_key.bytes},
                     {"coeffs", coeffs_to_json(r.winner_coeffs)}};
        }
      }
      plain = payload.dump() + '\n';
    } else if (*c_verify) {
      if (suite == "list") {
        for (const auto& name : verify_suite_names()) out << name << '\n';
        return 0;
      }
      SuiteReport rep;
      if (suite == "cross-validation") {
        rep = run_cross_validation(v_seed, static_cast<int>(v_graphs), v_samples);
      } else {
        VerifyOptions vopts;
        if (v_n >= 0) vopts.n = v_n;
        if (v_l >= 0) vopts.l = v_l;
        vopts.budget = budget;
        if (engine_flag != "both" && engine_flag != "mc") vopts.engine = exact_engine();
        vopts.cache = cache ? &*cache : nullptr;
        rep = run_verify_suite(suite, vopts);
      }
      inputs = {{"suite", suite}};
      if (v_n >= 0) inputs["n"] = v_n;
      if (v_l >= 0) inputs["l"] = v_l;
      payload = suite_to_json(rep);
      plain = suite_text(rep);
      exit_code = rep.pass() ? 0 : 1;
    } else if (*c_plot) {
      const LabeledGraph a = graph_from_spec(plot_first), b = graph_from_spec(plot_second);
      if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        throw std::invalid_argument("plot-data needs graphs with equal (n, m)");
      inputs = {{"first", graph_to_json(a)},
                {"second", graph_to_json(b)},
                {"points", points}};
      const auto ca = cached_coeffs(a, exact_engine(), cache),
                 cb = cached_coeffs(b, exact_engine(), cache);
      std::ostringstream csv;
      csv << "p,r_first,r_second,difference\n";
      for (int j = 0; j < points; ++j) {
        const BigRat p(j, points - 1);
        const BigRat ra = evaluate(ca, p), rb = evaluate(cb, p);
        csv << g17(rational_to_double(p)) << ',' << g17(rational_to_double(ra)) << ','
            << g17(rational_to_double(rb)) << ',' << g17(rational_to_double(ra - rb))
            << '\n';
      }
      plain = csv.str();
      payload = {{"points", points}, {"csv", plain}};
    } else if (*c_cache) {
      if (!cache)
        throw std::invalid_argument("no cache directory (--cache-dir or $TTR_CACHE_DIR)");
      if (cache_clear) {
        payload = {{"cleared", cache->clear()}};
      } else if (!cache_put.empty()) {
        const LabeledGraph g = graph_from_spec(cache_put);
        const auto cv = cached_coeffs(g, exact_engine(), cache);
        payload = {{"stored", canonical_key(g).bytes},
                   {"coeffs", coeffs_to_json(cv)}};
      } else if (!cache_get.empty()) {
        const LabeledGraph g = graph_from_spec(cache_get);
        if (auto hit = cache->load(canonical_key(g), exact_engine()))
          payload = {{"hit", true}, {"coeffs", coeffs_to_json(*hit)}};
        else
          payload = {{"hit", false}};
      } else {
        payload = {{"dir", cache->dir().string()}, {"entries", cache->size()}};
      }
      plain = payload.dump() + '\n';
    }
  } catch (const budget_error& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  // plot-data emits CSV whatever the format flag says; it has no other form.
  if (want_json && !*c_plot)
    out << payload.dump(2) << '\n';
  else
    out << plain;

  if (!record_path.empty()) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const json rec = {{"tool_version", kVersion}, {"command", command},
                      {"inputs", inputs},         {"outputs", payload},
                      {"wall_time_s", secs},      {"engine", engine_used}};
    std::ofstream(record_path) << rec.dump(2) << '\n';
  }
  return exit_code;
}

}  // namespace ttr::cli
