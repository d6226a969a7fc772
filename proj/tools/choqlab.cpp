// choqlab: evaluate discrete extensions of set functions, check the
// additivity axioms that characterize them, and decompose vectors the
// way those axioms do.
//
// Exit codes: 0 success / axiom passed, 1 axiom failed, 2 parse or
// usage error, 3 dimension mismatch, 4 domain or sampler mismatch,
// 5 invalid cut.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "choqlab/axioms.hpp"
#include "choqlab/builtins.hpp"
#include "choqlab/errors.hpp"
#include "choqlab/json_io.hpp"
#include "choqlab/lovasz.hpp"
#include "choqlab/oracle.hpp"
#include "choqlab/rng.hpp"
#include "choqlab/setfn.hpp"

namespace {

using choqlab::Json;
using choqlab::Vec;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitDomain = 4;
constexpr int kExitCut = 5;

std::uint64_t fnv1a(std::string_view text, std::uint64_t h) {
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Tracks everything fed into a command so the report can carry one
// digest of the inputs; elapsed time never enters it.
struct ReportBuilder {
  Json report;
  std::uint64_t digest = 1469598103934665603ULL;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  explicit ReportBuilder(const std::vector<std::string>& argv) {
    report["schema"] = "choqlab/run-report/v1";
    report["command"] = argv;
  }

  void ingest(std::string_view text) { digest = fnv1a(text, digest); }

  void finish(std::uint64_t seed, Json results) {
    report["inputs_digest"] = hex64(digest);
    report["seed"] = seed;
    report["results"] = std::move(results);
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              started)
            .count();
    std::cout << report.dump(2) << "\n";
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw choqlab::ValueError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A positional that may be an inline JSON literal or a file path
// ("-" reads stdin).
Json load_json_argument(const std::string& arg, ReportBuilder& rb) {
  const bool looks_inline = !arg.empty() && (arg.front() == '[' || arg.front() == '{');
  const std::string text = looks_inline ? arg : read_input(arg);
  rb.ingest(text);
  return choqlab::parse_json_text(text, looks_inline ? "inline argument" : arg);
}

struct Target {
  std::string label;
  int n = 0;
  choqlab::RealFn fn;
  std::optional<choqlab::LoadedExtension> extension;
};

Target load_target(const std::string& arg, ReportBuilder& rb) {
  Target t;
  if (arg.rfind("builtin:", 0) == 0) {
    const std::string name = arg.substr(8);
    const choqlab::Builtin* b = choqlab::find_builtin(name);
    if (b == nullptr) {
      std::string known;
      for (const auto& entry : choqlab::builtins()) {
        known += known.empty() ? entry.name : ", " + entry.name;
      }
      throw choqlab::ValueError("unknown builtin \"" + name + "\" (have: " + known + ")");
    }
    rb.ingest(arg);
    t.label = arg;
    t.n = b->n;
    t.fn = b->fn;
    return t;
  }
  t.extension = choqlab::extension_from_json(load_json_argument(arg, rb));
  t.label = t.extension->type;
  t.n = t.extension->n;
  t.fn = t.extension->fn;
  return t;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CHOQLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw choqlab::ValueError("CHOQLAB_SEED is not an unsigned integer");
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_eval(const std::vector<std::string>& argv, const std::string& extension_arg,
             const std::string& vectors_arg, bool dual, bool telescoping) {
  ReportBuilder rb(argv);
  const choqlab::LoadedExtension ext = choqlab::extension_from_json(
      load_json_argument(extension_arg, rb));
  const std::vector<Vec> vectors = choqlab::vectors_from_json(load_json_argument(vectors_arg, rb));

  if (dual && ext.type != "lovasz") {
    throw choqlab::ValueError("--dual applies to type lovasz only");
  }
  if (telescoping && ext.type != "symmetric") {
    throw choqlab::ValueError("--symmetric-telescoping applies to type symmetric only");
  }

  Json rows = Json::array();
  double max_discrepancy = 0.0;
  for (const Vec& x : vectors) {
    Json row;
    row["x"] = x;
    double primary = 0.0;
    double alt = 0.0;
    bool has_alt = false;
    if (ext.lovasz) {
      primary = choqlab::eval_lovasz(*ext.lovasz, x);
      if (dual) {
        alt = choqlab::eval_lovasz_dual(*ext.lovasz, x);
        has_alt = true;
        row["value"] = primary;
        row["dual"] = alt;
      }
    } else if (ext.symmetric) {
      primary = choqlab::eval_symmetric(*ext.symmetric, x);
      if (telescoping) {
        alt = choqlab::eval_symmetric_telescoping(*ext.symmetric, x);
        has_alt = true;
        row["value"] = primary;
        row["telescoping"] = alt;
      }
    } else {
      primary = choqlab::eval_median_additive(*ext.median, x);
    }
    if (!row.contains("value")) row["value"] = primary;
    if (has_alt) {
      const double gap = std::fabs(primary - alt);
      row["discrepancy"] = gap;
      max_discrepancy = std::max(max_discrepancy, gap);
    }
    rows.push_back(std::move(row));
  }

  Json results;
  results["type"] = ext.type;
  results["n"] = ext.n;
  results["evaluations"] = std::move(rows);
  if (dual || telescoping) results["max_discrepancy"] = max_discrepancy;
  rb.finish(0, std::move(results));
  return kExitPass;
}

int cmd_check(const std::vector<std::string>& argv, const std::string& target_arg,
              const std::string& axiom_name, const std::string& domain_text,
              std::uint64_t trials, std::uint64_t seed, double tol_abs, double tol_rel, int jobs,
              bool positive_only) {
  ReportBuilder rb(argv);
  const Target target = load_target(target_arg, rb);

  const std::optional<choqlab::Axiom> axiom = choqlab::axiom_from_name(axiom_name);
  if (!axiom) {
    throw choqlab::ValueError("unknown axiom \"" + axiom_name +
                              "\" (see `choqlab check --help` for the list)");
  }
  if (positive_only && *axiom != choqlab::Axiom::homogeneity) {
    throw choqlab::ValueError("--positive-only applies to --axiom homogeneity only");
  }

  choqlab::CheckConfig cfg;
  cfg.domain = choqlab::domain_from_string(domain_text);
  cfg.trials = trials;
  cfg.tolerance = choqlab::Tolerance{tol_abs, tol_rel};
  cfg.seed = seed;
  cfg.jobs = jobs;

  Json results;
  results["target"] = target.label;
  results["axiom"] = axiom_name;
  results["domain"] = choqlab::to_json(cfg.domain);
  results["trials_requested"] = trials;
  results["tolerance"] = Json{{"abs", tol_abs}, {"rel", tol_rel}};

  choqlab::Verdict verdict;
  if (*axiom == choqlab::Axiom::diagonal) {
    const choqlab::DiagonalReport report =
        choqlab::check_diagonal_sections(target.fn, target.n, cfg);
    verdict = report.overall;
    results["diagonal"] = choqlab::to_json(report);
  } else if (*axiom == choqlab::Axiom::homogeneity) {
    verdict = choqlab::check_homogeneity(target.fn, target.n, cfg, positive_only);
    results["positive_only"] = positive_only;
  } else {
    verdict = choqlab::check_axiom(target.fn, target.n, *axiom, cfg);
  }
  results["verdict"] = choqlab::to_json(verdict);

  std::cerr << "axiom " << axiom_name << " on " << target.label << ": "
            << (verdict.passed ? "passed" : "FAILED") << " after " << verdict.trials
            << " instances\n";
  rb.finish(seed, std::move(results));
  return verdict.passed ? kExitPass : kExitFail;
}

int cmd_decompose(const std::vector<std::string>& argv, const std::string& vector_arg, double cut,
                  const std::string& mode) {
  ReportBuilder rb(argv);
  const std::vector<Vec> vectors = choqlab::vectors_from_json(load_json_argument(vector_arg, rb));
  if (vectors.size() != 1) throw choqlab::ValueError("decompose expects exactly one vector");
  const Vec& x = vectors.front();

  if (!std::isfinite(cut)) throw choqlab::NegativeCutError("cut level must be finite");

  Json parts;
  std::vector<Vec> pieces;
  if (mode == "min") {
    pieces = {choqlab::meet_scalar(x, cut), choqlab::cut_above(x, cut)};
    parts["meet"] = pieces[0];
    parts["above"] = pieces[1];
  } else if (mode == "max") {
    pieces = {choqlab::join_scalar(x, cut), choqlab::cut_below(x, cut)};
    parts["join"] = pieces[0];
    parts["below"] = pieces[1];
  } else if (mode == "median") {
    // med_clamp rejects negative cuts with NegativeCutError (exit 5).
    pieces = {choqlab::med_clamp(x, cut), choqlab::cut_above(x, cut),
              choqlab::cut_below(x, -cut)};
    parts["middle"] = pieces[0];
    parts["above"] = pieces[1];
    parts["below"] = pieces[2];
  } else {
    throw choqlab::ValueError("mode must be min, max or median");
  }

  Vec residual = x;
  for (const Vec& piece : pieces) {
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= piece[i];
  }
  double residual_max = 0.0;
  for (double v : residual) residual_max = std::max(residual_max, std::fabs(v));

  Json results;
  results["x"] = x;
  results["cut"] = cut;
  results["mode"] = mode;
  results["parts"] = std::move(parts);
  results["residual"] = residual;
  results["residual_max_abs"] = residual_max;
  if (pieces.size() == 2) {
    results["parts_comonotonic"] = choqlab::are_comonotonic(pieces[0], pieces[1]);
  }
  rb.finish(0, std::move(results));
  return kExitPass;
}

int cmd_gen(const std::vector<std::string>& argv, int n, std::uint64_t seed,
            const std::string& kind_name, const std::string& out_path) {
  ReportBuilder rb(argv);
  choqlab::SetFunctionKind kind;
  if (kind_name == "general") {
    kind = choqlab::SetFunctionKind::general;
  } else if (kind_name == "capacity") {
    kind = choqlab::SetFunctionKind::capacity;
  } else if (kind_name == "capacity_normalized") {
    kind = choqlab::SetFunctionKind::capacity_normalized;
  } else {
    throw choqlab::ValueError("kind must be general, capacity or capacity_normalized");
  }
  rb.ingest("gen:" + std::to_string(n) + ":" + std::to_string(seed) + ":" + kind_name);

  const choqlab::SetFunction phi = choqlab::random_set_function(n, seed, kind);
  const Json body = choqlab::to_json(phi);

  Json results;
  results["n"] = n;
  results["kind"] = kind_name;
  results["is_capacity"] = choqlab::is_capacity(phi);
  if (out_path.empty()) {
    results["set_function"] = body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw choqlab::ValueError("cannot write " + out_path);
    out << body.dump(2) << "\n";
    results["written_to"] = out_path;
  }
  rb.finish(seed, std::move(results));
  return kExitPass;
}

int cmd_compare(const std::vector<std::string>& argv, const std::string& file_a,
                const std::string& file_b, std::uint64_t samples, std::uint64_t seed) {
  ReportBuilder rb(argv);
  const choqlab::LoadedExtension a =
      choqlab::extension_from_json(load_json_argument(file_a, rb));
  const choqlab::LoadedExtension b =
      choqlab::extension_from_json(load_json_argument(file_b, rb));
  if (a.n != b.n) throw choqlab::DimensionError("extensions have different arity");

  // Deterministic sample sweep over the standard window, plus the
  // +/-1 lattice corners so sign behavior is always probed.
  double max_gap = 0.0;
  Vec argmax(std::size_t(a.n), 0.0);
  const auto probe = [&](const Vec& x) {
    const double gap = std::fabs(a.fn(x) - b.fn(x));
    if (gap > max_gap) {
      max_gap = gap;
      argmax = x;
    }
  };
  if (a.n <= 10) {
    Vec corner(std::size_t(a.n));
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << a.n); ++mask) {
      for (int i = 0; i < a.n; ++i) corner[i] = (mask >> i) & 1u ? 1.0 : -1.0;
      probe(corner);
    }
  }
  for (std::uint64_t t = 0; t < samples; ++t) {
    choqlab::Rng rng(choqlab::Rng::mix(seed, t + 1));
    Vec x(std::size_t(a.n));
    for (double& v : x) v = rng.uniform(-5.0, 5.0);
    probe(x);
  }

  choqlab::CheckConfig cfg;
  cfg.trials = samples;
  cfg.seed = seed;
  const choqlab::Verdict oddness =
      choqlab::check_oddness_positive_orthant(a.fn, a.n, cfg);

  Json results;
  results["type_a"] = a.type;
  results["type_b"] = b.type;
  results["samples"] = samples;
  results["max_gap"] = max_gap;
  results["max_gap_hex"] = choqlab::hex_double(max_gap);
  results["argmax_x"] = argmax;
  results["agree"] = max_gap <= 1e-9;
  results["oddness"] = choqlab::to_json(oddness);
  std::cerr << "max gap " << max_gap << "; oddness "
            << (oddness.passed ? "passed" : "FAILED") << "\n";
  rb.finish(seed, std::move(results));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> argv_echo(argv, argv + argc);

  CLI::App app{"discrete extensions of set functions: evaluate, check axioms, decompose"};
  app.require_subcommand(1);

  std::string extension_arg, vectors_arg;
  bool flag_dual = false, flag_tele = false;
  CLI::App* eval = app.add_subcommand("eval", "evaluate an extension at one or more vectors");
  eval->add_option("extension", extension_arg, "extension file, inline JSON, or -")->required();
  eval->add_option("vectors", vectors_arg, "vector(s) file, inline JSON, or -")->required();
  eval->add_flag("--dual", flag_dual, "also evaluate the descending-chain form (type lovasz)");
  eval->add_flag("--symmetric-telescoping", flag_tele,
                 "also evaluate the split telescoping form (type symmetric)");

  std::string target_arg, axiom_arg, domain_arg = "full_line";
  std::uint64_t trials = 10000, seed = 0;
  double tol_abs = 1e-9, tol_rel = 1e-9;
  int jobs = 1;
  bool positive_only = false;
  CLI::App* check = app.add_subcommand("check", "check one additivity axiom by sweep + sampling");
  check->add_option("target", target_arg, "extension file, inline JSON, - or builtin:NAME")
      ->required();
  check->add_option("--axiom", axiom_arg,
                    "comonotonic|hmin|hmax|hmedian|pos-comonotonic|neg-comonotonic|"
                    "pos-hmin|neg-hmax|splitting|diagonal|homogeneity|oddness-pos")
      ->required();
  check->add_option("--domain", domain_arg, "full_line|nonneg|nonpos|centered:A|box:LO:HI");
  check->add_option("--trials", trials, "random trials after the deterministic sweep");
  check->add_option("--seed", seed, "RNG seed (falls back to CHOQLAB_SEED, then 0)");
  check->add_option("--tol-abs", tol_abs, "absolute tolerance");
  check->add_option("--tol-rel", tol_rel, "relative tolerance");
  check->add_option("--jobs", jobs, "worker threads (result independent of this)");
  check->add_flag("--positive-only", positive_only, "homogeneity over c > 0 only");

  std::string vector_arg, mode_arg;
  double cut = 0.0;
  CLI::App* decompose = app.add_subcommand("decompose", "split a vector by a cut level");
  decompose->add_option("vector", vector_arg, "vector file, inline JSON, or -")->required();
  decompose->add_option("--cut", cut, "cut level c")->required();
  decompose->add_option("--mode", mode_arg, "min|max|median")->required();

  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_kind = "capacity", gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random set function");
  gen->add_option("n", gen_n, "arity (1..16)")->required();
  gen->add_option("--seed", gen_seed, "RNG seed (falls back to CHOQLAB_SEED, then 0)");
  gen->add_option("--kind", gen_kind, "general|capacity|capacity_normalized");
  gen->add_option("-o,--out", gen_out, "write the set function JSON here");

  std::string cmp_a, cmp_b;
  std::uint64_t cmp_samples = 10000, cmp_seed = 0;
  CLI::App* compare = app.add_subcommand("compare", "max |A-B| over samples plus oddness of A");
  compare->add_option("a", cmp_a, "first extension file")->required();
  compare->add_option("b", cmp_b, "second extension file")->required();
  compare->add_option("--samples", cmp_samples, "sample count");
  compare->add_option("--seed", cmp_seed, "RNG seed (falls back to CHOQLAB_SEED, then 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    app.exit(e);
    return kExitParse;
  }

  try {
    if (eval->parsed()) {
      return cmd_eval(argv_echo, extension_arg, vectors_arg, flag_dual, flag_tele);
    }
    if (check->parsed()) {
      if (!check->count("--seed")) seed = default_seed();
      return cmd_check(argv_echo, target_arg, axiom_arg, domain_arg, trials, seed, tol_abs,
                       tol_rel, jobs, positive_only);
    }
    if (decompose->parsed()) {
      return cmd_decompose(argv_echo, vector_arg, cut, mode_arg);
    }
    if (gen->parsed()) {
      if (!gen->count("--seed")) gen_seed = default_seed();
      return cmd_gen(argv_echo, gen_n, gen_seed, gen_kind, gen_out);
    }
    if (compare->parsed()) {
      if (!compare->count("--seed")) cmp_seed = default_seed();
      return cmd_compare(argv_echo, cmp_a, cmp_b, cmp_samples, cmp_seed);
    }
  } catch (const choqlab::NegativeCutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCut;
  } catch (const choqlab::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const choqlab::DomainKindError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const choqlab::SamplerExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
