// krep: command-line front end over the libkrep C API.
//
// Exit status: 0 success, 1 invalid configuration or input, 2 verification
// failed, 3 retries exhausted or search caps exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <type_traits>

#include "CLI11.hpp"
#include "krep/krep.h"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitExhausted = 3;

struct CliFailure {
  int code;
};

int exit_code_for(krep_status status) {
  switch (status) {
    case KREP_OK: return 0;
    case KREP_ERR_RETRIES_EXHAUSTED:
    case KREP_ERR_CAP_EXCEEDED: return kExitExhausted;
    default: return kExitInvalid;
  }
}

void check(krep_status status) {
  if (status == KREP_OK) return;
  std::cerr << "error: " << krep_status_name(status) << ": " << krep_last_error()
            << '\n';
  throw CliFailure{exit_code_for(status)};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr =
    std::unique_ptr<krep_hypergraph, Deleter<krep_hypergraph, krep_hypergraph_free>>;
using DecompositionPtr =
    std::unique_ptr<krep_decomposition,
                    Deleter<krep_decomposition, krep_decomposition_free>>;
using RepPtr = std::unique_ptr<krep_representation,
                               Deleter<krep_representation, krep_representation_free>>;
using ReportPtr = std::unique_ptr<krep_report, Deleter<krep_report, krep_report_free>>;
using OraclePtr =
    std::unique_ptr<krep_oracle_result, Deleter<krep_oracle_result, krep_oracle_free>>;
using BoundsPtr =
    std::unique_ptr<krep_count_report, Deleter<krep_count_report, krep_bounds_free>>;
using TextPtr = std::unique_ptr<char, Deleter<char, krep_string_free>>;

std::string take(char* text) { return TextPtr(text).get(); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    throw CliFailure{kExitInvalid};
  }
}

void config(const std::string& key, const std::string& value) {
  std::cout << "# CONFIG " << key << ' ' << value << '\n';
}
void config(const std::string& key, const char* value) {
  config(key, std::string(value));
}
template <class T>
  requires std::is_arithmetic_v<T>
void config(const std::string& key, T value) {
  config(key, std::to_string(value));
}

GraphPtr load_graph(const std::string& path) {
  krep_hypergraph* raw = nullptr;
  check(krep_hypergraph_read(path.c_str(), &raw));
  return GraphPtr(raw);
}

struct GenArgs {
  std::string model = "union";
  uint32_t n = 0, r = 3, delta = 1;
  uint64_t seed = 1, max_rejections = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  config("subcommand", "gen");
  config("model", a.model);
  config("n", a.n);
  config("r", a.r);
  config("delta", a.delta);
  config("seed", a.seed);
  config("maxRejections", a.max_rejections == 0 ? std::string("default")
                                                : std::to_string(a.max_rejections));
  config("out", a.out.empty() ? "-" : a.out);
  krep_hypergraph* raw = nullptr;
  if (a.model == "union")
    check(krep_gen_union_of_matchings(a.n, a.r, a.delta, a.seed, &raw));
  else
    check(krep_gen_random_linear(a.n, a.r, a.delta, a.seed, a.max_rejections, &raw));
  GraphPtr graph(raw);
  char* text = nullptr;
  check(krep_hypergraph_to_string(graph.get(), &text));
  const std::string hg = take(text);
  if (a.out.empty()) {
    std::cout << hg;
  } else {
    write_text(a.out, hg);
    std::cout << "RESULT edges " << krep_hypergraph_num_edges(graph.get()) << '\n'
              << "RESULT maxDegree " << krep_hypergraph_max_degree(graph.get())
              << '\n'
              << "RESULT linear " << krep_hypergraph_is_linear(graph.get()) << '\n';
  }
  return 0;
}

struct DecomposeArgs {
  std::string in, out;
};

int run_decompose(const DecomposeArgs& a) {
  config("subcommand", "decompose");
  config("in", a.in);
  config("out", a.out.empty() ? "-" : a.out);
  GraphPtr graph = load_graph(a.in);
  krep_decomposition* raw = nullptr;
  check(krep_decompose(graph.get(), &raw));
  DecompositionPtr decomposition(raw);
  int valid = 0;
  check(krep_decomposition_verify(graph.get(), decomposition.get(), &valid));
  std::cout << "RESULT L " << krep_decomposition_size(decomposition.get()) << '\n'
            << "RESULT maxDegree " << krep_hypergraph_max_degree(graph.get()) << '\n'
            << "RESULT valid " << valid << '\n';
  if (!a.out.empty()) {
    char* text = nullptr;
    check(krep_decomposition_to_string(decomposition.get(), &text));
    write_text(a.out, take(text));
  }
  return valid ? 0 : kExitVerifyFailed;
}

struct RepresentArgs {
  std::string in, out, mode = "general";
  uint64_t seed = 1;
  krep_build_options options = krep_build_options_default();
};

int run_represent(const RepresentArgs& a) {
  config("subcommand", "represent");
  config("in", a.in);
  config("out", a.out);
  config("mode", a.mode);
  config("seed", a.seed);
  config("maxFamilyRetries", a.options.max_family_retries);
  config("maxBuildRetries", a.options.max_build_retries);
  char scale[32];
  std::snprintf(scale, sizeof scale, "%.17g", a.options.constant_scale);
  config("constantScale", std::string(scale));
  config("threads", a.options.threads);
  GraphPtr graph = load_graph(a.in);
  const krep_mode mode = a.mode == "linear" ? KREP_MODE_LINEAR : KREP_MODE_GENERAL;
  krep_representation* raw = nullptr;
  check(krep_build(graph.get(), mode, a.seed, &a.options, &raw));
  RepPtr rep(raw);
  check(krep_representation_write(rep.get(), a.out.c_str()));
  std::cout << "RESULT L " << krep_representation_matching_count(rep.get()) << '\n'
            << "RESULT k " << krep_representation_k(rep.get()) << '\n'
            << "RESULT groundSize " << krep_representation_ground_size(rep.get())
            << '\n'
            << "RESULT verified 1\n";
  if (a.options.constant_scale == 1.0) {
    int within = 0;
    check(krep_check_size_against_bound(rep.get(), graph.get(), &within));
    std::cout << "RESULT withinSizeBound " << within << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string graph, rep;
  uint64_t samples = 0, sample_seed = 1;
  unsigned threads = 1;
};

int run_verify(const VerifyArgs& a) {
  config("subcommand", "verify");
  config("graph", a.graph);
  config("rep", a.rep);
  config("samples", a.samples == 0 ? std::string("exhaustive")
                                   : std::to_string(a.samples));
  config("sampleSeed", a.sample_seed);
  config("threads", a.threads);
  GraphPtr graph = load_graph(a.graph);
  krep_representation* raw_rep = nullptr;
  check(krep_representation_read(a.rep.c_str(), &raw_rep));
  RepPtr rep(raw_rep);
  krep_report* raw = nullptr;
  if (a.samples == 0)
    check(krep_verify(graph.get(), rep.get(), a.threads, &raw));
  else
    check(krep_sampled_verify(graph.get(), rep.get(), a.samples, a.sample_seed, &raw));
  ReportPtr report(raw);
  char* text = nullptr;
  check(krep_report_to_string(report.get(), &text));
  std::cout << take(text);
  return krep_report_valid(report.get()) ? 0 : kExitVerifyFailed;
}

struct ExactArgs {
  std::string in;
  uint64_t k = 0;
  bool tilde = false;
  uint32_t max_t = 8, max_n = 8;
};

int run_exact(const ExactArgs& a) {
  config("subcommand", "exact");
  config("in", a.in);
  config("target", a.tilde ? std::string("tilde") : "k=" + std::to_string(a.k));
  config("maxT", a.max_t);
  config("maxN", a.max_n);
  GraphPtr graph = load_graph(a.in);
  krep_oracle_result* raw = nullptr;
  check(krep_exact(graph.get(), a.tilde ? 0 : a.k, a.max_t, a.max_n, &raw));
  OraclePtr result(raw);
  char* text = nullptr;
  check(krep_oracle_to_string(result.get(), krep_hypergraph_num_vertices(graph.get()),
                              &text));
  std::cout << take(text);
  return 0;
}

struct BoundsArgs {
  uint64_t n = 0, r = 3, delta = 1, max_n = 100000;
  bool scan = false;
  std::string csv;
};

int run_bounds(const BoundsArgs& a) {
  config("subcommand", "bounds");
  config("n", a.n);
  config("r", a.r);
  config("delta", a.delta);
  config("scan", a.scan ? 1 : 0);
  if (a.scan) config("scanMaxN", a.max_n);
  config("csv", a.csv.empty() ? "-" : a.csv);
  krep_count_report* raw = nullptr;
  check(krep_bounds(a.n, a.r, a.delta, &raw));
  BoundsPtr report(raw);
  char* text = nullptr;
  check(krep_bounds_to_string(report.get(), &text));
  std::cout << take(text);
  if (!a.csv.empty()) {
    check(krep_bounds_to_csv(report.get(), 1, &text));
    write_text(a.csv, take(text));
  }
  if (a.scan) {
    uint64_t first = 0, intermediate = 0, regression = 0;
    check(krep_bounds_scan(a.r, a.delta, a.max_n, &first, &intermediate, &regression));
    auto show = [](uint64_t v) { return v ? std::to_string(v) : std::string("none"); };
    std::cout << "BOUND scanFirstArgumentN      " << show(first) << '\n'
              << "BOUND scanFirstIntermediateN  " << show(intermediate) << '\n'
              << "BOUND scanRegressionN         " << show(regression) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, verify and bound k-representations of r-uniform hypergraphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random hypergraph (.hg)");
  gen_cmd->add_option("--model", gen.model, "union | linear")
      ->check(CLI::IsMember({"union", "linear"}))
      ->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--r", gen.r, "Uniformity")->capture_default_str();
  gen_cmd->add_option("--delta", gen.delta, "Degree cap / number of matchings")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--max-rejections", gen.max_rejections,
                      "Linear model: consecutive rejections before stopping "
                      "(0 = 50*n*delta)");
  gen_cmd->add_option("--out", gen.out, "Output .hg path (stdout if omitted)");

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Greedy matching decomposition");
  dec_cmd->add_option("--in", dec.in, "Input .hg")->required();
  dec_cmd->add_option("--out", dec.out, "Output .dec path");

  RepresentArgs rep;
  auto* rep_cmd = app.add_subcommand("represent", "Build a verified k-representation");
  rep_cmd->add_option("--in", rep.in, "Input .hg")->required();
  rep_cmd->add_option("--out", rep.out, "Output .rep")->required();
  rep_cmd->add_option("--mode", rep.mode, "general | linear")
      ->check(CLI::IsMember({"general", "linear"}))
      ->capture_default_str();
  rep_cmd->add_option("--seed", rep.seed)->capture_default_str();
  rep_cmd->add_option("--max-family-retries", rep.options.max_family_retries)
      ->capture_default_str();
  rep_cmd->add_option("--max-build-retries", rep.options.max_build_retries)
      ->capture_default_str();
  rep_cmd->add_option("--scale", rep.options.constant_scale,
                      "Multiplier on the segment size t")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rep_cmd->add_option("--threads", rep.options.threads)->capture_default_str();

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check a .rep against a .hg");
  ver_cmd->add_option("--graph", ver.graph, "Input .hg")->required();
  ver_cmd->add_option("--rep", ver.rep, "Input .rep")->required();
  ver_cmd->add_option("--samples", ver.samples,
                      "Check all edges plus this many random non-edges");
  ver_cmd->add_option("--sample-seed", ver.sample_seed)->capture_default_str();
  ver_cmd->add_option("--threads", ver.threads)->capture_default_str();

  ExactArgs ex;
  auto* ex_cmd = app.add_subcommand("exact", "Exact theta_k or theta-tilde by search");
  ex_cmd->add_option("--in", ex.in, "Input .hg")->required();
  auto* k_opt = ex_cmd->add_option("--k", ex.k, "Threshold k")->check(CLI::PositiveNumber);
  auto* tilde_opt = ex_cmd->add_flag("--tilde", ex.tilde, "Minimize over k");
  k_opt->excludes(tilde_opt);
  ex_cmd->add_option("--max-t", ex.max_t)->capture_default_str();
  ex_cmd->add_option("--max-n", ex.max_n)->capture_default_str();

  BoundsArgs bd;
  auto* bd_cmd = app.add_subcommand("bounds", "Counting lower-bound report");
  bd_cmd->add_option("--n", bd.n)->required();
  bd_cmd->add_option("--r", bd.r)->capture_default_str();
  bd_cmd->add_option("--delta", bd.delta)->capture_default_str();
  bd_cmd->add_flag("--scan", bd.scan, "Also scan n for the first point the argument holds");
  bd_cmd->add_option("--scan-max-n", bd.max_n)->capture_default_str();
  bd_cmd->add_option("--csv", bd.csv, "Write the report as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*dec_cmd) return run_decompose(dec);
    if (*rep_cmd) return run_represent(rep);
    if (*ver_cmd) return run_verify(ver);
    if (*ex_cmd) {
      if (!ex.tilde && ex.k == 0) {
        std::cerr << "error: exact needs --k <k> or --tilde\n";
        return kExitInvalid;
      }
      return run_exact(ex);
    }
    if (*bd_cmd) return run_bounds(bd);
  } catch (const CliFailure& failure) {
    return failure.code;
  }
  return kExitInvalid;
}
