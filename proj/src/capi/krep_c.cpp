#include "krep/krep.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "krep/builder.hpp"
#include "krep/constants.hpp"
#include "krep/error.hpp"
#include "krep/hypergraph.hpp"
#include "krep/lower_bound.hpp"
#include "krep/matching.hpp"
#include "krep/oracle.hpp"
#include "krep/representation.hpp"
#include "krep/verifier.hpp"

struct krep_hypergraph {
  krep::Hypergraph value;
};
struct krep_decomposition {
  krep::MatchingDecomposition value;
};
struct krep_representation {
  krep::Representation value;
};
struct krep_report {
  krep::VerificationReport value;
};
struct krep_oracle_result {
  krep::OracleResult value;
};
struct krep_count_report {
  krep::CountReport value;
};

namespace {

thread_local std::string last_error;

krep_status to_status(krep::ErrorCode code) {
  switch (code) {
    case krep::ErrorCode::kInvalidArgument: return KREP_ERR_INVALID_ARGUMENT;
    case krep::ErrorCode::kParse: return KREP_ERR_PARSE;
    case krep::ErrorCode::kIo: return KREP_ERR_IO;
    case krep::ErrorCode::kNotLinear: return KREP_ERR_NOT_LINEAR;
    case krep::ErrorCode::kRetriesExhausted: return KREP_ERR_RETRIES_EXHAUSTED;
    case krep::ErrorCode::kParameterUnderflow: return KREP_ERR_PARAMETER_UNDERFLOW;
    case krep::ErrorCode::kCapExceeded: return KREP_ERR_CAP_EXCEEDED;
  }
  return KREP_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
krep_status guarded(Body&& body) {
  try {
    body();
    return KREP_OK;
  } catch (const krep::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return KREP_ERR_INTERNAL;
}

void require(const void* pointer, const char* name) {
  if (pointer == nullptr)
    throw krep::Error(krep::ErrorCode::kInvalidArgument,
                      std::string(name) + " must not be null");
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* krep_last_error(void) { return last_error.c_str(); }

const char* krep_status_name(krep_status status) {
  switch (status) {
    case KREP_OK: return "OK";
    case KREP_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case KREP_ERR_PARSE: return "ParseError";
    case KREP_ERR_IO: return "IoError";
    case KREP_ERR_NOT_LINEAR: return "NotLinear";
    case KREP_ERR_RETRIES_EXHAUSTED: return "RetriesExhausted";
    case KREP_ERR_PARAMETER_UNDERFLOW: return "ParameterUnderflow";
    case KREP_ERR_CAP_EXCEEDED: return "CapExceeded";
    case KREP_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

void krep_string_free(char* text) { std::free(text); }

// --- hypergraphs -----------------------------------------------------------

krep_status krep_hypergraph_parse(const char* text, krep_hypergraph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new krep_hypergraph{krep::parse_hypergraph(std::string_view(text))};
  });
}

krep_status krep_hypergraph_read(const char* path, krep_hypergraph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new krep_hypergraph{krep::read_hypergraph_file(path)};
  });
}

krep_status krep_hypergraph_write(const krep_hypergraph* graph, const char* path) {
  return guarded([&] {
    require(graph, "graph");
    require(path, "path");
    krep::write_hypergraph_file(graph->value, path);
  });
}

krep_status krep_hypergraph_to_string(const krep_hypergraph* graph, char** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = copy_string(krep::format_hypergraph(graph->value));
  });
}

void krep_hypergraph_free(krep_hypergraph* graph) { delete graph; }

uint32_t krep_hypergraph_rank(const krep_hypergraph* graph) {
  return graph ? graph->value.rank() : 0;
}
uint32_t krep_hypergraph_num_vertices(const krep_hypergraph* graph) {
  return graph ? graph->value.num_vertices() : 0;
}
size_t krep_hypergraph_num_edges(const krep_hypergraph* graph) {
  return graph ? graph->value.num_edges() : 0;
}
uint32_t krep_hypergraph_max_degree(const krep_hypergraph* graph) {
  return graph ? krep::degree_profile(graph->value).max_degree : 0;
}
int krep_hypergraph_is_linear(const krep_hypergraph* graph) {
  return graph && krep::is_linear(graph->value) ? 1 : 0;
}

krep_status krep_gen_union_of_matchings(uint32_t n, uint32_t r, uint32_t delta,
                                        uint64_t seed, krep_hypergraph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new krep_hypergraph{krep::gen_union_of_matchings(n, r, delta, seed)};
  });
}

krep_status krep_gen_random_linear(uint32_t n, uint32_t r, uint32_t delta,
                                   uint64_t seed, uint64_t max_rejections,
                                   krep_hypergraph** out) {
  return guarded([&] {
    require(out, "out");
    std::optional<std::uint64_t> cap;
    if (max_rejections > 0) cap = max_rejections;
    *out = new krep_hypergraph{krep::gen_random_linear(n, r, delta, seed, cap)};
  });
}

// --- decompositions --------------------------------------------------------

krep_status krep_decompose(const krep_hypergraph* graph, krep_decomposition** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = new krep_decomposition{krep::decompose(graph->value)};
  });
}

uint32_t krep_decomposition_size(const krep_decomposition* decomposition) {
  return decomposition ? decomposition->value.size() : 0;
}

krep_status krep_decomposition_verify(const krep_hypergraph* graph,
                                      const krep_decomposition* decomposition,
                                      int* valid) {
  return guarded([&] {
    require(graph, "graph");
    require(decomposition, "decomposition");
    require(valid, "valid");
    *valid = krep::verify_decomposition(graph->value, decomposition->value) ? 1 : 0;
  });
}

krep_status krep_decomposition_to_string(const krep_decomposition* decomposition,
                                         char** out) {
  return guarded([&] {
    require(decomposition, "decomposition");
    require(out, "out");
    *out = copy_string(krep::format_decomposition(decomposition->value));
  });
}

void krep_decomposition_free(krep_decomposition* decomposition) {
  delete decomposition;
}

// --- representations -------------------------------------------------------

krep_build_options krep_build_options_default(void) {
  const krep::BuildOptions defaults;
  return {defaults.max_family_retries, defaults.max_build_retries,
          defaults.constant_scale, defaults.verify ? 1 : 0, defaults.threads};
}

krep_status krep_build(const krep_hypergraph* graph, krep_mode mode, uint64_t seed,
                       const krep_build_options* options,
                       krep_representation** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    if (mode != KREP_MODE_GENERAL && mode != KREP_MODE_LINEAR)
      throw krep::Error(krep::ErrorCode::kInvalidArgument, "unknown mode");
    const krep_build_options o = options ? *options : krep_build_options_default();
    krep::BuildOptions cpp;
    cpp.max_family_retries = o.max_family_retries;
    cpp.max_build_retries = o.max_build_retries;
    cpp.constant_scale = o.constant_scale;
    cpp.verify = o.verify != 0;
    cpp.threads = o.threads;
    const auto cpp_mode =
        mode == KREP_MODE_LINEAR ? krep::BuildMode::kLinear : krep::BuildMode::kGeneral;
    *out = new krep_representation{
        krep::build_representation(graph->value, cpp_mode, seed, cpp)};
  });
}

krep_status krep_representation_read(const char* path, krep_representation** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new krep_representation{krep::read_representation_file(path)};
  });
}

krep_status krep_representation_write(const krep_representation* rep,
                                      const char* path) {
  return guarded([&] {
    require(rep, "rep");
    require(path, "path");
    krep::write_representation_file(rep->value, path);
  });
}

krep_status krep_representation_to_string(const krep_representation* rep,
                                          char** out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    *out = copy_string(krep::format_representation(rep->value));
  });
}

void krep_representation_free(krep_representation* rep) { delete rep; }

uint64_t krep_representation_k(const krep_representation* rep) {
  return rep ? rep->value.k : 0;
}
uint64_t krep_representation_ground_size(const krep_representation* rep) {
  return rep ? rep->value.ground_size : 0;
}
uint32_t krep_representation_matching_count(const krep_representation* rep) {
  return rep ? rep->value.metadata.matching_count : 0;
}

krep_status krep_intersection_count(const krep_representation* rep,
                                    const uint32_t* tuple, size_t size,
                                    uint64_t* out) {
  return guarded([&] {
    require(rep, "rep");
    require(tuple, "tuple");
    require(out, "out");
    *out = krep::intersection_count(rep->value, {tuple, size});
  });
}

krep_status krep_check_size_against_bound(const krep_representation* rep,
                                          const krep_hypergraph* graph,
                                          int* within) {
  return guarded([&] {
    require(rep, "rep");
    require(graph, "graph");
    require(within, "within");
    *within = krep::check_size_against_bound(rep->value, graph->value) ? 1 : 0;
  });
}

// --- verification ----------------------------------------------------------

krep_status krep_verify(const krep_hypergraph* graph, const krep_representation* rep,
                        unsigned threads, krep_report** out) {
  return guarded([&] {
    require(graph, "graph");
    require(rep, "rep");
    require(out, "out");
    krep::VerifyOptions options;
    options.threads = threads;
    *out = new krep_report{
        krep::verify_representation(graph->value, rep->value, options)};
  });
}

krep_status krep_sampled_verify(const krep_hypergraph* graph,
                                const krep_representation* rep,
                                uint64_t sample_count, uint64_t seed,
                                krep_report** out) {
  return guarded([&] {
    require(graph, "graph");
    require(rep, "rep");
    require(out, "out");
    *out = new krep_report{
        krep::sampled_verify(graph->value, rep->value, sample_count, seed)};
  });
}

int krep_report_valid(const krep_report* report) {
  return report && report->value.valid ? 1 : 0;
}
int krep_report_exhaustive(const krep_report* report) {
  return report && report->value.exhaustive ? 1 : 0;
}
uint64_t krep_report_checked(const krep_report* report) {
  return report ? report->value.checked_tuples : 0;
}
uint64_t krep_report_violation_count(const krep_report* report) {
  return report ? report->value.violation_count : 0;
}

krep_status krep_report_to_string(const krep_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(krep::format_report(report->value));
  });
}

void krep_report_free(krep_report* report) { delete report; }

// --- exact search ----------------------------------------------------------

krep_status krep_exact(const krep_hypergraph* graph, uint64_t k, uint32_t max_t,
                       uint32_t max_vertices, krep_oracle_result** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    krep::OracleLimits limits;
    limits.max_t = max_t;
    limits.max_vertices = max_vertices;
    *out = new krep_oracle_result{
        k == 0 ? krep::theta_tilde_exact(graph->value, limits)
               : krep::theta_k_exact(graph->value, k, limits)};
  });
}

uint32_t krep_oracle_value(const krep_oracle_result* result) {
  return result ? result->value.value : 0;
}
uint64_t krep_oracle_witness_k(const krep_oracle_result* result) {
  return result ? result->value.witness_k : 0;
}

krep_status krep_oracle_to_string(const krep_oracle_result* result,
                                  uint32_t num_vertices, char** out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = copy_string(krep::format_oracle_result(result->value, num_vertices));
  });
}

void krep_oracle_free(krep_oracle_result* result) { delete result; }

// --- counting bound --------------------------------------------------------

krep_status krep_count_matchings(uint32_t n, uint32_t r, char** decimal) {
  return guarded([&] {
    require(decimal, "decimal");
    *decimal = copy_string(krep::count_almost_perfect_matchings_exact(n, r).str());
  });
}

krep_status krep_bounds(uint64_t n, uint64_t r, uint64_t delta,
                        krep_count_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = new krep_count_report{krep::verify_counting_argument(n, r, delta)};
  });
}

int krep_bounds_argument_holds(const krep_count_report* report) {
  return report && report->value.argument_holds ? 1 : 0;
}
double krep_bounds_threshold(const krep_count_report* report) {
  return report ? report->value.threshold : 0.0;
}

krep_status krep_bounds_to_string(const krep_count_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(krep::format_count_report(report->value));
  });
}

krep_status krep_bounds_to_csv(const krep_count_report* report, int header,
                               char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    std::string text = header ? krep::count_report_csv_header() : std::string();
    *out = copy_string(text + krep::count_report_csv_row(report->value));
  });
}

void krep_bounds_free(krep_count_report* report) { delete report; }

krep_status krep_bounds_scan(uint64_t r, uint64_t delta, uint64_t max_n,
                             uint64_t* first, uint64_t* first_intermediate,
                             uint64_t* regression) {
  return guarded([&] {
    require(first, "first");
    const auto scan = krep::scan_counting_argument(r, delta, max_n);
    *first = scan.first_argument.value_or(0);
    if (first_intermediate) *first_intermediate = scan.first_intermediate.value_or(0);
    if (regression) *regression = scan.argument_regression.value_or(0);
  });
}

}  // extern "C"
