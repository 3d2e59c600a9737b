#include "flowcount/flowcount.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include <json.hpp>

#include "flowcount/chambers.hpp"
#include "flowcount/error.hpp"
#include "flowcount/network.hpp"
#include "flowcount/oracle.hpp"
#include "flowcount/residue.hpp"

struct fc_network {
  flowcount::Network net;
};

struct fc_result {
  std::string value;
  bool json = false;
  long long sp_size = -1;
  double seconds = 0;
};

namespace {

thread_local std::string last_error;

using Clock = std::chrono::steady_clock;

template <typename F>
fc_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return FC_OK;
  } catch (const flowcount::InputError& e) {
    last_error = e.what();
    return FC_ERR_VALIDATION;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FC_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return FC_ERR_INTERNAL;
  }
}

fc_status missing(const char* what) {
  last_error = std::string("null argument: ") + what;
  return FC_ERR_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

flowcount::ResidueOptions residue_options(const fc_options* options) {
  flowcount::ResidueOptions out;
  if (options) out.workers = options->workers;
  return out;
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
fc_status compute(const fc_network* net, fc_result** out, F&& f) {
  if (!net) return missing("network");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    auto start = Clock::now();
    auto result = std::make_unique<fc_result>();
    f(*result);
    result->seconds = elapsed(start);
    *out = result.release();
  });
}

flowcount::IntVector parse_vector(const char* const* values, std::size_t n) {
  flowcount::IntVector out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!values[i]) throw flowcount::InputError("null entry in integer vector");
    out.push_back(flowcount::parse_integer(values[i]));
  }
  return out;
}

}  // namespace

extern "C" {

fc_status fc_network_from_json(const char* json, fc_network** out) {
  if (!json) return missing("json");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] { *out = new fc_network{flowcount::network_from_json(json)}; });
}

void fc_network_destroy(fc_network* net) { delete net; }

fc_status fc_network_to_json(const fc_network* net, char** out) {
  if (!net) return missing("network");
  if (!out) return missing("out");
  return guarded([&] { *out = duplicate(flowcount::network_to_json(net->net)); });
}

fc_status fc_network_validate(const fc_network* net, char** report) {
  if (!net) return missing("network");
  if (!report) return missing("report");
  return guarded([&] {
    const auto d = flowcount::validate(net->net);
    nlohmann::json j{{"zero_sum", d.zero_sum},
                     {"excess_sum", flowcount::to_string(d.excess_sum)},
                     {"connected", d.connected},
                     {"cyclic", d.cyclic},
                     {"capacitated", d.capacitated},
                     {"messages", d.messages}};
    *report = duplicate(j.dump());
  });
}

fc_status fc_count(const fc_network* net, const fc_options* options, fc_result** out) {
  return compute(net, out, [&](fc_result& r) {
    auto e = flowcount::count_network(net->net, residue_options(options));
    r.value = flowcount::to_string(e.value);
    r.sp_size = static_cast<long long>(e.sp_size);
  });
}

fc_status fc_volume(const fc_network* net, const fc_options* options, fc_result** out) {
  return compute(net, out, [&](fc_result& r) {
    auto e = flowcount::volume_network(net->net, residue_options(options));
    r.value = flowcount::to_string(e.value);
    r.sp_size = static_cast<long long>(e.sp_size);
  });
}

fc_status fc_polynomial(const fc_network* net, const fc_options* options, fc_result** out) {
  return compute(net, out, [&](fc_result& r) {
    auto e = flowcount::polynomial_network(net->net, residue_options(options));
    r.value = e.value.to_string();
    r.sp_size = static_cast<long long>(e.sp_size);
  });
}

fc_status fc_ehrhart(const fc_network* net, const fc_options* options, fc_result** out) {
  return compute(net, out, [&](fc_result& r) {
    auto e = flowcount::ehrhart_network(net->net, residue_options(options));
    r.value = e.value.to_string();
    r.sp_size = static_cast<long long>(e.sp_size);
  });
}

fc_status fc_kostant(const char* const* excess, size_t length, const fc_options* options, fc_result** out) {
  if (!excess && length > 0) return missing("excess");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    auto start = Clock::now();
    const auto a = parse_vector(excess, length);
    flowcount::BigInt sum = 0;
    for (const auto& x : a) sum += x;
    if (sgn(sum) != 0) throw flowcount::InputError("kostant: entries must sum to zero");
    auto e = flowcount::kostant_count(a, residue_options(options));
    auto result = std::make_unique<fc_result>();
    result->value = flowcount::to_string(e.value);
    result->sp_size = static_cast<long long>(e.sp_size);
    result->seconds = elapsed(start);
    *out = result.release();
  });
}

fc_status fc_transport(const char* const* rows, size_t row_count, const char* const* cols, size_t col_count,
                       const fc_options* options, fc_result** out) {
  if ((!rows && row_count > 0) || (!cols && col_count > 0)) return missing("margins");
  if (!out) return missing("out");
  *out = nullptr;
  return guarded([&] {
    auto start = Clock::now();
    const auto m = parse_vector(rows, row_count);
    const auto n = parse_vector(cols, col_count);
    auto e = flowcount::transportation_count(m, n, residue_options(options));
    auto result = std::make_unique<fc_result>();
    result->value = flowcount::to_string(e.value);
    result->sp_size = static_cast<long long>(e.sp_size);
    result->seconds = elapsed(start);
    *out = result.release();
  });
}

fc_status fc_reduce(const fc_network* net, fc_result** out) {
  return compute(net, out, [&](fc_result& r) {
    const auto red = flowcount::reduce_to_acyclic(net->net);
    nlohmann::json map = nlohmann::json::array();
    for (const auto& img : red.arc_map) {
      map.push_back({{"forward", img.forward},
                     {"backward", img.backward ? nlohmann::json(*img.backward) : nlohmann::json(nullptr)}});
    }
    nlohmann::json j{{"network", nlohmann::json::parse(flowcount::network_to_json(red.network))},
                     {"arc_map", std::move(map)}};
    r.value = j.dump();
    r.json = true;
  });
}

fc_status fc_chambers(const fc_network* net, fc_result** out) {
  return compute(net, out, [&](fc_result& r) {
    const auto e = flowcount::embed(net->net);
    if (e.config.rank == 0) throw flowcount::InputError("chambers: network needs at least two nodes");
    flowcount::ChamberComplex complex(flowcount::positive_roots(e.config));
    r.value = flowcount::chambers_to_json(complex, complex.enumerate());
    r.json = true;
  });
}

fc_status fc_oracle_count(const fc_network* net, fc_result** out) {
  return compute(net, out, [&](fc_result& r) { r.value = flowcount::to_string(flowcount::brute_count(net->net)); });
}

fc_status fc_oracle_enumerate(const fc_network* net, size_t limit, fc_result** out) {
  return compute(net, out, [&](fc_result& r) {
    const auto en = flowcount::brute_enumerate(net->net, limit);
    nlohmann::json flows = nlohmann::json::array();
    for (const auto& f : en.flows) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& x : f) row.push_back(x.fits_slong_p() ? nlohmann::json(x.get_si()) : nlohmann::json(flowcount::to_string(x)));
      flows.push_back(std::move(row));
    }
    nlohmann::json j{{"flows", std::move(flows)}, {"truncated", en.truncated}, {"arc_order", en.processing_order}};
    r.value = j.dump();
    r.json = true;
  });
}

const char* fc_result_value(const fc_result* result) { return result ? result->value.c_str() : ""; }
int fc_result_is_json(const fc_result* result) { return result && result->json ? 1 : 0; }
long long fc_result_sp_size(const fc_result* result) { return result ? result->sp_size : -1; }
double fc_result_seconds(const fc_result* result) { return result ? result->seconds : 0.0; }
void fc_result_destroy(fc_result* result) { delete result; }

const char* fc_last_error(void) { return last_error.c_str(); }
void fc_string_free(char* s) { std::free(s); }
const char* fc_version(void) { return "1.0.0"; }

}  // extern "C"
