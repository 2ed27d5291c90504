#include "occ/occ.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

#include "occ/config.hpp"
#include "occ/error.hpp"
#include "occ/harness.hpp"
#include "occ/report.hpp"

struct occ_instance {
  occ::LabeledInstance instance;
  std::string descriptor;
};

struct occ_config {
  occ::RunConfig config;
};

struct occ_report {
  occ::ExperimentReport report;
};

namespace {

thread_local std::string last_error;

// Maps the exception in flight to a status and records its message.
occ_status translate() {
  try {
    throw;
  } catch (const occ::ParseError& e) {
    last_error = e.what();
    return OCC_ERR_PARSE;
  } catch (const occ::CapacityError& e) {
    last_error = e.what();
    return OCC_ERR_CAPACITY;
  } catch (const occ::InvariantError& e) {
    last_error = e.what();
    return OCC_ERR_INVARIANT;
  } catch (const occ::InvalidArgument& e) {
    last_error = e.what();
    return OCC_ERR_INVALID_ARGUMENT;
  } catch (const std::filesystem::filesystem_error& e) {
    last_error = e.what();
    return OCC_ERR_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OCC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OCC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return OCC_ERR_INTERNAL;
  }
}

template <class Fn>
occ_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return OCC_OK;
  } catch (...) {
    return translate();
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw occ::InvalidArgument(std::string(what) + " must not be null");
}

occ::RunConfig config_or_default(const occ_config* config) {
  return config ? config->config : occ::parse_config("");
}

std::string file_descriptor(const std::string& path, const occ::LabeledInstance& inst) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(occ::instance_hash(inst)));
  return "file:" + path + " fnv1a64=" + hash;
}

}  // namespace

extern "C" {

const char* occ_last_error(void) { return last_error.c_str(); }

const char* occ_status_name(occ_status status) {
  switch (status) {
    case OCC_OK: return "ok";
    case OCC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OCC_ERR_PARSE: return "parse error";
    case OCC_ERR_CAPACITY: return "capacity exceeded";
    case OCC_ERR_INVARIANT: return "invariant violated";
    case OCC_ERR_IO: return "i/o error";
    case OCC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void occ_string_free(char* s) { std::free(s); }

occ_status occ_instance_generate(const char* name, const char* const* params, size_t param_count,
                                 uint64_t default_seed, occ_instance** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    std::map<std::string, std::string> kv;
    for (size_t i = 0; i < param_count; ++i) {
      require(params[i], "parameter");
      const std::string p = params[i];
      const auto eq = p.find('=');
      if (eq == std::string::npos || eq == 0)
        throw occ::InvalidArgument("parameter '" + p + "' is not key=value");
      kv[p.substr(0, eq)] = p.substr(eq + 1);
    }
    auto g = occ::generate(name, kv, default_seed);
    *out = new occ_instance{std::move(g.instance), std::move(g.descriptor)};
  });
}

occ_status occ_instance_parse(const char* text, size_t length, occ_instance** out) {
  return occ_instance_parse_named(text, length, "-", out);
}

occ_status occ_instance_parse_named(const char* text, size_t length, const char* source,
                                    occ_instance** out) {
  return guarded([&] {
    require(text, "text");
    require(source, "source");
    require(out, "out");
    auto inst = occ::read_instance({text, length});
    std::string descriptor = file_descriptor(source, inst);
    *out = new occ_instance{std::move(inst), std::move(descriptor)};
  });
}

occ_status occ_instance_read_file(const char* path, occ_instance** out) {
  try {
    last_error.clear();
    require(path, "path");
    require(out, "out");
    if (!std::filesystem::exists(path) || std::filesystem::is_directory(path)) {
      last_error = std::string("cannot open ") + path;
      return OCC_ERR_IO;
    }
    auto inst = occ::read_instance_file(path);
    std::string descriptor = file_descriptor(path, inst);
    *out = new occ_instance{std::move(inst), std::move(descriptor)};
    return OCC_OK;
  } catch (...) {
    return translate();
  }
}

occ_status occ_instance_write_file(const occ_instance* inst, const char* path) {
  try {
    last_error.clear();
    require(inst, "instance");
    require(path, "path");
    occ::write_instance_file(inst->instance, path);
    return OCC_OK;
  } catch (const occ::InvalidArgument& e) {
    last_error = e.what();
    return OCC_ERR_IO;
  } catch (...) {
    return translate();
  }
}

occ_status occ_instance_to_text(const occ_instance* inst, char** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    *out = copy_string(occ::write_instance(inst->instance));
  });
}

const char* occ_instance_descriptor(const occ_instance* inst) {
  return inst ? inst->descriptor.c_str() : "";
}

size_t occ_instance_size(const occ_instance* inst) { return inst ? inst->instance.size() : 0; }

size_t occ_instance_positive_count(const occ_instance* inst) {
  return inst ? inst->instance.positive_count() : 0;
}

occ_status occ_instance_sign(const occ_instance* inst, size_t i, size_t j, int* out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    const size_t n = inst->instance.size();
    if (i == 0 || j == 0 || i > n || j > n || i == j)
      throw occ::InvalidArgument("vertex pair out of range");
    *out = inst->instance.positive(static_cast<occ::Vertex>(i - 1), static_cast<occ::Vertex>(j - 1));
  });
}

void occ_instance_free(occ_instance* inst) { delete inst; }

occ_status occ_config_parse(const char* text, occ_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new occ_config{occ::parse_config(text ? text : "")};
  });
}

occ_status occ_config_read_file(const char* path, occ_config** out) {
  try {
    last_error.clear();
    require(path, "path");
    require(out, "out");
    if (!std::filesystem::exists(path) || std::filesystem::is_directory(path)) {
      last_error = std::string("cannot open ") + path;
      return OCC_ERR_IO;
    }
    *out = new occ_config{occ::read_config_file(path)};
    return OCC_OK;
  } catch (...) {
    return translate();
  }
}

void occ_config_set_seed(occ_config* config, uint64_t seed) {
  if (config) config->config.set_seed(seed);
}

void occ_config_set_exact_cap(occ_config* config, size_t cap) {
  if (config) config->config.set_exact_cap(cap);
}

void occ_config_free(occ_config* config) { delete config; }

occ_status occ_run(const occ_instance* inst, const char* algorithm, const occ_config* config,
                   occ_report** out) {
  return guarded([&] {
    require(inst, "instance");
    require(algorithm, "algorithm");
    require(out, "out");
    *out = new occ_report{
        occ::run_experiment(inst->instance, inst->descriptor, algorithm, config_or_default(config))};
  });
}

occ_status occ_rerun_report_text(const char* text, size_t length, occ_report** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const auto old = occ::read_report({text, length});
    std::string block;
    for (const auto& line : old.config) block += line + "\n";
    auto config = occ::parse_config(block);
    config.set_seed(old.seed);
    const auto inst = occ::read_instance(old.instance_text);
    *out = new occ_report{occ::run_experiment(inst, old.instance, old.algorithm, config)};
  });
}

occ_status occ_report_parse(const char* text, size_t length, occ_report** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new occ_report{occ::read_report({text, length})};
  });
}

occ_status occ_report_to_text(const occ_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(occ::write_report(report->report));
  });
}

int64_t occ_report_profit(const occ_report* r) { return r ? r->report.score.profit : 0; }
int64_t occ_report_cost(const occ_report* r) { return r ? r->report.score.cost : 0; }
int64_t occ_report_opt_profit(const occ_report* r) { return r ? r->report.opt.profit : 0; }
int64_t occ_report_opt_cost(const occ_report* r) { return r ? r->report.opt.cost : 0; }
int occ_report_opt_exact(const occ_report* r) { return r ? r->report.opt_exact : 0; }
double occ_report_ratio(const occ_report* r) { return r ? r->report.ratio() : 0.0; }
double occ_report_cost_ratio(const occ_report* r) { return r ? r->report.cost_ratio() : 0.0; }
const char* occ_report_branch(const occ_report* r) { return r ? r->report.branch.c_str() : ""; }
void occ_report_free(occ_report* report) { delete report; }

size_t occ_suite_count(void) { return occ::suite_names().size(); }

const char* occ_suite_name(size_t index) {
  const auto& names = occ::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

occ_status occ_verify(const char* suite, const occ_verify_options* options, int* passed,
                      char** summary, char** counterexample) {
  return guarded([&] {
    require(suite, "suite");
    require(passed, "passed");
    occ::VerifyOptions o;
    if (options) {
      o.count = options->count;
      if (options->max_n) o.max_n = options->max_n;
      o.seed = options->seed;
      o.jobs = options->jobs;
      if (options->exact_cap) o.exact_cap = options->exact_cap;
    }
    const auto r = occ::run_suite(suite, o);
    *passed = r.passed();
    std::string text = r.suite + ": " + (r.passed() ? "PASS" : "FAIL") + " (" +
                       std::to_string(r.checked) + " checks, " + std::to_string(r.violations) +
                       " violations)\n";
    for (const auto& note : r.notes) text += "  " + note + "\n";
    if (summary) *summary = copy_string(text);
    if (counterexample) *counterexample = r.counterexample ? copy_string(*r.counterexample) : nullptr;
  });
}

occ_status occ_search(const occ_search_options* options, const occ_config* config,
                      occ_report** worst, occ_instance** instance) {
  return guarded([&] {
    require(options, "options");
    require(worst, "worst");
    occ::SearchOptions o;
    if (options->algorithm) o.algorithm = options->algorithm;
    o.n = options->n;
    o.trials = options->trials;
    o.seed = options->seed;
    o.jobs = options->jobs;
    if (options->objective) o.objective = options->objective;
    o.config = config_or_default(config);
    auto r = occ::search_worst(o);
    if (instance) *instance = new occ_instance{r.instance, r.worst.instance};
    *worst = new occ_report{std::move(r.worst)};
  });
}

occ_status occ_sweep_two_clique(size_t m_max, const occ_config* config, char** table) {
  return guarded([&] {
    require(table, "table");
    *table = copy_string(occ::sweep_two_clique(m_max, config_or_default(config)));
  });
}

occ_status occ_yao_experiment(size_t m, const occ_config* config, char** table) {
  return guarded([&] {
    require(table, "table");
    *table = copy_string(occ::yao_experiment(m, config_or_default(config)));
  });
}

occ_status occ_report_csv(const char* dir, char** csv, char** warnings) {
  return guarded([&] {
    require(dir, "dir");
    require(csv, "csv");
    const auto r = occ::report_csv(dir);
    std::string w;
    for (const auto& line : r.warnings) w += line + "\n";
    *csv = copy_string(r.csv);
    if (warnings) *warnings = copy_string(w);
  });
}

occ_status occ_check_constants(double alpha, double tau, double eta, int* holds) {
  return guarded([&] {
    require(holds, "holds");
    *holds = occ::check_constants(alpha, tau, eta);
  });
}

occ_status occ_constants_bound(double alpha, double tau, double* bound) {
  return guarded([&] {
    require(bound, "bound");
    *bound = occ::constants_bound(alpha, tau);
  });
}

occ_status occ_recommended_p(double alpha, double eta, double* p) {
  return guarded([&] {
    require(p, "p");
    *p = occ::recommended_p(alpha, eta);
  });
}

occ_status occ_mixed_ratio_excess(double alpha, double eta, double* excess) {
  return guarded([&] {
    require(excess, "excess");
    *excess = occ::mixed_ratio_excess(alpha, eta);
  });
}

}  // extern "C"
