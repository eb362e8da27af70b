#include "funobs/funobs.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "funobs/error.hpp"
#include "funobs/io.hpp"
#include "funobs/sim.hpp"

struct funobs_system {
  funobs::SystemFile file;
};

struct funobs_report {
  funobs::Report report;
  bool witness_only = false;
  std::vector<std::string> names;
};

struct funobs_trajectory {
  funobs::Trajectory traj;
  funobs::ConvergenceSummary summary;
  double horizon = 0;
};

namespace {

thread_local std::string g_last_error;

funobs_status to_status(funobs::ErrorCode c) {
  switch (c) {
    case funobs::ErrorCode::parse: return FUNOBS_ERR_PARSE;
    case funobs::ErrorCode::dimension: return FUNOBS_ERR_DIMENSION;
    case funobs::ErrorCode::invalid_argument: return FUNOBS_ERR_INVALID_ARGUMENT;
    case funobs::ErrorCode::not_proper: return FUNOBS_ERR_NOT_PROPER;
    case funobs::ErrorCode::unstable: return FUNOBS_ERR_UNSTABLE;
    case funobs::ErrorCode::numeric: return FUNOBS_ERR_NUMERIC;
    case funobs::ErrorCode::internal: return FUNOBS_ERR_INTERNAL;
  }
  return FUNOBS_ERR_INTERNAL;
}

template <class F>
funobs_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return FUNOBS_OK;
  } catch (const funobs::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FUNOBS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FUNOBS_ERR_INTERNAL;
  }
}

funobs_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return FUNOBS_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

funobs_report* finish_report(funobs::Report r, bool witness_only) {
  auto* out = new funobs_report{std::move(r), witness_only, {}};
  for (const auto& v : out->report.verdicts) out->names.push_back(funobs::to_string(v.property));
  return out;
}

}  // namespace

extern "C" {

const char* funobs_version(void) { return "1.0.0"; }

const char* funobs_last_error(void) { return g_last_error.c_str(); }

const char* funobs_status_string(funobs_status status) {
  switch (status) {
    case FUNOBS_OK: return "ok";
    case FUNOBS_ERR_PARSE: return "parse error";
    case FUNOBS_ERR_DIMENSION: return "dimension mismatch";
    case FUNOBS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FUNOBS_ERR_NOT_PROPER: return "not proper";
    case FUNOBS_ERR_UNSTABLE: return "unstable";
    case FUNOBS_ERR_NUMERIC: return "numeric failure";
    case FUNOBS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void funobs_string_free(char* s) { std::free(s); }

funobs_status funobs_system_parse(const char* json, funobs_system** out) {
  if (!json || !out) return null_argument("json/out");
  *out = nullptr;
  return guarded([&] { *out = new funobs_system{funobs::parse_system(json)}; });
}

funobs_status funobs_system_load(const char* path, funobs_system** out) {
  if (!path || !out) return null_argument("path/out");
  *out = nullptr;
  return guarded([&] { *out = new funobs_system{funobs::load_system(path)}; });
}

void funobs_system_free(funobs_system* sys) { delete sys; }

void funobs_system_dims(const funobs_system* sys, size_t* n, size_t* m, size_t* p, size_t* q) {
  if (!sys) return;
  const auto& s = sys->file.system;
  if (n) *n = s.n();
  if (m) *m = s.m();
  if (p) *p = s.p();
  if (q) *q = s.q();
}

const char* funobs_system_name(const funobs_system* sys) { return sys ? sys->file.name.c_str() : ""; }

funobs_status funobs_system_serialize(const funobs_system* sys, char** json_out) {
  if (!sys || !json_out) return null_argument("sys/json_out");
  return guarded([&] { *json_out = dup_string(funobs::serialize_system(sys->file)); });
}

int funobs_system_expected(const funobs_system* sys, const char* property) {
  if (!sys || !property) return -1;
  auto it = sys->file.expected.find(property);
  return it == sys->file.expected.end() ? -1 : (it->second ? 1 : 0);
}

funobs_status funobs_check(const funobs_system* sys, unsigned properties, funobs_report** out) {
  if (!sys || !out) return null_argument("sys/out");
  *out = nullptr;
  if (properties == 0) {
    g_last_error = "no property selected";
    return FUNOBS_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    using funobs::Property;
    std::vector<Property> props;
    if (properties & FUNOBS_FUNCTIONAL) props.push_back(Property::functional_detectable);
    if (properties & FUNOBS_STRONG) props.push_back(Property::strongly_functional_detectable);
    if (properties & FUNOBS_STRONG_STAR) props.push_back(Property::strong_star_functional_detectable);
    if (properties & FUNOBS_HAUTUS) {
      props.push_back(Property::hautus_strong_detectable);
      props.push_back(Property::hautus_strong_star_detectable);
    }
    if (properties & FUNOBS_LEFTINV) {
      props.push_back(Property::asympt_strong_left_invertible);
      props.push_back(Property::asympt_strong_star_left_invertible);
    }
    if (properties & FUNOBS_DAROUACH) props.push_back(Property::darouach_fixed_order);
    funobs::Report r;
    r.system_name = sys->file.name;
    for (Property p : props) {
      const auto start = std::chrono::steady_clock::now();
      r.verdicts.push_back(funobs::decide(p, sys->file.system));
      r.timing.emplace_back(funobs::to_string(p), seconds_since(start));
    }
    *out = finish_report(std::move(r), false);
  });
}

funobs_status funobs_witness(const funobs_system* sys, funobs_report** out) {
  if (!sys || !out) return null_argument("sys/out");
  *out = nullptr;
  return guarded([&] {
    funobs::Report r;
    r.system_name = sys->file.name;
    const auto start = std::chrono::steady_clock::now();
    r.witness = funobs::solve_over_field(sys->file.system);
    r.timing.emplace_back("witness", seconds_since(start));
    *out = finish_report(std::move(r), true);
  });
}

int funobs_report_all_hold(const funobs_report* r) {
  if (!r) return 0;
  if (r->witness_only) return r->report.witness && r->report.witness->solvable_over_field ? 1 : 0;
  for (const auto& v : r->report.verdicts)
    if (!v.holds) return 0;
  return 1;
}

size_t funobs_report_verdict_count(const funobs_report* r) { return r ? r->report.verdicts.size() : 0; }

int funobs_report_verdict(const funobs_report* r, size_t i, const char** property, int* holds) {
  if (!r || i >= r->report.verdicts.size()) return 0;
  if (property) *property = r->names[i].c_str();
  if (holds) *holds = r->report.verdicts[i].holds ? 1 : 0;
  return 1;
}

funobs_status funobs_report_json(const funobs_report* r, char** json_out) {
  if (!r || !json_out) return null_argument("report/json_out");
  return guarded([&] { *json_out = dup_string(funobs::report_to_json(r->report).dump(2) + "\n"); });
}

funobs_status funobs_report_text(const funobs_report* r, char** text_out) {
  if (!r || !text_out) return null_argument("report/text_out");
  return guarded([&] { *text_out = dup_string(funobs::report_to_text(r->report)); });
}

void funobs_report_free(funobs_report* r) { delete r; }

funobs_status funobs_simulate(const funobs_system* sys, const char* observer_json, const char* scenario_json,
                              funobs_trajectory** out) {
  if (!sys || !observer_json || !out) return null_argument("sys/observer_json/out");
  *out = nullptr;
  return guarded([&] {
    const funobs::StateSpaceRealization obs = funobs::parse_observer(observer_json);
    funobs::ScenarioFile sc = scenario_json ? funobs::parse_scenario(scenario_json) : funobs::ScenarioFile{};
    if (!sc.horizon_given) sc.scenario.horizon = funobs::suggest_horizon(sys->file.system, obs);
    auto* t = new funobs_trajectory;
    try {
      t->traj = funobs::simulate(sys->file.system, obs, sc.scenario);
      t->summary = funobs::convergence_metric(t->traj, sc.threshold);
      t->horizon = sc.scenario.horizon;
    } catch (...) {
      delete t;
      throw;
    }
    *out = t;
  });
}

void funobs_trajectory_summary(const funobs_trajectory* t, int* decayed, double* final_sup, double* threshold,
                               double* horizon, size_t* samples) {
  if (!t) return;
  if (decayed) *decayed = t->summary.decayed ? 1 : 0;
  if (final_sup) *final_sup = t->summary.final_sup;
  if (threshold) *threshold = t->summary.threshold;
  if (horizon) *horizon = t->horizon;
  if (samples) *samples = t->traj.t.size();
}

funobs_status funobs_trajectory_csv(const funobs_trajectory* t, size_t every, char** csv_out) {
  if (!t || !csv_out) return null_argument("trajectory/csv_out");
  return guarded([&] {
    std::ostringstream os;
    funobs::write_csv(os, t->traj, every);
    *csv_out = dup_string(os.str());
  });
}

void funobs_trajectory_free(funobs_trajectory* t) { delete t; }

}  // extern "C"
