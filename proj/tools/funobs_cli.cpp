// Command-line front end. Links only the C API.
#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "funobs/funobs.h"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

struct SystemDeleter {
  void operator()(funobs_system* s) const { funobs_system_free(s); }
};
struct ReportDeleter {
  void operator()(funobs_report* r) const { funobs_report_free(r); }
};
struct TrajectoryDeleter {
  void operator()(funobs_trajectory* t) const { funobs_trajectory_free(t); }
};
using SystemPtr = std::unique_ptr<funobs_system, SystemDeleter>;
using ReportPtr = std::unique_ptr<funobs_report, ReportDeleter>;
using TrajectoryPtr = std::unique_ptr<funobs_trajectory, TrajectoryDeleter>;

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s ? s : "";
  funobs_string_free(s);
  return out;
}

int report_error(const std::string& context, funobs_status st) {
  std::cerr << "error: " << context << ": " << funobs_status_string(st) << ": " << funobs_last_error() << "\n";
  return kInputError;
}

bool read_text(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

struct CheckOptions {
  std::string path;
  bool functional = false, strong = false, strong_star = false, all = false;
  std::vector<std::string> specialize;
  std::string out;
};

unsigned property_mask(const CheckOptions& o) {
  unsigned mask = 0;
  if (o.functional) mask |= FUNOBS_FUNCTIONAL;
  if (o.strong) mask |= FUNOBS_STRONG;
  if (o.strong_star) mask |= FUNOBS_STRONG_STAR;
  if (o.all) mask |= FUNOBS_ALL;
  for (const auto& s : o.specialize) {
    if (s == "hautus") mask |= FUNOBS_HAUTUS;
    if (s == "leftinv") mask |= FUNOBS_LEFTINV;
    if (s == "darouach") mask |= FUNOBS_DAROUACH;
  }
  return mask ? mask : static_cast<unsigned>(FUNOBS_ALL);
}

// Compares computed verdicts with the file's expectations; returns mismatch descriptions.
std::vector<std::string> expectation_mismatches(const funobs_system* sys, const funobs_report* rep, std::size_t* checked) {
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < funobs_report_verdict_count(rep); ++i) {
    const char* name = nullptr;
    int holds = 0;
    funobs_report_verdict(rep, i, &name, &holds);
    const int expected = funobs_system_expected(sys, name);
    if (expected < 0) continue;
    if (checked) ++*checked;
    if (expected != holds)
      bad.push_back(std::string(name) + " expected " + (expected ? "true" : "false") + ", got " + (holds ? "true" : "false"));
  }
  return bad;
}

int cmd_check(const CheckOptions& o) {
  funobs_system* raw = nullptr;
  if (funobs_status st = funobs_system_load(o.path.c_str(), &raw)) return report_error("load", st);
  SystemPtr sys(raw);
  funobs_report* rep_raw = nullptr;
  if (funobs_status st = funobs_check(sys.get(), property_mask(o), &rep_raw)) return report_error("check", st);
  ReportPtr rep(rep_raw);
  char* text = nullptr;
  funobs_report_text(rep.get(), &text);
  std::cout << take(text);
  std::size_t checked = 0;
  const auto bad = expectation_mismatches(sys.get(), rep.get(), &checked);
  if (checked) {
    if (bad.empty()) std::cout << "expected verdicts: " << checked << " match\n";
    for (const auto& b : bad) std::cout << "expected verdict mismatch: " << b << "\n";
  }
  if (!o.out.empty()) {
    char* json = nullptr;
    funobs_report_json(rep.get(), &json);
    if (!write_text(o.out, take(json))) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return kInputError;
    }
  }
  return funobs_report_all_hold(rep.get()) ? kHolds : kFails;
}

int cmd_witness(const std::string& path, const std::string& out) {
  funobs_system* raw = nullptr;
  if (funobs_status st = funobs_system_load(path.c_str(), &raw)) return report_error("load", st);
  SystemPtr sys(raw);
  funobs_report* rep_raw = nullptr;
  if (funobs_status st = funobs_witness(sys.get(), &rep_raw)) return report_error("witness", st);
  ReportPtr rep(rep_raw);
  char* text = nullptr;
  funobs_report_text(rep.get(), &text);
  std::cout << take(text);
  if (!out.empty()) {
    char* json = nullptr;
    funobs_report_json(rep.get(), &json);
    if (!write_text(out, take(json))) {
      std::cerr << "error: cannot write '" << out << "'\n";
      return kInputError;
    }
  }
  return funobs_report_all_hold(rep.get()) ? kHolds : kFails;
}

struct SimulateOptions {
  std::string system, observer, inline_n, scenario, csv;
  std::size_t every = 1;
};

int cmd_simulate(const SimulateOptions& o) {
  funobs_system* raw = nullptr;
  if (funobs_status st = funobs_system_load(o.system.c_str(), &raw)) return report_error("load", st);
  SystemPtr sys(raw);
  std::string observer;
  if (!o.inline_n.empty()) {
    observer = "{\"N\": " + json_quote(o.inline_n) + "}";
  } else if (!read_text(o.observer, observer)) {
    std::cerr << "error: cannot open '" << o.observer << "'\n";
    return kInputError;
  }
  std::string scenario;
  if (!o.scenario.empty() && !read_text(o.scenario, scenario)) {
    std::cerr << "error: cannot open '" << o.scenario << "'\n";
    return kInputError;
  }
  funobs_trajectory* traj_raw = nullptr;
  if (funobs_status st = funobs_simulate(sys.get(), observer.c_str(), o.scenario.empty() ? nullptr : scenario.c_str(), &traj_raw))
    return report_error("simulate", st);
  TrajectoryPtr traj(traj_raw);
  int decayed = 0;
  double final_sup = 0, threshold = 0, horizon = 0;
  std::size_t samples = 0;
  funobs_trajectory_summary(traj.get(), &decayed, &final_sup, &threshold, &horizon, &samples);
  if (!o.csv.empty()) {
    char* csv = nullptr;
    if (funobs_status st = funobs_trajectory_csv(traj.get(), o.every, &csv)) return report_error("csv", st);
    if (!write_text(o.csv, take(csv))) {
      std::cerr << "error: cannot write '" << o.csv << "'\n";
      return kInputError;
    }
  }
  char line[256];
  std::snprintf(line, sizeof line, "horizon: %g s, samples: %zu\nfinal_sup: %.6e (sup |e| over the last 10%% of the horizon)\n",
                horizon, samples, final_sup);
  std::cout << line;
  std::snprintf(line, sizeof line, "decayed: %s (threshold %g)\n", decayed ? "yes" : "no", threshold);
  std::cout << line;
  return decayed ? kHolds : kFails;
}

int cmd_batch(const std::vector<std::string>& inputs, unsigned jobs) {
  std::vector<std::string> files;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (std::filesystem::is_directory(in, ec)) {
      for (const auto& entry : std::filesystem::directory_iterator(in))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
    } else {
      files.push_back(in);
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "error: no system files found\n";
    return kInputError;
  }

  struct Outcome {
    std::string line;
    int code = kHolds;
  };
  std::vector<Outcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
      Outcome& out = outcomes[i];
      funobs_system* raw = nullptr;
      if (funobs_status st = funobs_system_load(files[i].c_str(), &raw)) {
        out.line = files[i] + ": error: " + funobs_status_string(st) + ": " + funobs_last_error();
        out.code = kInputError;
        continue;
      }
      SystemPtr sys(raw);
      funobs_report* rep_raw = nullptr;
      if (funobs_status st = funobs_check(sys.get(), FUNOBS_ALL | FUNOBS_DAROUACH, &rep_raw)) {
        out.line = files[i] + ": error: " + funobs_status_string(st) + ": " + funobs_last_error();
        out.code = kInputError;
        continue;
      }
      ReportPtr rep(rep_raw);
      out.line = files[i] + ":";
      for (std::size_t k = 0; k < funobs_report_verdict_count(rep.get()); ++k) {
        const char* name = nullptr;
        int holds = 0;
        funobs_report_verdict(rep.get(), k, &name, &holds);
        out.line += std::string(" ") + name + "=" + (holds ? "yes" : "no");
      }
      std::size_t checked = 0;
      const auto bad = expectation_mismatches(sys.get(), rep.get(), &checked);
      if (!bad.empty()) {
        out.code = kFails;
        for (const auto& b : bad) out.line += "\n  mismatch: " + b;
      } else if (checked) {
        out.line += " (expected verdicts match)";
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kHolds;
  for (const auto& o : outcomes) {
    std::cout << o.line << "\n";
    code = std::max(code, o.code);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact functional-observer existence checks for LTI systems"};
  app.set_version_flag("--version", std::string(funobs_version()));
  app.require_subcommand(1);

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Decide functional / strong / strong-star detectability");
  c->add_option("system", check.path, "System JSON file")->required();
  c->add_flag("--functional", check.functional, "Known-input functional detectability");
  c->add_flag("--strong", check.strong, "Strong functional detectability");
  c->add_flag("--strong-star", check.strong_star, "Strong-star functional detectability");
  c->add_flag("--all", check.all, "All three (default when nothing is selected)");
  c->add_option("--specialize", check.specialize, "Specialized checks: hautus, leftinv, darouach")
      ->check(CLI::IsMember({"hautus", "leftinv", "darouach"}))
      ->delimiter(',');
  c->add_option("--out", check.out, "Write the structured JSON report here");

  std::string witness_path, witness_out;
  auto* w = app.add_subcommand("witness", "Construct a rational solution of [M N] P = [E F]");
  w->add_option("system", witness_path, "System JSON file")->required();
  w->add_option("--out", witness_out, "Write the structured JSON report here");

  SimulateOptions sim;
  auto* s = app.add_subcommand("simulate", "Simulate plant and observer, measure error decay");
  s->add_option("system", sim.system, "System JSON file")->required();
  auto* obs = s->add_option("--observer", sim.observer, "Observer JSON file ({G,H,Q,R} or {N})");
  auto* inl = s->add_option("--N", sim.inline_n, "Inline transfer matrix, e.g. \"1/(s+1)\" (rows ';', entries ',')");
  obs->excludes(inl);
  s->add_option("--scenario", sim.scenario, "Scenario JSON file (defaults: zero state and input, suggested horizon)");
  s->add_option("--csv", sim.csv, "Write the trajectory CSV here");
  s->add_option("--every", sim.every, "Keep every k-th sample in the CSV")->check(CLI::PositiveNumber);

  std::vector<std::string> batch_inputs;
  unsigned jobs = 1;
  auto* b = app.add_subcommand("batch", "Check every system file and compare with expected verdicts");
  b->add_option("inputs", batch_inputs, "Directories or files")->required();
  b->add_option("--jobs,-j", jobs, "Parallel workers (over files)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (s->parsed() && sim.observer.empty() && sim.inline_n.empty()) {
    std::cerr << "error: simulate needs --observer or --N\n";
    return kInputError;
  }

  if (c->parsed()) return cmd_check(check);
  if (w->parsed()) return cmd_witness(witness_path, witness_out);
  if (s->parsed()) return cmd_simulate(sim);
  return cmd_batch(batch_inputs, jobs);
}
