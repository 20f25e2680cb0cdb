// Copyright 2026 The boadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "boadd/boadd.h"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct CliExit {
  int code;
};

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "boadd: " << msg << '\n';
  throw CliExit{code};
}

void check(boadd_status st, const std::string& what = {}) {
  if (st == BOADD_OK) return;
  std::string msg = boadd_last_error();
  if (!what.empty()) msg = what + ": " + msg;
  die(st == BOADD_ERR_BUDGET ? kBudget : kUsage, msg);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  boadd_string_free(s);
  return out;
}

template <typename T>
struct Handle {
  T* p = nullptr;
  void (*del)(T*);
  explicit Handle(void (*d)(T*)) : del(d) {}
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (p) del(p);
  }
  void reset(T* q) {
    if (p) del(p);
    p = q;
  }
};

using CodeHandle = Handle<boadd_code>;
using BoaHandle = Handle<boadd_boa>;
using ScheduleHandle = Handle<boadd_schedule>;

// Applies config-file values to options not given on the command line.
class Config {
 public:
  void load(const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) die(kUsage, "cannot open config file " + path);
    try {
      in >> cfg_;
    } catch (const json::exception& e) {
      die(kUsage, std::string("config file: ") + e.what());
    }
    if (!cfg_.is_object()) die(kUsage, "config file must hold a JSON object");
  }

  template <typename T>
  void fill(const CLI::Option* opt, const std::string& key, T& value) const {
    if (opt->count() > 0 || !cfg_.contains(key)) return;
    try {
      value = cfg_.at(key).get<T>();
    } catch (const json::exception&) {
      die(kUsage, "config key '" + key + "' has the wrong type");
    }
  }

 private:
  json cfg_ = json::object();
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) die(kUsage, "cannot write " + path);
  out << text;
}

bool is_prime(int x) {
  if (x < 2) return false;
  for (int f = 2; f * f <= x; ++f) {
    if (x % f == 0) return false;
  }
  return true;
}

// Representation for arrays over GF(q): weyl when q = d^2, x_only when q = d.
struct RepChoice {
  int d = 0;
  boadd_rep_mode mode = BOADD_REP_WEYL;
};

RepChoice rep_for(unsigned q, int d_hint) {
  if (d_hint > 0) {
    if (static_cast<unsigned>(d_hint * d_hint) == q) return {d_hint, BOADD_REP_WEYL};
    if (static_cast<unsigned>(d_hint) == q && is_prime(d_hint)) return {d_hint, BOADD_REP_X_ONLY};
    die(kUsage, "q = " + std::to_string(q) + " is neither d nor d^2 for d = " + std::to_string(d_hint));
  }
  const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(q))));
  if (static_cast<unsigned>(r * r) == q) return {r, BOADD_REP_WEYL};
  if (is_prime(static_cast<int>(q))) return {static_cast<int>(q), BOADD_REP_X_ONLY};
  die(kUsage, "no representation for q = " + std::to_string(q));
}

std::string mode_name(boadd_rep_mode m) { return m == BOADD_REP_WEYL ? "weyl" : "x_only"; }

struct CodeOptions {
  std::string family;
  std::string file;
  int d = 2;
  unsigned q = 0;
  std::size_t n = 0;
  int m = 0;
  int designed = 0;
  bool diagonal = false;
  bool allow_pad = false;

  CLI::Option* o_family = nullptr;
  CLI::Option* o_file = nullptr;
  CLI::Option* o_d = nullptr;
  CLI::Option* o_q = nullptr;
  CLI::Option* o_n = nullptr;
  CLI::Option* o_m = nullptr;
  CLI::Option* o_designed = nullptr;
  CLI::Option* o_diagonal = nullptr;
  CLI::Option* o_pad = nullptr;

  void add(CLI::App* app) {
    o_family = app->add_option("--family", family, "hamming | bch | example1 | example2 | example3 | file")
                   ->check(CLI::IsMember({"hamming", "bch", "example1", "example2", "example3", "file"}));
    o_file = app->add_option("--file", file, "generator matrix file (family file)");
    o_d = app->add_option("--d", d, "qudit dimension");
    o_q = app->add_option("--q", q, "alphabet size of the array");
    o_n = app->add_option("--n", n, "number of qudits");
    o_m = app->add_option("--m", m, "BCH extension degree");
    o_designed = app->add_option("--designed", designed, "BCH designed distance");
    o_diagonal = app->add_flag("--diagonal", diagonal, "diagonal Hamiltonians: q = d with X-only pulses");
    o_pad = app->add_flag("--allow-pad", allow_pad, "round n up to the next constructible length");
  }

  void fill(const Config& c) {
    c.fill(o_family, "family", family);
    c.fill(o_file, "file", file);
    c.fill(o_d, "d", d);
    c.fill(o_q, "q", q);
    c.fill(o_n, "n", n);
    c.fill(o_m, "m", m);
    c.fill(o_designed, "designed", designed);
    c.fill(o_diagonal, "diagonal", diagonal);
    c.fill(o_pad, "allow_pad", allow_pad);
  }

  unsigned field_order() const {
    const unsigned derived = diagonal ? static_cast<unsigned>(d) : static_cast<unsigned>(d * d);
    if (q != 0 && q != derived) {
      die(kUsage, "--q " + std::to_string(q) + " does not match d = " + std::to_string(d) +
                      (diagonal ? " (diagonal: q = d)" : " (q = d^2)"));
    }
    return derived;
  }
};

// Code whose dual distance sets the array strength.
void make_code(const CodeOptions& o, CodeHandle& code, bool for_array) {
  boadd_code* c = nullptr;
  if (o.family.empty()) die(kUsage, "--family is required");
  if (o.family == "hamming") {
    if (o.n == 0) die(kUsage, "--n is required for the hamming family");
    const unsigned q = o.field_order();
    std::size_t n = o.n;
    if (o.allow_pad) {
      std::size_t len = q + 1, pw = static_cast<std::size_t>(q) * q;
      while (len < n) {
        pw *= q;
        len = (pw - 1) / (q - 1);
      }
      n = len;
    }
    const auto st = boadd_code_hamming_dual(q, n, &c);
    if (st == BOADD_ERR_INVALID_ARGUMENT) {
      die(kUsage, std::string(boadd_last_error()) +
                      "; no constructive code for this n, rerun with --allow-pad to embed the "
                      "qudits into a larger Hamming length");
    }
    check(st);
  } else if (o.family == "bch") {
    if (o.m <= 0 || o.designed <= 0) die(kUsage, "--m and --designed are required for bch");
    const unsigned q = o.q != 0 ? o.q : o.field_order();
    check(boadd_code_bch_ext(q, o.m, o.designed, &c), "bch");
    if (for_array) {
      boadd_code* dual = nullptr;
      const auto st = boadd_code_dual(c, &dual);
      boadd_code_free(c);
      check(st);
      c = dual;
    }
  } else if (o.family == "file") {
    if (o.file.empty()) die(kUsage, "--file is required for family file");
    check(boadd_code_load(o.file.c_str(), &c));
  } else {
    check(boadd_code_builtin(o.family.c_str(), &c));
  }
  code.reset(c);
}

int cmd_build(CodeOptions& o, std::size_t locality, const std::string& out_boa,
              const std::string& out_schedule, const std::string& out_csv, double delta,
              bool symmetrize, bool codewords) {
  CodeHandle code(boadd_code_free);
  make_code(o, code, true);
  unsigned q = 0;
  std::size_t n = 0, k = 0;
  check(boadd_code_info(code.p, &q, &n, &k));
  if (o.family == "bch" && o.o_q->count() == 0 && o.o_d->count() == 0) o.d = 0;
  const RepChoice rep = rep_for(q, o.family.rfind("example", 0) == 0 && o.o_d->count() == 0 ? 0 : o.d);

  BoaHandle boa(boadd_boa_free);
  if (codewords) {
    check(boadd_boa_from_codewords(code.p, &boa.p));
  } else {
    check(boadd_boa_build(code.p, &boa.p));
  }
  if (o.n != 0 && o.n < n) {
    if (o.family == "hamming" && !o.allow_pad) die(kUsage, "n below the code length needs --allow-pad");
    boadd_boa* padded = nullptr;
    check(boadd_boa_pad(boa.p, o.n, &padded));
    boa.reset(padded);
  }
  std::size_t rows = 0, N = 0, strength = 0;
  std::uint64_t lambda = 0;
  check(boadd_boa_info(boa.p, nullptr, &rows, &N, &strength, &lambda));
  if (locality > strength) {
    die(kUsage, "code strength " + std::to_string(strength) + " is below the requested locality " +
                    std::to_string(locality));
  }

  std::cout << "code: [" << n << "," << k << "]_" << q << "\n";
  std::cout << "array: n = " << rows << ", N = " << N << ", k = " << k << ", strength = " << strength
            << ", lambda = " << lambda << "\n";
  if (!codewords) {
    std::uint64_t qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= q;
    std::cout << "N = q^k * |S| = " << q << "^" << k << " * " << N / qk << " = " << N << "\n";
  }
  std::cout << "representation: d = " << rep.d << ", mode = " << mode_name(rep.mode) << "\n";

  int ok = 0;
  char* report = nullptr;
  if (!codewords) {
    check(boadd_boa_verify(boa.p, strength, &ok, &report), "verify");
    take(report);
    std::cout << "verify at strength " << strength << ": " << (ok ? "pass" : "FAIL") << "\n";
  }

  if (!out_boa.empty()) check(boadd_boa_save(boa.p, out_boa.c_str()));
  if (!out_csv.empty()) check(boadd_boa_save_csv(boa.p, out_csv.c_str()));
  if (!out_schedule.empty()) {
    ScheduleHandle s(boadd_schedule_free);
    check(boadd_schedule_from_boa(boa.p, rep.d, rep.mode, delta, &s.p));
    if (symmetrize) {
      boadd_schedule* sym = nullptr;
      check(boadd_schedule_symmetrize(s.p, &sym));
      s.reset(sym);
    }
    char* text = nullptr;
    check(boadd_schedule_export(s.p, "json", &text));
    write_text(out_schedule, take(text));
  }
  if (!codewords && !ok) return kFailed;
  return kOk;
}

int cmd_verify(const std::string& path, std::optional<std::size_t> strength, bool oa_only,
               const std::string& json_out) {
  BoaHandle boa(boadd_boa_free);
  check(boadd_boa_load(path.c_str(), &boa.p));
  std::size_t claimed = 0;
  check(boadd_boa_info(boa.p, nullptr, nullptr, nullptr, &claimed, nullptr));
  const std::size_t l = strength.value_or(claimed);
  int ok = 0;
  char* text = nullptr;
  check(boadd_boa_verify(boa.p, l, &ok, &text), "verify");
  const std::string report = take(text);
  const json j = json::parse(report);
  std::cout << "strength " << l << "\n";
  std::cout << "OA: " << (j["oa_ok"].get<bool>() ? "pass" : "FAIL") << " (lambda "
            << j["lambda"].get<std::uint64_t>() << ")\n";
  if (!oa_only) {
    std::cout << "BOA: " << (ok ? "pass" : "FAIL") << " over " << j["subsets"].get<std::size_t>()
              << " row subsets\n";
    for (const auto& f : j["failures"]) std::cout << "  " << f.get<std::string>() << "\n";
  }
  if (!json_out.empty()) write_text(json_out, report);
  const bool pass = oa_only ? j["oa_ok"].get<bool>() : ok != 0;
  return pass ? kOk : kFailed;
}

int cmd_schedule_emit(const std::string& boa_path, const std::string& rep_name, int d, double delta,
                      bool symmetrize, const std::string& format, const std::string& out) {
  BoaHandle boa(boadd_boa_free);
  check(boadd_boa_load(boa_path.c_str(), &boa.p));
  unsigned q = 0;
  check(boadd_boa_info(boa.p, &q, nullptr, nullptr, nullptr, nullptr));
  RepChoice rep;
  if (rep_name == "weyl") {
    rep = {d > 0 ? d : static_cast<int>(std::lround(std::sqrt(static_cast<double>(q)))), BOADD_REP_WEYL};
  } else {
    rep = {d > 0 ? d : static_cast<int>(q), BOADD_REP_X_ONLY};
  }
  ScheduleHandle s(boadd_schedule_free);
  check(boadd_schedule_from_boa(boa.p, rep.d, rep.mode, delta, &s.p));
  if (symmetrize) {
    boadd_schedule* sym = nullptr;
    check(boadd_schedule_symmetrize(s.p, &sym));
    s.reset(sym);
  }
  char* text = nullptr;
  check(boadd_schedule_export(s.p, format.c_str(), &text));
  const std::string body = take(text);
  if (out.empty()) {
    std::cout << body;
  } else {
    write_text(out, body);
  }
  return kOk;
}

int cmd_simulate(const std::string& path, std::uint64_t seed, std::size_t locality, bool diagonal,
                 const std::string& mode, int quadrature, double tolerance, const std::string& out) {
  ScheduleHandle s(boadd_schedule_free);
  check(boadd_schedule_load(path.c_str(), &s.p));
  std::size_t n = 0;
  int d = 0;
  check(boadd_schedule_info(s.p, &n, nullptr, &d, nullptr, nullptr));
  boadd_sim_options opt{};
  opt.seed = seed;
  opt.locality = locality;
  opt.diagonal = diagonal ? 1 : 0;
  if (mode.empty()) {
    opt.mode = n > 10 ? BOADD_SIM_PER_TERM : BOADD_SIM_FULL;
  } else {
    opt.mode = mode == "full" ? BOADD_SIM_FULL : BOADD_SIM_PER_TERM;
  }
  opt.quadrature_nodes = quadrature;
  double residual = 0;
  char* text = nullptr;
  const auto st = boadd_simulate(s.p, &opt, &residual, &text);
  if (st == BOADD_ERR_BUDGET) {
    die(kBudget, std::string(boadd_last_error()) + "; try --mode per-term");
  }
  check(st, "simulate");
  const std::string report = take(text);
  if (out.empty()) {
    std::cout << report;
  } else {
    write_text(out, report);
    std::cout << "residual " << residual << "\n";
  }
  return residual <= tolerance ? kOk : kFailed;
}

int cmd_table(int d, int l_min, int l_max, int k_min, int k_max) {
  char* text = nullptr;
  check(boadd_table_text(d, l_min, l_max, k_min, k_max, &text));
  std::cout << take(text);
  return kOk;
}

int cmd_codes_describe(const CodeOptions& o) {
  CodeHandle code(boadd_code_free);
  make_code(o, code, false);
  char* text = nullptr;
  check(boadd_code_report(code.p, &text));
  json j = json::parse(take(text));
  if (o.family == "bch") {
    check(boadd_code_bound_check(code.p, o.designed, o.m, &text));
    j["dimension_bound"] = json::parse(take(text));
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

struct BuildCommand {
  CodeOptions code;
  std::size_t locality = 0;
  std::string out_boa, out_schedule, out_csv, config;
  double delta = 1.0;
  bool symmetrize = false, codewords = false;
  CLI::App* cmd = nullptr;

  void add(CLI::App* c) {
    cmd = c;
    code.add(c);
    c->add_option("--locality", locality, "required strength");
    c->add_option("--out-boa", out_boa, "write the array");
    c->add_option("--out-schedule", out_schedule, "write the schedule JSON");
    c->add_option("--out-csv", out_csv, "write the array as CSV");
    c->add_option("--delta", delta, "slot duration");
    c->add_flag("--symmetrize", symmetrize, "append the time-reversed schedule");
    c->add_flag("--codewords", codewords, "emit the plain codeword array instead");
    c->add_option("--config", config, "JSON config; flags win");
  }

  int run() {
    Config cfg;
    cfg.load(config);
    code.fill(cfg);
    cfg.fill(cmd->get_option("--locality"), "locality", locality);
    cfg.fill(cmd->get_option("--out-boa"), "out_boa", out_boa);
    cfg.fill(cmd->get_option("--out-schedule"), "out_schedule", out_schedule);
    cfg.fill(cmd->get_option("--out-csv"), "out_csv", out_csv);
    cfg.fill(cmd->get_option("--delta"), "delta", delta);
    cfg.fill(cmd->get_option("--symmetrize"), "symmetrize", symmetrize);
    cfg.fill(cmd->get_option("--codewords"), "codewords", codewords);
    return cmd_build(code, locality, out_boa, out_schedule, out_csv, delta, symmetrize, codewords);
  }
};

struct VerifyCommand {
  std::string path, json_out;
  std::size_t strength = 0;
  bool oa_only = false;
  CLI::Option* o_strength = nullptr;

  void add(CLI::App* c) {
    c->add_option("--boa", path, "array file")->required();
    o_strength = c->add_option("--strength", strength, "strength to check (default: header)");
    c->add_flag("--oa-only", oa_only, "check the orthogonal-array property only");
    c->add_option("--json", json_out, "write the full report");
  }

  int run() {
    return cmd_verify(path, o_strength->count() ? std::optional(strength) : std::nullopt, oa_only,
                      json_out);
  }
};

struct SimulateCommand {
  std::string path, mode, out, config;
  std::uint64_t seed = 1;
  std::size_t locality = 2;
  bool diagonal = false;
  int quadrature = 0;
  double tolerance = 1e-10;
  CLI::App* cmd = nullptr;

  void add(CLI::App* c) {
    cmd = c;
    c->add_option("--schedule", path, "schedule JSON");
    c->add_option("--seed", seed, "random Hamiltonian seed");
    c->add_option("--locality", locality, "locality of the random Hamiltonian");
    c->add_flag("--diagonal", diagonal, "diagonal terms only");
    c->add_option("--mode", mode, "full | per-term");
    c->add_option("--quadrature", quadrature, "Gauss-Legendre nodes instead of the exact integral");
    c->add_option("--tolerance", tolerance, "exit 1 when the residual exceeds this");
    c->add_option("--out", out, "write the JSON report here");
    c->add_option("--config", config, "JSON config; flags win");
  }

  int run() {
    Config cfg;
    cfg.load(config);
    cfg.fill(cmd->get_option("--schedule"), "schedule", path);
    cfg.fill(cmd->get_option("--seed"), "seed", seed);
    cfg.fill(cmd->get_option("--locality"), "locality", locality);
    cfg.fill(cmd->get_option("--diagonal"), "diagonal", diagonal);
    cfg.fill(cmd->get_option("--mode"), "mode", mode);
    cfg.fill(cmd->get_option("--quadrature"), "quadrature", quadrature);
    cfg.fill(cmd->get_option("--tolerance"), "tolerance", tolerance);
    cfg.fill(cmd->get_option("--out"), "out", out);
    if (path.empty()) die(kUsage, "--schedule is required");
    if (!mode.empty() && mode != "full" && mode != "per-term") die(kUsage, "mode must be full or per-term");
    if (quadrature < 0) die(kUsage, "--quadrature must be positive");
    return cmd_simulate(path, seed, locality, diagonal, mode, quadrature, tolerance, out);
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Bounded-strength decoupling schedules from balanced-cycle orthogonal arrays"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(boadd_version()));

  BuildCommand build, boa_build;
  auto* build_cmd = app.add_subcommand("build", "construct an array and schedule from a code");
  build.add(build_cmd);
  auto* boa_cmd = app.add_subcommand("boa", "array commands");
  boa_cmd->require_subcommand(1);
  boa_build.add(boa_cmd->add_subcommand("build", "same as build"));

  VerifyCommand verify, boa_verify;
  auto* verify_cmd = app.add_subcommand("verify", "check OA and balanced-cycle properties");
  verify.add(verify_cmd);
  auto* boa_verify_cmd = boa_cmd->add_subcommand("verify", "same as verify");
  boa_verify.add(boa_verify_cmd);

  auto* schedule = app.add_subcommand("schedule", "schedule commands");
  schedule->require_subcommand(1);
  auto* emit = schedule->add_subcommand("emit", "turn an array into a control schedule");
  std::string emit_boa, emit_rep = "weyl", emit_format = "json", emit_out;
  int emit_d = 0;
  double emit_delta = 1.0;
  bool emit_sym = false;
  emit->add_option("--boa", emit_boa, "array file")->required();
  emit->add_option("--rep", emit_rep, "weyl | x_only")->check(CLI::IsMember({"weyl", "x_only"}));
  emit->add_option("--d", emit_d, "qudit dimension (default: from q)");
  emit->add_option("--delta", emit_delta, "slot duration");
  emit->add_flag("--symmetrize", emit_sym, "append the time-reversed schedule");
  emit->add_option("--format", emit_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  emit->add_option("--out", emit_out, "output file (default: stdout)");

  SimulateCommand simulate, sim_run;
  auto* simulate_cmd = app.add_subcommand("simulate", "first-order decoupling residual");
  simulate.add(simulate_cmd);
  auto* sim_cmd = app.add_subcommand("sim", "simulation commands");
  sim_cmd->require_subcommand(1);
  auto* sim_run_cmd = sim_cmd->add_subcommand("run", "same as simulate");
  sim_run.add(sim_run_cmd);

  auto* table = app.add_subcommand("table", "BOA lengths and constructive Hamming ranges");
  int t_d = 2, t_lmin = 2, t_lmax = 0, t_kmin = 2, t_kmax = 0;
  table->add_option("--d", t_d, "qudit dimension (2 or 3)");
  table->add_option("--l-min", t_lmin, "smallest locality");
  table->add_option("--l-max", t_lmax, "largest locality");
  table->add_option("--k-min", t_kmin, "smallest k");
  table->add_option("--k-max", t_kmax, "largest k");

  auto* codes = app.add_subcommand("codes", "code commands");
  codes->require_subcommand(1);
  auto* describe = codes->add_subcommand("describe", "distance, dual distance and strength");
  CodeOptions describe_code;
  describe_code.add(describe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (build_cmd->parsed()) return build.run();
  if (boa_build.cmd->parsed()) return boa_build.run();
  if (verify_cmd->parsed()) return verify.run();
  if (boa_verify_cmd->parsed()) return boa_verify.run();
  if (emit->parsed()) {
    return cmd_schedule_emit(emit_boa, emit_rep, emit_d, emit_delta, emit_sym, emit_format, emit_out);
  }
  if (simulate_cmd->parsed()) return simulate.run();
  if (sim_run_cmd->parsed()) return sim_run.run();
  if (table->parsed()) {
    const int kmax = t_d == 3 ? 7 : 8;
    return cmd_table(t_d, t_lmin, t_lmax ? t_lmax : kmax, t_kmin, t_kmax ? t_kmax : kmax);
  }
  if (describe->parsed()) return cmd_codes_describe(describe_code);
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliExit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "boadd: " << e.what() << '\n';
    return kUsage;
  }
}
