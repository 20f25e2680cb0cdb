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

#include "boadd/boadd.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "boadd/boa.hpp"
#include "boadd/codes.hpp"
#include "boadd/error.hpp"
#include "boadd/schedule.hpp"
#include "boadd/sim.hpp"
#include "boadd/table.hpp"

struct boadd_code {
  boadd::LinearCode code;
};
struct boadd_boa {
  boadd::BoaArray boa;
};
struct boadd_schedule {
  boadd::ControlSchedule schedule;
};

namespace {

using nlohmann::json;

thread_local std::string g_last_error;

boadd_status status_of(boadd::ErrorKind kind) {
  switch (kind) {
    case boadd::ErrorKind::InvalidArgument: return BOADD_ERR_INVALID_ARGUMENT;
    case boadd::ErrorKind::Parse: return BOADD_ERR_PARSE;
    case boadd::ErrorKind::Budget: return BOADD_ERR_BUDGET;
    case boadd::ErrorKind::Io: return BOADD_ERR_IO;
    case boadd::ErrorKind::Mismatch: return BOADD_ERR_MISMATCH;
  }
  return BOADD_ERR_INTERNAL;
}

template <typename Fn>
boadd_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BOADD_OK;
  } catch (const boadd::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BOADD_ERR_BUDGET;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BOADD_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return BOADD_ERR_INTERNAL;
  }
}

template <typename T>
void need(const T* p, const char* what) {
  if (!p) boadd::fail(boadd::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void write_file(const char* path, const std::string& text) {
  need(path, "path");
  std::ofstream out(path);
  if (!out) boadd::fail(boadd::ErrorKind::Io, std::string("cannot write ") + path);
  out << text;
  if (!out) boadd::fail(boadd::ErrorKind::Io, std::string("write failed for ") + path);
}

json report_json(const boadd::VerificationReport& r) {
  json j;
  j["strength"] = r.strength;
  j["oa_ok"] = r.oa_ok;
  j["lambda"] = r.lambda;
  j["boa_ok"] = r.boa_ok;
  j["first_column_zero"] = r.first_column_zero;
  j["subsets"] = r.per_subset.size();
  auto& subs = j["per_subset"] = json::array();
  for (const auto& s : r.per_subset) {
    json e;
    e["rows"] = s.rows;
    e["balanced"] = s.balance.balanced;
    e["generating"] = s.balance.generating;
    e["covers_all"] = s.balance.covers_all;
    auto& mu = e["mu"] = json::array();
    for (const auto& [label, m] : s.balance.mu) mu.push_back({{"label", label}, {"mu", m}});
    e["violation_count"] = s.balance.violation_count;
    subs.push_back(std::move(e));
  }
  j["failures"] = r.failures;
  return j;
}

}  // namespace

extern "C" {

const char* boadd_last_error(void) { return g_last_error.c_str(); }

const char* boadd_status_string(boadd_status status) {
  switch (status) {
    case BOADD_OK: return "ok";
    case BOADD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BOADD_ERR_PARSE: return "parse error";
    case BOADD_ERR_BUDGET: return "budget exceeded";
    case BOADD_ERR_IO: return "i/o error";
    case BOADD_ERR_MISMATCH: return "mismatch";
    case BOADD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* boadd_version(void) { return "0.1.0"; }

void boadd_string_free(char* s) { delete[] s; }

boadd_status boadd_code_hamming_dual(unsigned q, size_t n, boadd_code** out) {
  return guard([&] {
    need(out, "out");
    *out = new boadd_code{boadd::hamming_dual_code(q, n)};
  });
}

boadd_status boadd_code_bch_ext(unsigned q, int m, int designed, boadd_code** out) {
  return guard([&] {
    need(out, "out");
    *out = new boadd_code{boadd::bch_ext_code(q, m, designed)};
  });
}

boadd_status boadd_code_builtin(const char* name, boadd_code** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    *out = new boadd_code{boadd::builtin_code(name)};
  });
}

boadd_status boadd_code_load(const char* path, boadd_code** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new boadd_code{boadd::load_code(path)};
  });
}

boadd_status boadd_code_parse(const char* text, boadd_code** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    std::istringstream in(text);
    *out = new boadd_code{boadd::parse_code(in)};
  });
}

boadd_status boadd_code_dual(const boadd_code* code, boadd_code** out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    *out = new boadd_code{boadd::dual_code(code->code)};
  });
}

boadd_status boadd_code_save(const boadd_code* code, const char* path) {
  return guard([&] {
    need(code, "code");
    write_file(path, boadd::format_code(code->code));
  });
}

boadd_status boadd_code_info(const boadd_code* code, unsigned* q, size_t* n, size_t* k) {
  return guard([&] {
    need(code, "code");
    if (q) *q = code->code.q();
    if (n) *n = code->code.n;
    if (k) *k = code->code.k;
  });
}

boadd_status boadd_code_encode(const boadd_code* code, const unsigned* msg, size_t k,
                               unsigned* out, size_t n) {
  return guard([&] {
    need(code, "code");
    need(msg, "msg");
    need(out, "out");
    if (n != code->code.n) boadd::fail(boadd::ErrorKind::InvalidArgument, "output length must be n");
    const auto c = boadd::encode(code->code, std::vector<boadd::Elem>(msg, msg + k));
    std::copy(c.begin(), c.end(), out);
  });
}

boadd_status boadd_code_report(const boadd_code* code, char** out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    const auto r = boadd::describe(code->code);
    json j{{"q", r.q},
           {"n", r.n},
           {"k", r.k},
           {"distance", r.distance},
           {"dual_distance", r.dual_distance},
           {"strength", r.strength},
           {"label", code->code.label}};
    *out = dup_string(j.dump(2) + "\n");
  });
}

boadd_status boadd_code_bound_check(const boadd_code* code, int designed, int m, char** out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    const auto r = boadd::bch_dimension_bound_check(code->code, designed, m, code->code.q());
    json j{{"applicable", r.applicable},
           {"holds", r.holds},
           {"bound", r.bound},
           {"slack", r.slack},
           {"k", code->code.k}};
    *out = dup_string(j.dump(2) + "\n");
  });
}

void boadd_code_free(boadd_code* code) { delete code; }

boadd_status boadd_boa_build(const boadd_code* code, boadd_boa** out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    *out = new boadd_boa{boadd::build_boa(code->code)};
  });
}

boadd_status boadd_boa_from_codewords(const boadd_code* code, boadd_boa** out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    *out = new boadd_boa{boadd::oa_from_code(code->code)};
  });
}

boadd_status boadd_boa_pad(const boadd_boa* boa, size_t n_target, boadd_boa** out) {
  return guard([&] {
    need(boa, "boa");
    need(out, "out");
    *out = new boadd_boa{boadd::pad_rows(boa->boa, n_target)};
  });
}

boadd_status boadd_boa_load(const char* path, boadd_boa** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new boadd_boa{boadd::load_boa(path)};
  });
}

boadd_status boadd_boa_parse(const char* text, boadd_boa** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    std::istringstream in(text);
    *out = new boadd_boa{boadd::parse_boa(in)};
  });
}

boadd_status boadd_boa_save(const boadd_boa* boa, const char* path) {
  return guard([&] {
    need(boa, "boa");
    write_file(path, boadd::format_boa(boa->boa));
  });
}

boadd_status boadd_boa_save_csv(const boadd_boa* boa, const char* path) {
  return guard([&] {
    need(boa, "boa");
    write_file(path, boadd::boa_csv(boa->boa));
  });
}

boadd_status boadd_boa_info(const boadd_boa* boa, unsigned* q, size_t* n, size_t* N,
                            size_t* strength, uint64_t* lambda) {
  return guard([&] {
    need(boa, "boa");
    if (q) *q = boa->boa.q();
    if (n) *n = boa->boa.rows;
    if (N) *N = boa->boa.cols;
    if (strength) *strength = boa->boa.strength;
    if (lambda) *lambda = boa->boa.lambda;
  });
}

boadd_status boadd_boa_entries(const boadd_boa* boa, unsigned* out, size_t count) {
  return guard([&] {
    need(boa, "boa");
    need(out, "out");
    if (count != boa->boa.entries.size()) {
      boadd::fail(boadd::ErrorKind::InvalidArgument, "count must equal n*N");
    }
    std::copy(boa->boa.entries.begin(), boa->boa.entries.end(), out);
  });
}

boadd_status boadd_boa_verify(const boadd_boa* boa, size_t strength, int* ok, char** out) {
  return guard([&] {
    need(boa, "boa");
    const auto r = boadd::verify_boa(boa->boa, strength);
    if (ok) *ok = r.boa_ok ? 1 : 0;
    if (out) *out = dup_string(report_json(r).dump(2) + "\n");
  });
}

void boadd_boa_free(boadd_boa* boa) { delete boa; }

boadd_status boadd_schedule_from_boa(const boadd_boa* boa, int d, boadd_rep_mode mode,
                                     double delta, boadd_schedule** out) {
  return guard([&] {
    need(boa, "boa");
    need(out, "out");
    if (mode != BOADD_REP_WEYL && mode != BOADD_REP_X_ONLY) {
      boadd::fail(boadd::ErrorKind::InvalidArgument, "unknown representation mode");
    }
    const boadd::RepSpec rep{d, mode == BOADD_REP_WEYL ? boadd::RepMode::weyl : boadd::RepMode::x_only};
    *out = new boadd_schedule{boadd::schedule_from_boa(boa->boa, rep, delta)};
  });
}

boadd_status boadd_schedule_symmetrize(const boadd_schedule* s, boadd_schedule** out) {
  return guard([&] {
    need(s, "schedule");
    need(out, "out");
    *out = new boadd_schedule{boadd::symmetrize(s->schedule)};
  });
}

boadd_status boadd_schedule_export(const boadd_schedule* s, const char* format, char** out) {
  return guard([&] {
    need(s, "schedule");
    need(format, "format");
    need(out, "out");
    const std::string f = format;
    if (f != "json" && f != "csv") {
      boadd::fail(boadd::ErrorKind::InvalidArgument, "format must be json or csv");
    }
    *out = dup_string(boadd::export_schedule(
        s->schedule, f == "csv" ? boadd::ScheduleFormat::csv : boadd::ScheduleFormat::json));
  });
}

boadd_status boadd_schedule_import(const char* text, boadd_schedule** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new boadd_schedule{boadd::import_schedule_json(text)};
  });
}

boadd_status boadd_schedule_load(const char* path, boadd_schedule** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new boadd_schedule{boadd::load_schedule(path)};
  });
}

boadd_status boadd_schedule_info(const boadd_schedule* s, size_t* n, size_t* slots, int* d,
                                 boadd_rep_mode* mode, int* symmetrized) {
  return guard([&] {
    need(s, "schedule");
    if (n) *n = s->schedule.n;
    if (slots) *slots = s->schedule.slots();
    if (d) *d = s->schedule.rep.d;
    if (mode) *mode = s->schedule.rep.mode == boadd::RepMode::weyl ? BOADD_REP_WEYL : BOADD_REP_X_ONLY;
    if (symmetrized) *symmetrized = s->schedule.symmetrized ? 1 : 0;
  });
}

void boadd_schedule_free(boadd_schedule* s) { delete s; }

boadd_status boadd_simulate(const boadd_schedule* s, const boadd_sim_options* options,
                            double* residual, char** out) {
  return guard([&] {
    need(s, "schedule");
    need(options, "options");
    const auto& sched = s->schedule;
    const auto rep = boadd::Representation::build(sched.rep);
    const auto h = boadd::random_local_hamiltonian(sched.n, static_cast<std::size_t>(sched.rep.d),
                                                   options->locality, options->seed,
                                                   options->diagonal != 0);
    boadd::SimOptions opt;
    opt.mode = options->mode == BOADD_SIM_PER_TERM ? boadd::SimMode::per_term : boadd::SimMode::full;
    if (options->quadrature_nodes > 0) {
      opt.method = boadd::SimMethod::quadrature;
      opt.nodes = options->quadrature_nodes;
    } else if (options->quadrature_nodes < 0) {
      boadd::fail(boadd::ErrorKind::InvalidArgument, "quadrature node count must be positive");
    }
    const auto report = boadd::decoupling_residual(h, sched, rep, opt);
    if (residual) *residual = report.residual;
    if (out) *out = dup_string(boadd::residual_json(report));
  });
}

boadd_status boadd_boa_length(int d, int k, uint64_t* out) {
  return guard([&] {
    need(out, "out");
    *out = boadd::boa_length(d, k);
  });
}

boadd_status boadd_table_text(int d, int l_min, int l_max, int k_min, int k_max, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup_string(boadd::table_text(d, l_min, l_max, k_min, k_max));
  });
}

}  // extern "C"
