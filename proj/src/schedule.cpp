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

#include "boadd/schedule.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boadd/error.hpp"

namespace boadd {
namespace {

using nlohmann::json;

bool is_zero(const Vec& v) {
  for (Elem x : v) {
    if (x != 0) return false;
  }
  return true;
}

void check_delta(double delta) {
  if (!(delta > 0) || !std::isfinite(delta)) {
    fail(ErrorKind::InvalidArgument, "slot duration must be positive and finite");
  }
}

Vec neg_vec(const FiniteField& f, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.neg(v[i]);
  return r;
}

}  // namespace

FieldPtr rep_field(const RepSpec& spec) {
  const auto pe = prime_power(static_cast<std::uint64_t>(spec.d));
  if (!pe || spec.d > 16) fail(ErrorKind::InvalidArgument, "unsupported qudit dimension");
  if (spec.mode == RepMode::x_only) {
    if (pe->second != 1) fail(ErrorKind::InvalidArgument, "x_only mode requires prime d");
    return FiniteField::create(pe->first, 1);
  }
  return FiniteField::create(pe->first, 2 * pe->second);
}

Vec ControlSchedule::start_frame(std::size_t j) const {
  if (!reversed.empty() && reversed[j]) return vec_sub(*field, columns[j], transitions[j]);
  return columns[j];
}

void ControlSchedule::validate() const {
  require(field != nullptr, "schedule has no field");
  require(!columns.empty(), "schedule has no slots");
  require(columns.size() == transitions.size(), "columns and transitions differ in length");
  require(reversed.empty() || reversed.size() == columns.size(), "reversed flags length mismatch");
  const auto& f = *field;
  for (std::size_t j = 0; j < slots(); ++j) {
    require(columns[j].size() == n && transitions[j].size() == n, "slot label length mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      require(f.contains(columns[j][i]) && f.contains(transitions[j][i]),
              "slot label outside the field");
    }
  }
  auto end_frame = [&](std::size_t j) {
    if (!reversed.empty() && reversed[j]) return columns[j];
    return vec_add(f, columns[j], transitions[j]);
  };
  require(is_zero(start_frame(0)), "schedule must start in the zero frame");
  for (std::size_t j = 0; j + 1 < slots(); ++j) {
    if (end_frame(j) != start_frame(j + 1)) {
      fail(ErrorKind::InvalidArgument, "frame discontinuity after slot " + std::to_string(j));
    }
  }
  require(is_zero(end_frame(slots() - 1)), "schedule must return to the zero frame");
}

ControlSchedule schedule_from_columns(FieldPtr field, const std::vector<Vec>& columns,
                                      const RepSpec& rep, double delta) {
  check_delta(delta);
  require(field != nullptr, "null field");
  require(!columns.empty(), "schedule needs at least one column");
  const auto rf = rep_field(rep);
  if (!rf->same_as(*field)) {
    fail(ErrorKind::Mismatch, "array over " + field->name() + " but representation labels live in " +
                                  rf->name());
  }
  if (!is_zero(columns.front())) fail(ErrorKind::InvalidArgument, "first column must be zero");
  ControlSchedule s;
  s.field = std::move(field);
  s.n = columns.front().size();
  s.delta = delta;
  s.rep = rep;
  s.columns = columns;
  const std::size_t N = columns.size();
  for (std::size_t j = 1; j <= N; ++j) {
    require(columns[j - 1].size() == s.n, "ragged column list");
    s.transitions.push_back(vec_sub(*s.field, columns[j % N], columns[j - 1]));
  }
  s.reversed.assign(N, false);
  s.validate();
  return s;
}

ControlSchedule schedule_from_boa(const BoaArray& boa, const RepSpec& rep, double delta) {
  std::vector<Vec> cols;
  cols.reserve(boa.cols);
  for (std::size_t j = 0; j < boa.cols; ++j) cols.push_back(boa.column(j));
  return schedule_from_columns(boa.field, cols, rep, delta);
}

ControlSchedule symmetrize(const ControlSchedule& s) {
  s.validate();
  ControlSchedule r = s;
  const auto& f = *s.field;
  const std::size_t N = s.slots();
  if (r.reversed.empty()) r.reversed.assign(N, false);
  for (std::size_t m = 0; m < N; ++m) {
    const std::size_t j = N - 1 - m;
    const bool was_reversed = !s.reversed.empty() && s.reversed[j];
    // either way the mirror image keeps the column of slot j
    r.columns.push_back(s.columns[j]);
    r.transitions.push_back(neg_vec(f, s.transitions[j]));
    r.reversed.push_back(!was_reversed);
  }
  r.symmetrized = true;
  r.validate();
  return r;
}

std::string export_schedule(const ControlSchedule& s, ScheduleFormat format) {
  s.validate();
  if (format == ScheduleFormat::csv) {
    std::ostringstream os;
    os << "qudit";
    for (std::size_t j = 1; j <= s.slots(); ++j) os << ",b" << j;
    os << '\n';
    for (std::size_t i = 0; i < s.n; ++i) {
      os << i + 1;
      for (std::size_t j = 0; j < s.slots(); ++j) os << ',' << s.transitions[j][i];
      os << '\n';
    }
    return os.str();
  }
  json j;
  j["q"] = s.field->order();
  j["n"] = s.n;
  j["N"] = s.slots();
  j["delta"] = s.delta;
  j["rep"] = {{"d", s.rep.d}, {"mode", to_string(s.rep.mode)}};
  j["columns"] = s.columns;
  j["transitions"] = s.transitions;
  j["symmetrized"] = s.symmetrized;
  if (s.symmetrized) {
    std::vector<bool> rev = s.reversed;
    j["reversed"] = rev;
  }
  return j.dump() + "\n";
}

ControlSchedule import_schedule_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("schedule JSON: ") + e.what());
  }
  try {
    ControlSchedule s;
    const auto q = j.at("q").get<std::uint64_t>();
    s.rep.d = j.at("rep").at("d").get<int>();
    s.rep.mode = rep_mode_from_string(j.at("rep").at("mode").get<std::string>());
    s.field = rep_field(s.rep);
    if (s.field->order() != q) fail(ErrorKind::Parse, "schedule JSON: q does not match rep");
    s.n = j.at("n").get<std::size_t>();
    s.delta = j.at("delta").get<double>();
    check_delta(s.delta);
    s.columns = j.at("columns").get<std::vector<Vec>>();
    s.transitions = j.at("transitions").get<std::vector<Vec>>();
    s.symmetrized = j.at("symmetrized").get<bool>();
    if (j.contains("reversed")) {
      s.reversed = j.at("reversed").get<std::vector<bool>>();
    } else {
      s.reversed.assign(s.columns.size(), false);
    }
    if (j.at("N").get<std::size_t>() != s.columns.size()) {
      fail(ErrorKind::Parse, "schedule JSON: N does not match the column count");
    }
    s.validate();
    return s;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("schedule JSON: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) fail(ErrorKind::Parse, std::string("schedule JSON: ") + e.what());
    throw;
  }
}

ControlSchedule import_schedule_csv(const std::string& text, const RepSpec& rep, double delta) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("qudit", 0) != 0) {
    fail(ErrorKind::Parse, "schedule CSV: missing header");
  }
  const auto field = rep_field(rep);
  std::vector<Vec> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');  // qudit number
    Vec row;
    while (std::getline(ls, cell, ',')) {
      try {
        const long v = std::stol(cell);
        if (v < 0 || v >= static_cast<long>(field->order())) throw std::out_of_range("entry");
        row.push_back(static_cast<Elem>(v));
      } catch (const std::exception&) {
        fail(ErrorKind::Parse, "schedule CSV: bad entry '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(ErrorKind::Parse, "schedule CSV: ragged rows");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) fail(ErrorKind::Parse, "schedule CSV: no data");
  const std::size_t n = rows.size(), N = rows.front().size();
  std::vector<Vec> cols(N, Vec(n, 0));
  for (std::size_t j = 1; j < N; ++j) {
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = field->add(cols[j - 1][i], rows[i][j - 1]);
  }
  auto s = schedule_from_columns(field, cols, rep, delta);
  if (s.transitions.back() != [&] {
        Vec t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = rows[i][N - 1];
        return t;
      }()) {
    fail(ErrorKind::Parse, "schedule CSV: transitions do not close the cycle");
  }
  return s;
}

ControlSchedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open schedule file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return import_schedule_json(ss.str());
}

}  // namespace boadd
