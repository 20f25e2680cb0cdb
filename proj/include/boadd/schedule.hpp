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

#pragma once

#include <string>
#include <vector>

#include "boadd/boa.hpp"
#include "boadd/pauli_rep.hpp"

namespace boadd {

/**
 * Piecewise control schedule. Slot j has a column (a frame label) and a
 * transition. A forward slot starts in frame `columns[j]` and ends in
 * `columns[j] + transitions[j]`. A reversed slot runs a forward slot
 * backwards in time: it starts in `columns[j] - transitions[j]`, ends in
 * `columns[j]`, and uses the negated generator of -transitions[j].
 */
struct ControlSchedule {
  FieldPtr field;
  std::size_t n = 0;
  double delta = 1.0;
  std::vector<Vec> columns;
  std::vector<Vec> transitions;
  std::vector<bool> reversed;
  RepSpec rep;
  bool symmetrized = false;

  std::size_t slots() const { return columns.size(); }
  double cycle_time() const { return delta * static_cast<double>(slots()); }
  /// Frame at the start of slot j.
  Vec start_frame(std::size_t j) const;
  /// Throws Error(InvalidArgument) if frames are discontinuous or the
  /// schedule does not start and end in the zero frame.
  void validate() const;
};

/// Field of order q for the representation (d^2 for weyl, d for x_only).
FieldPtr rep_field(const RepSpec& spec);

/// b_j = a_j - a_{j-1} with a_N = a_0 = 0.
ControlSchedule schedule_from_boa(const BoaArray& boa, const RepSpec& rep, double delta = 1.0);
/// Same construction from an explicit column list (first column zero).
ControlSchedule schedule_from_columns(FieldPtr field, const std::vector<Vec>& columns,
                                      const RepSpec& rep, double delta = 1.0);

/// Appends the time-reversed schedule; the column list becomes a palindrome.
ControlSchedule symmetrize(const ControlSchedule& s);

enum class ScheduleFormat { json, csv };

std::string export_schedule(const ControlSchedule& s, ScheduleFormat format);
ControlSchedule import_schedule_json(const std::string& text);
/// Rebuilds a forward schedule from the transition table.
ControlSchedule import_schedule_csv(const std::string& text, const RepSpec& rep, double delta);
ControlSchedule load_schedule(const std::string& path);

}  // namespace boadd
