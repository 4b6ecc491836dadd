// Copyright 2026 The crossgame Authors.
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

#ifndef CROSSGAME_TRACE_IO_H_
#define CROSSGAME_TRACE_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "crossgame/optimizers.h"

namespace crossgame {

struct LabeledTrace {
  std::string label;
  RunTrace trace;
};

// CSV with header `iter,vf_evals,method,distance`. Rows are grouped by
// series in the given order, then by iteration; distances are absolute and
// printed with 17 significant digits ("%.16e").
void WriteTracesCsv(std::ostream& out, const std::vector<LabeledTrace>& series);
void WriteTracesCsvFile(const std::string& path,
                        const std::vector<LabeledTrace>& series);

struct CsvRow {
  int iter = 0;
  long long vf_evals = 0;
  std::string method;
  double distance = 0.0;
};
// Throws std::runtime_error on a malformed header or row.
std::vector<CsvRow> ReadTracesCsv(std::istream& in);

}  // namespace crossgame

#endif  // CROSSGAME_TRACE_IO_H_
