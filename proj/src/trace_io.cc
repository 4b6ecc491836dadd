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

#include "crossgame/trace_io.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crossgame {

namespace {
constexpr const char* kHeader = "iter,vf_evals,method,distance";
}  // namespace

void WriteTracesCsv(std::ostream& out, const std::vector<LabeledTrace>& series) {
  out << kHeader << '\n';
  char buf[64];
  for (const LabeledTrace& s : series) {
    if (s.label.find_first_of(",\n\"") != std::string::npos) {
      throw std::invalid_argument("trace label must not contain commas, quotes or newlines");
    }
    for (std::size_t t = 0; t < s.trace.distances.size(); ++t) {
      std::snprintf(buf, sizeof(buf), "%.16e", s.trace.distances[t]);
      out << t << ',' << s.trace.vf_evals[t] << ',' << s.label << ',' << buf << '\n';
    }
  }
}

void WriteTracesCsvFile(const std::string& path,
                        const std::vector<LabeledTrace>& series) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  WriteTracesCsv(out, series);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<CsvRow> ReadTracesCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("trace csv: unexpected header");
  }
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string iter, evals, method, dist;
    if (!std::getline(fields, iter, ',') || !std::getline(fields, evals, ',') ||
        !std::getline(fields, method, ',') || !std::getline(fields, dist)) {
      throw std::runtime_error("trace csv: malformed row '" + line + "'");
    }
    CsvRow row;
    try {
      row.iter = std::stoi(iter);
      row.vf_evals = std::stoll(evals);
    } catch (const std::exception&) {
      throw std::runtime_error("trace csv: malformed row '" + line + "'");
    }
    row.method = method;
    char* end = nullptr;
    row.distance = std::strtod(dist.c_str(), &end);
    if (end == dist.c_str()) throw std::runtime_error("trace csv: bad distance '" + dist + "'");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace crossgame
