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

#include "crossgame/game_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace crossgame {
namespace {

using nlohmann::json;

void AppendArray(std::string& out, std::span<const double> values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += FormatReal(values[i]);
  }
  out += ']';
}

std::vector<double> ReadReals(const json& node, std::size_t expected,
                              const char* what) {
  if (!node.is_array() || node.size() != expected) {
    throw std::runtime_error(std::string("game file: '") + what +
                             "' must be an array of length " +
                             std::to_string(expected));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const json& v : node) {
    if (!v.is_number()) {
      throw std::runtime_error(std::string("game file: non-numeric entry in '") +
                               what + "'");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

Matrix Slice(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t rows,
             std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = a(r0 + r, c0 + c);
  }
  return out;
}

}  // namespace

std::string FormatReal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string GameToJson(const QuadraticGame& g) {
  std::string out = "{\n";
  out += "  \"dim\": " + std::to_string(g.dim()) + ",\n";
  out += "  \"d1\": " + std::to_string(g.d1) + ",\n";
  out += "  \"d2\": " + std::to_string(g.d2) + ",\n";
  out += "  \"mu\": " + FormatReal(g.model.mu) + ",\n";
  out += "  \"L\": " + FormatReal(g.model.L) + ",\n";
  out += "  \"c\": " + FormatReal(g.model.c) + ",\n";
  out += "  \"c_prime\": " + FormatReal(g.model.c_prime) + ",\n";
  out += "  \"seed\": " + std::to_string(g.seed) + ",\n";
  out += "  \"A\": [\n";
  for (std::size_t r = 0; r < g.A.rows(); ++r) {
    out += "    ";
    AppendArray(out, g.A.row(r));
    out += r + 1 < g.A.rows() ? ",\n" : "\n";
  }
  out += "  ],\n  \"b\": ";
  AppendArray(out, g.b.values());
  out += ",\n  \"w_star\": ";
  AppendArray(out, g.w_star.values());
  out += ",\n  \"eigenvalues\": [\n";
  const auto& eig = g.declared.eigenvalues();
  for (std::size_t i = 0; i < eig.size(); ++i) {
    out += "    {\"re\": " + FormatReal(eig[i].real()) +
           ", \"im\": " + FormatReal(eig[i].imag()) + "}";
    out += i + 1 < eig.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

QuadraticGame GameFromJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("game file: ") + e.what());
  }
  for (const char* key : {"dim", "d1", "d2", "mu", "L", "c", "c_prime", "seed",
                          "A", "b", "w_star", "eigenvalues"}) {
    if (!doc.contains(key)) {
      throw std::runtime_error(std::string("game file: missing key '") + key + "'");
    }
  }
  QuadraticGame g;
  const int dim = doc["dim"].get<int>();
  g.d1 = doc["d1"].get<int>();
  g.d2 = doc["d2"].get<int>();
  if (dim <= 0 || g.d1 <= 0 || g.d2 < 0 || g.d1 + g.d2 != dim) {
    throw std::runtime_error("game file: inconsistent dimensions");
  }
  g.model = SpectrumModel{doc["mu"].get<double>(), doc["L"].get<double>(),
                          doc["c"].get<double>(), doc["c_prime"].get<double>()};
  g.seed = doc["seed"].get<std::uint64_t>();

  const std::size_t d = dim;
  const json& rows = doc["A"];
  if (!rows.is_array() || rows.size() != d) {
    throw std::runtime_error("game file: 'A' must have dim rows");
  }
  std::vector<double> entries;
  entries.reserve(d * d);
  for (const json& row : rows) {
    std::vector<double> r = ReadReals(row, d, "A");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  g.A = Matrix(d, d, std::move(entries));
  g.b = Vector(ReadReals(doc["b"], d, "b"));
  g.w_star = Vector(ReadReals(doc["w_star"], d, "w_star"));

  std::vector<Complex> eig;
  for (const json& e : doc["eigenvalues"]) {
    eig.emplace_back(e.at("re").get<double>(), e.at("im").get<double>());
  }
  try {
    g.declared = Spectrum(std::move(eig));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("game file: ") + e.what());
  }

  const std::size_t d1 = g.d1;
  const std::size_t d2 = g.d2;
  g.S1 = Slice(g.A, 0, 0, d1, d1);
  g.M12 = Slice(g.A, 0, d1, d1, d2);
  g.M21 = Slice(g.A, d1, 0, d2, d1);
  g.S2 = Slice(g.A, d1, d1, d2, d2);
  return g;
}

void SaveGame(const QuadraticGame& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << GameToJson(g);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

QuadraticGame LoadGame(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return GameFromJson(buf.str());
}

}  // namespace crossgame
