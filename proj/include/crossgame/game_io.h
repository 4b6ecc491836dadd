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

#ifndef CROSSGAME_GAME_IO_H_
#define CROSSGAME_GAME_IO_H_

#include <string>

#include "crossgame/gamegen.h"

namespace crossgame {

// Game file: a JSON object with keys
//   dim, d1, d2, mu, L, c, c_prime, seed, A (array of rows), b, w_star,
//   eigenvalues (array of {"re", "im"}).
// Reals are written with 17 significant digits so a reload is value-exact.
std::string GameToJson(const QuadraticGame& g);

// Throws std::runtime_error on malformed or inconsistent input. The loaded
// game has no basis or block list; the partition is sliced from A.
QuadraticGame GameFromJson(const std::string& text);

void SaveGame(const QuadraticGame& g, const std::string& path);
QuadraticGame LoadGame(const std::string& path);

// "%.17g" rendering of a double.
std::string FormatReal(double x);

}  // namespace crossgame

#endif  // CROSSGAME_GAME_IO_H_
