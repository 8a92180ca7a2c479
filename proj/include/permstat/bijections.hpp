// Copyright 2026 The permstat Authors.
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

#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

enum class BijectionMap { Rho, Carlitz, Burstein };

// "rho" | "carlitz" | "burstein"; throws std::invalid_argument otherwise.
BijectionMap bijectionFromName(std::string_view name);
std::string_view bijectionName(BijectionMap map);

// Carlitz's map: decodes the inversion table through the maj insertion
// scheme, so maj(carlitz(p)) = inv(p). A bijection on S_n.
Permutation carlitz(const Permutation& p);

// The involution that preserves des and F and exchanges maj with stat: the
// restriction to the letters up to k = F(p) is prefix-transformed, then the
// remaining letters are re-inserted through the maj labeling driven by the
// stat table of p.
Permutation rho(const Permutation& p);

// Burstein's map: the first letter k is kept; position i (i >= 2) receives
// k - p(n+2-i) when p(n+2-i) < k and n + k + 1 - p(n+2-i) otherwise.
// Preserves adj, des and F and exchanges maj with stat.
Permutation burstein(const Permutation& p);

// One step of a traced insertion chain: after step `step` the image uses
// the letters 1..step.
struct TraceStep {
  int step = 0;        // current size i
  int digit = 0;       // code digit attached to this row
  Permutation source;  // input restricted to the letters 1..i
  Permutation image;   // image built so far

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct InsertionTrace {
  std::vector<TraceStep> steps;

  const Permutation& result() const { return steps.back().image; }
};

// Rows i = F(p)..n; the first row holds the prefix transform, later rows one
// maj insertion each. Every row also carries the stat-table digit s_i.
InsertionTrace rhoTraced(const Permutation& p);

// Rows i = 1..n; row i holds the inversion-table digit c_i and the maj
// insertion chain built from it.
InsertionTrace carlitzTraced(const Permutation& p);

// For p in S_n whose first letter is n, checks
//
//   maj(p) + stat(p)      == (n+1) des(p) - (F(p) - 1)
//   maj(p) + maj(rho(p))  == (n+1) des(p) - (F(p) - 1)
//   rho(p)                == burstein(p)
//
// Throws std::invalid_argument when the first letter is not maximal.
bool checkFirstMaxRelations(const Permutation& p);

// Response envelope: the image of one map together with both statistic
// vectors.
struct BijectionReport {
  Permutation input;
  Permutation output;
  StatVector inputStats;
  StatVector outputStats;

  friend bool operator==(const BijectionReport&,
                         const BijectionReport&) = default;
};

BijectionReport applyBijection(BijectionMap map, const Permutation& p);

}  // namespace permstat
