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

#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// All direct statistics of one permutation. `stat` is the pattern
// combination (ac-b)+(ba-c)+(cb-a)+(ba), evaluated by the pattern engine.
struct StatVector {
  long long des = 0;
  long long asc = 0;
  long long inv = 0;
  long long maj = 0;
  long long stat = 0;
  long long adj = 0;
  int first = 0;

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

// Positions i in [1, n-1] with p_i > p_{i+1} (resp. p_i < p_{i+1}), in
// ascending order. Their disjoint union is [1, n-1].
std::vector<int> descents(const Permutation& p);
std::vector<int> ascents(const Permutation& p);

long long descentNumber(const Permutation& p);
long long ascentNumber(const Permutation& p);

// |{(i, j) : i < j, p_i > p_j}|.
long long inversionNumber(const Permutation& p);

// Sum of the descent positions.
long long majorIndex(const Permutation& p);

// |{i in [1, n] : p_i - p_{i+1} = 1}| with the sentinel p_{n+1} = 0, so a
// trailing 1 counts.
long long adjacencyCount(const Permutation& p);

StatVector statVector(const Permutation& p);

}  // namespace permstat
