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

#include "permstat/statistics.hpp"

#include <stdexcept>

#include "permstat/pattern.hpp"

namespace permstat {

std::vector<int> descents(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (p.letter(i) > p.letter(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> ascents(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (p.letter(i) < p.letter(i + 1)) out.push_back(i);
  }
  return out;
}

long long descentNumber(const Permutation& p) {
  long long count = 0;
  for (int i = 1; i < p.size(); ++i) count += p.letter(i) > p.letter(i + 1);
  return count;
}

long long ascentNumber(const Permutation& p) {
  long long count = 0;
  for (int i = 1; i < p.size(); ++i) count += p.letter(i) < p.letter(i + 1);
  return count;
}

long long inversionNumber(const Permutation& p) {
  long long count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      count += p.letter(i) > p.letter(j);
    }
  }
  return count;
}

long long majorIndex(const Permutation& p) {
  long long sum = 0;
  for (int i = 1; i < p.size(); ++i) {
    if (p.letter(i) > p.letter(i + 1)) sum += i;
  }
  return sum;
}

long long adjacencyCount(const Permutation& p) {
  const int n = p.size();
  long long count = 0;
  for (int i = 1; i <= n; ++i) {
    const int next = (i == n) ? 0 : p.letter(i + 1);
    count += (p.letter(i) - next == 1);
  }
  return count;
}

StatVector statVector(const Permutation& p) {
  if (p.empty()) {
    throw std::invalid_argument("statistics require a nonempty permutation");
  }
  StatVector v;
  v.des = descentNumber(p);
  v.asc = ascentNumber(p);
  v.inv = inversionNumber(p);
  v.maj = majorIndex(p);
  v.stat = statOf(p);
  v.adj = adjacencyCount(p);
  v.first = p.first();
  return v;
}

}  // namespace permstat
