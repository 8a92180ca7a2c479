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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// Exact joint counts of one or more statistics over all of S_n.
struct DistributionTable {
  int n = 0;
  std::vector<std::string> stats;
  std::map<std::vector<long long>, unsigned long long> counts;

  friend bool operator==(const DistributionTable&,
                         const DistributionTable&) = default;
};

enum class TableFormat { Json, Csv };

// des, asc, inv, maj, stat, adj, F.
std::vector<std::string> knownStatistics();
long long evaluateStatistic(const std::string& name, const Permutation& p);

// Sweeps S_n (1 <= n <= 10) in lexicographic order. Workers own contiguous
// chunks of the index range and private tallies, merged in chunk order, so
// parallel and serial runs produce identical tables.
DistributionTable distribution(const std::vector<std::string>& stats, int n,
                               int jobs = 1);

// JSON: {"n":..,"stats":[..],"rows":[{"key":[..],"count":..},..]} with rows
// sorted lexicographically by key. CSV: header of stat names plus "count",
// one row per key in the same order.
std::string exportTable(const DistributionTable& table, TableFormat format);

struct VerificationReport {
  std::string property;
  int n = 0;
  unsigned long long casesChecked = 0;
  // Lexicographically first counterexamples, at most 10; empty = verified.
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double elapsedSeconds = 0.0;

  bool passed() const { return failures.empty(); }
};

std::vector<std::string> knownProperties();

// Exhaustively checks one named property at size n (1 <= n <= 10).
VerificationReport verify(const std::string& property, int n, int jobs = 1);

std::string toJson(const VerificationReport& report);

// Lexicographic enumeration helpers.
unsigned long long factorial(int n);
Permutation nthPermutation(int n, unsigned long long rank);
unsigned long long lexRank(const Permutation& p);
void forEachPermutation(int n,
                        const std::function<void(const Permutation&)>& fn);

}  // namespace permstat
