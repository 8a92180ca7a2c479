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

#include "permstat/bijections.hpp"

#include <stdexcept>
#include <utility>

#include "permstat/labeling.hpp"
#include "permstat/pattern.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

Permutation carlitz(const Permutation& p) {
  return decode(Scheme::Maj, codeOf(Scheme::Inv, p));
}

Permutation rho(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("empty permutation");
  const int n = p.size();
  const int k = p.first();
  const CodeWord statTable = codeOf(Scheme::Stat, p);
  Permutation sigma = prefixTransform(p.restrictTo(k));
  for (int i = k + 1; i <= n; ++i) {
    sigma = insertMax(Scheme::Maj,
                      statTable.digits()[static_cast<std::size_t>(i) - 1],
                      sigma);
  }
  return sigma;
}

InsertionTrace rhoTraced(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("empty permutation");
  const int n = p.size();
  const int k = p.first();
  const CodeWord statTable = codeOf(Scheme::Stat, p);
  InsertionTrace trace;
  trace.steps.reserve(static_cast<std::size_t>(n - k) + 1);
  Permutation sigma = prefixTransform(p.restrictTo(k));
  trace.steps.push_back({k, statTable.digits()[static_cast<std::size_t>(k) - 1],
                         p.restrictTo(k), sigma});
  for (int i = k + 1; i <= n; ++i) {
    const int digit = statTable.digits()[static_cast<std::size_t>(i) - 1];
    sigma = insertMax(Scheme::Maj, digit, sigma);
    trace.steps.push_back({i, digit, p.restrictTo(i), sigma});
  }
  return trace;
}

Permutation burstein(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("empty permutation");
  const int n = p.size();
  const int k = p.first();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(k);
  for (int i = 2; i <= n; ++i) {
    const int v = p.letter(n + 2 - i);
    out.push_back(v < k ? k - v : n + k + 1 - v);
  }
  return Permutation(std::move(out));
}

InsertionTrace carlitzTraced(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("empty permutation");
  const int n = p.size();
  const CodeWord invTable = codeOf(Scheme::Inv, p);
  InsertionTrace trace;
  trace.steps.reserve(static_cast<std::size_t>(n));
  Permutation sigma({1});
  trace.steps.push_back({1, 0, p.restrictTo(1), sigma});
  for (int i = 2; i <= n; ++i) {
    const int digit = invTable.digits()[static_cast<std::size_t>(i) - 1];
    sigma = insertMax(Scheme::Maj, digit, sigma);
    trace.steps.push_back({i, digit, p.restrictTo(i), sigma});
  }
  return trace;
}

bool checkFirstMaxRelations(const Permutation& p) {
  const int n = p.size();
  if (n == 0 || p.first() != n) {
    throw std::invalid_argument("requires the first letter to equal n");
  }
  const Permutation sigma = rho(p);
  const long long rhs =
      static_cast<long long>(n + 1) * descentNumber(p) - (p.first() - 1);
  return majorIndex(p) + statOf(p) == rhs &&
         majorIndex(p) + majorIndex(sigma) == rhs && sigma == burstein(p);
}

BijectionMap bijectionFromName(std::string_view name) {
  if (name == "rho") return BijectionMap::Rho;
  if (name == "carlitz") return BijectionMap::Carlitz;
  if (name == "burstein") return BijectionMap::Burstein;
  throw std::invalid_argument("unknown map '" + std::string(name) +
                              "' (known: rho, carlitz, burstein)");
}

std::string_view bijectionName(BijectionMap map) {
  switch (map) {
    case BijectionMap::Rho:
      return "rho";
    case BijectionMap::Carlitz:
      return "carlitz";
    case BijectionMap::Burstein:
      return "burstein";
  }
  throw std::invalid_argument("invalid map value");
}

BijectionReport applyBijection(BijectionMap map, const Permutation& p) {
  BijectionReport report;
  report.input = p;
  switch (map) {
    case BijectionMap::Rho:
      report.output = rho(p);
      break;
    case BijectionMap::Carlitz:
      report.output = carlitz(p);
      break;
    case BijectionMap::Burstein:
      report.output = burstein(p);
      break;
  }
  report.inputStats = statVector(report.input);
  report.outputStats = statVector(report.output);
  return report;
}

}  // namespace permstat
