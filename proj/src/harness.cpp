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

#include "permstat/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"
#include "permstat/bijections.hpp"
#include "permstat/labeling.hpp"
#include "permstat/pattern.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

unsigned long long factorial(int n) {
  if (n < 0 || n > 20) {
    throw std::invalid_argument("factorial supported for 0 <= n <= 20");
  }
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

Permutation nthPermutation(int n, unsigned long long rank) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (rank >= factorial(n)) {
    throw std::invalid_argument("rank " + std::to_string(rank) +
                                " outside 0..n!-1");
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const unsigned long long f = factorial(i - 1);
    const auto d = static_cast<std::size_t>(rank / f);
    rank %= f;
    letters.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(std::move(letters));
}

unsigned long long lexRank(const Permutation& p) {
  const int n = p.size();
  unsigned long long rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smallerRight = 0;
    for (int j = i + 1; j <= n; ++j) {
      smallerRight += p.letter(j) < p.letter(i);
    }
    rank += static_cast<unsigned long long>(smallerRight) * factorial(n - i);
  }
  return rank;
}

void forEachPermutation(int n,
                        const std::function<void(const Permutation&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<int> letters(static_cast<std::size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  do {
    fn(Permutation(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
}

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

struct Chunk {
  unsigned long long begin = 0;
  unsigned long long end = 0;
};

std::vector<Chunk> chunkRanges(unsigned long long total, int jobs) {
  if (jobs < 1) jobs = 1;
  const auto workers =
      static_cast<unsigned long long>(jobs) > std::max(total, 1ULL)
          ? std::max(total, 1ULL)
          : static_cast<unsigned long long>(jobs);
  std::vector<Chunk> chunks(static_cast<std::size_t>(workers));
  for (unsigned long long w = 0; w < workers; ++w) {
    chunks[static_cast<std::size_t>(w)] = {total * w / workers,
                                           total * (w + 1) / workers};
  }
  return chunks;
}

// Visits S_domain in lexicographic order, one worker per chunk. body is
// body(chunkIndex, perm) and must only touch chunk-private state.
template <class Body>
void sweepLexicographic(int domain, const std::vector<Chunk>& chunks,
                        Body body) {
  auto runChunk = [&](std::size_t c) {
    const auto [begin, end] = chunks[c];
    if (begin >= end) return;
    std::vector<int> letters = nthPermutation(domain, begin).letters();
    for (unsigned long long r = begin; r < end; ++r) {
      body(c, Permutation(letters));
      std::next_permutation(letters.begin(), letters.end());
    }
  };
  if (chunks.size() == 1) {
    runChunk(0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunks.size());
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    threads.emplace_back(runChunk, c);
  }
  for (auto& t : threads) t.join();
}

struct SweepState {
  unsigned long long cases = 0;
  std::vector<std::string> failures;
  std::vector<unsigned long long> ranks;
  unsigned long long witnessCount = 0;
  unsigned long long witnessDomain = 0;
  std::string firstWitness;
};

void recordFailure(SweepState& state, std::string text) {
  if (state.failures.size() < kMaxCounterexamples) {
    state.failures.push_back(std::move(text));
  }
}

SweepState mergeStates(std::vector<SweepState> states) {
  SweepState merged;
  for (auto& st : states) {
    merged.cases += st.cases;
    for (auto& f : st.failures) recordFailure(merged, std::move(f));
    merged.ranks.insert(merged.ranks.end(), st.ranks.begin(), st.ranks.end());
    merged.witnessCount += st.witnessCount;
    merged.witnessDomain += st.witnessDomain;
    if (merged.firstWitness.empty()) {
      merged.firstWitness = std::move(st.firstWitness);
    }
  }
  return merged;
}

using StatFn = long long (*)(const Permutation&);

StatFn resolveStatistic(const std::string& name) {
  if (name == "des") return [](const Permutation& p) { return descentNumber(p); };
  if (name == "asc") return [](const Permutation& p) { return ascentNumber(p); };
  if (name == "inv") return [](const Permutation& p) { return inversionNumber(p); };
  if (name == "maj") return [](const Permutation& p) { return majorIndex(p); };
  if (name == "stat") return [](const Permutation& p) { return statOf(p); };
  if (name == "adj") return [](const Permutation& p) { return adjacencyCount(p); };
  if (name == "F") return [](const Permutation& p) -> long long { return p.first(); };
  return nullptr;
}

void requireSupportedSize(int n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("n must be in 1..10, got " +
                                std::to_string(n));
  }
}

long long statPatternPart(const Permutation& p) {
  static const DashedPattern acb = DashedPattern::parse("ac-b");
  static const DashedPattern bac = DashedPattern::parse("ba-c");
  static const DashedPattern cba = DashedPattern::parse("cb-a");
  return countOccurrences(acb, p) + countOccurrences(bac, p) +
         countOccurrences(cba, p);
}

long long majPatternPart(const Permutation& p) {
  static const DashedPattern acb = DashedPattern::parse("a-cb");
  static const DashedPattern bca = DashedPattern::parse("b-ca");
  static const DashedPattern cba = DashedPattern::parse("c-ba");
  return countOccurrences(acb, p) + countOccurrences(bca, p) +
         countOccurrences(cba, p);
}

}  // namespace

std::vector<std::string> knownStatistics() {
  return {"des", "asc", "inv", "maj", "stat", "adj", "F"};
}

long long evaluateStatistic(const std::string& name, const Permutation& p) {
  const StatFn fn = resolveStatistic(name);
  if (!fn) {
    throw std::invalid_argument(
        "unknown statistic '" + name +
        "' (known: des, asc, inv, maj, stat, adj, F)");
  }
  return fn(p);
}

DistributionTable distribution(const std::vector<std::string>& stats, int n,
                               int jobs) {
  requireSupportedSize(n);
  if (stats.empty()) {
    throw std::invalid_argument("at least one statistic name required");
  }
  std::vector<StatFn> fns;
  fns.reserve(stats.size());
  for (const auto& name : stats) {
    const StatFn fn = resolveStatistic(name);
    if (!fn) {
      throw std::invalid_argument(
          "unknown statistic '" + name +
          "' (known: des, asc, inv, maj, stat, adj, F)");
    }
    fns.push_back(fn);
  }

  const auto chunks = chunkRanges(factorial(n), jobs);
  std::vector<std::map<std::vector<long long>, unsigned long long>> tallies(
      chunks.size());
  sweepLexicographic(n, chunks, [&](std::size_t c, const Permutation& p) {
    std::vector<long long> key(fns.size());
    for (std::size_t s = 0; s < fns.size(); ++s) key[s] = fns[s](p);
    ++tallies[c][key];
  });

  DistributionTable table;
  table.n = n;
  table.stats = stats;
  for (auto& tally : tallies) {
    for (auto& [key, count] : tally) table.counts[key] += count;
  }
  return table;
}

std::string exportTable(const DistributionTable& table, TableFormat format) {
  if (format == TableFormat::Csv) {
    std::string out;
    for (std::size_t s = 0; s < table.stats.size(); ++s) {
      if (s > 0) out.push_back(',');
      out += table.stats[s];
    }
    out += ",count\n";
    for (const auto& [key, count] : table.counts) {
      for (std::size_t s = 0; s < key.size(); ++s) {
        if (s > 0) out.push_back(',');
        out += std::to_string(key[s]);
      }
      out.push_back(',');
      out += std::to_string(count);
      out.push_back('\n');
    }
    return out;
  }
  nlohmann::ordered_json j;
  j["n"] = table.n;
  j["stats"] = table.stats;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [key, count] : table.counts) {
    rows.push_back({{"key", key}, {"count", count}});
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::vector<std::string> knownProperties() {
  return {"involution",        "preserve-des-F",  "maj-stat-swap",
          "carlitz-transport", "burstein-5tuple", "additivity-inv",
          "additivity-maj",    "additivity-stat", "label-sum",
          "abcd-multiset",     "anchored-identity", "eq-star-star",
          "equidist-des-stat-maj", "firstmax-relations"};
}

VerificationReport verify(const std::string& property, int n, int jobs) {
  requireSupportedSize(n);
  const auto startedAt = std::chrono::steady_clock::now();
  VerificationReport report;
  report.property = property;
  report.n = n;

  // Predicate over all of S_n; counterexample = the permutation itself.
  const auto sweepAll = [&](auto&& check) {
    const auto chunks = chunkRanges(factorial(n), jobs);
    std::vector<SweepState> states(chunks.size());
    sweepLexicographic(n, chunks, [&](std::size_t c, const Permutation& p) {
      ++states[c].cases;
      if (!check(p)) recordFailure(states[c], p.str());
    });
    return mergeStates(std::move(states));
  };

  // Predicate over {p in S_n : p_1 = n}, enumerated as n prepended to every
  // tail in S_{n-1}.
  const auto sweepFirstMax = [&](auto&& check) {
    const auto chunks = chunkRanges(factorial(n - 1), jobs);
    std::vector<SweepState> states(chunks.size());
    sweepLexicographic(
        n - 1, chunks, [&](std::size_t c, const Permutation& tail) {
          std::vector<int> letters;
          letters.reserve(static_cast<std::size_t>(n));
          letters.push_back(n);
          letters.insert(letters.end(), tail.letters().begin(),
                         tail.letters().end());
          const Permutation p(std::move(letters));
          ++states[c].cases;
          if (!check(p)) recordFailure(states[c], p.str());
        });
    return mergeStates(std::move(states));
  };

  // Additivity of a statistic under insertMax over sigma in S_{n-1} and all
  // labels 0..n-1.
  const auto sweepAdditivity = [&](Scheme scheme, StatFn measure) {
    const auto chunks = chunkRanges(factorial(n - 1), jobs);
    std::vector<SweepState> states(chunks.size());
    sweepLexicographic(
        n - 1, chunks, [&](std::size_t c, const Permutation& sigma) {
          const long long base = measure(sigma);
          for (int label = 0; label < n; ++label) {
            ++states[c].cases;
            if (measure(insertMax(scheme, label, sigma)) != base + label) {
              recordFailure(states[c], "sigma=" + sigma.str() +
                                           " label=" + std::to_string(label));
            }
          }
        });
    return mergeStates(std::move(states));
  };

  const auto finish = [&](SweepState merged) {
    report.casesChecked = merged.cases;
    report.failures = std::move(merged.failures);
  };

  if (property == "involution") {
    finish(sweepAll([](const Permutation& p) { return rho(rho(p)) == p; }));
  } else if (property == "preserve-des-F") {
    finish(sweepAll([](const Permutation& p) {
      const Permutation r = rho(p);
      return r.first() == p.first() &&
             descentNumber(r) == descentNumber(p);
    }));
  } else if (property == "maj-stat-swap") {
    finish(sweepAll([](const Permutation& p) {
      const Permutation r = rho(p);
      return majorIndex(r) == statOf(p) && statOf(r) == majorIndex(p);
    }));
  } else if (property == "carlitz-transport") {
    const auto chunks = chunkRanges(factorial(n), jobs);
    std::vector<SweepState> states(chunks.size());
    sweepLexicographic(n, chunks, [&](std::size_t c, const Permutation& p) {
      ++states[c].cases;
      const Permutation image = carlitz(p);
      if (majorIndex(image) != inversionNumber(p)) {
        recordFailure(states[c], p.str());
      }
      states[c].ranks.push_back(lexRank(image));
    });
    SweepState merged = mergeStates(std::move(states));
    std::sort(merged.ranks.begin(), merged.ranks.end());
    bool distinct = true;
    for (std::size_t i = 1; i < merged.ranks.size(); ++i) {
      if (merged.ranks[i] == merged.ranks[i - 1]) {
        distinct = false;
        recordFailure(merged, "duplicate image " +
                                  nthPermutation(n, merged.ranks[i]).str());
        break;
      }
    }
    merged.ranks.clear();
    report.notes.push_back(distinct
                               ? "image permutations pairwise distinct"
                               : "image permutations collide");
    finish(std::move(merged));
  } else if (property == "burstein-5tuple") {
    finish(sweepAll([](const Permutation& p) {
      const StatVector a = statVector(p);
      const StatVector b = statVector(burstein(p));
      return a.adj == b.adj && a.des == b.des && a.first == b.first &&
             a.maj == b.stat && a.stat == b.maj;
    }));
  } else if (property == "additivity-inv" || property == "additivity-maj") {
    if (n < 2) {
      report.notes.push_back("empty domain: no insertions at n=1");
    } else if (property == "additivity-inv") {
      finish(sweepAdditivity(Scheme::Inv, [](const Permutation& p) {
        return inversionNumber(p);
      }));
    } else {
      finish(sweepAdditivity(
          Scheme::Maj, [](const Permutation& p) { return majorIndex(p); }));
    }
  } else if (property == "additivity-stat") {
    if (n < 2) {
      report.notes.push_back("empty domain: no insertions at n=1");
    } else {
      const auto chunks = chunkRanges(factorial(n - 1), jobs);
      std::vector<SweepState> states(chunks.size());
      sweepLexicographic(
          n - 1, chunks, [&](std::size_t c, const Permutation& sigma) {
            const long long base = statOf(sigma);
            const long long excluded = descentNumber(sigma) + 1;
            for (int label = 0; label < n; ++label) {
              ++states[c].cases;
              const bool additive =
                  statOf(insertMax(Scheme::Stat, label, sigma)) ==
                  base + label;
              if (label == excluded) {
                ++states[c].witnessDomain;
                if (!additive) {
                  ++states[c].witnessCount;
                  if (states[c].firstWitness.empty()) {
                    states[c].firstWitness = "sigma=" + sigma.str() +
                                             " label=" +
                                             std::to_string(label);
                  }
                }
              } else if (!additive) {
                recordFailure(states[c],
                              "sigma=" + sigma.str() +
                                  " label=" + std::to_string(label));
              }
            }
          });
      SweepState merged = mergeStates(std::move(states));
      if (merged.witnessCount > 0) {
        report.notes.push_back(
            "excluded label des(sigma)+1: additivity violated for " +
            std::to_string(merged.witnessCount) + " of " +
            std::to_string(merged.witnessDomain) +
            " insertions; first witness " + merged.firstWitness);
      } else {
        report.notes.push_back(
            "excluded label des(sigma)+1: no violation among " +
            std::to_string(merged.witnessDomain) + " insertions at n=" +
            std::to_string(n));
      }
      finish(std::move(merged));
    }
  } else if (property == "label-sum") {
    finish(sweepAll([](const Permutation& p) {
      const std::vector<int> f = makeLabeling(Scheme::Maj, p);
      const std::vector<int> h = makeLabeling(Scheme::Stat, p);
      const int m = p.size();
      const long long d = descentNumber(p);
      std::vector<char> isDescent(static_cast<std::size_t>(m) + 1, 0);
      for (int i : descents(p)) isDescent[static_cast<std::size_t>(i)] = 1;
      for (int s = 0; s <= m; ++s) {
        long long expected;
        if (s == 0) {
          expected = 2 * d + 2;
        } else if (s == m || isDescent[static_cast<std::size_t>(s)]) {
          expected = d;
        } else {
          expected = m + d + 2;
        }
        if (f[static_cast<std::size_t>(s)] + h[static_cast<std::size_t>(s)] !=
            expected) {
          return false;
        }
      }
      return true;
    }));
  } else if (property == "abcd-multiset") {
    finish(sweepFirstMax([](const Permutation& p) {
      const MultisetQuadruple q = computeABCD(p);
      std::vector<int> lhs = q.a;
      lhs.insert(lhs.end(), q.b.begin(), q.b.end());
      std::vector<int> rhs = q.c;
      rhs.insert(rhs.end(), q.d.begin(), q.d.end());
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      return lhs == rhs;
    }));
  } else if (property == "anchored-identity") {
    finish(sweepFirstMax(
        [](const Permutation& p) { return checkAnchoredIdentity(p); }));
  } else if (property == "eq-star-star") {
    finish(sweepFirstMax([](const Permutation& p) {
      return statPatternPart(p) == majPatternPart(prefixTransform(p));
    }));
  } else if (property == "equidist-des-stat-maj") {
    const DistributionTable lhs = distribution({"des", "stat"}, n, jobs);
    const DistributionTable rhs = distribution({"des", "maj"}, n, jobs);
    report.casesChecked = factorial(n);
    if (lhs.counts != rhs.counts) {
      auto keys = lhs.counts;
      for (const auto& [key, count] : rhs.counts) keys.try_emplace(key, 0);
      for (const auto& [key, unused] : keys) {
        const auto l = lhs.counts.find(key);
        const auto r = rhs.counts.find(key);
        const unsigned long long lc = l == lhs.counts.end() ? 0 : l->second;
        const unsigned long long rc = r == rhs.counts.end() ? 0 : r->second;
        if (lc != rc && report.failures.size() < kMaxCounterexamples) {
          report.failures.push_back(
              "key=[" + std::to_string(key[0]) + "," +
              std::to_string(key[1]) + "] des-stat=" + std::to_string(lc) +
              " des-maj=" + std::to_string(rc));
        }
      }
    }
  } else if (property == "firstmax-relations") {
    finish(sweepFirstMax(
        [](const Permutation& p) { return checkFirstMaxRelations(p); }));
    // Empirical status of the closing relation over all first letters;
    // reported only, never asserted.
    const auto chunks = chunkRanges(factorial(n), jobs);
    std::vector<SweepState> states(chunks.size());
    sweepLexicographic(n, chunks, [&](std::size_t c, const Permutation& p) {
      ++states[c].witnessDomain;
      const long long rhs =
          static_cast<long long>(n + 1) * descentNumber(p) - (p.first() - 1);
      if (majorIndex(p) + statOf(p) == rhs) ++states[c].witnessCount;
    });
    const SweepState general = mergeStates(std::move(states));
    report.notes.push_back(
        "maj+stat=(n+1)des-(F-1) held for " +
        std::to_string(general.witnessCount) + " of " +
        std::to_string(general.witnessDomain) +
        " permutations across all first letters (reported, not asserted)");
  } else {
    std::string known;
    for (const auto& name : knownProperties()) {
      if (!known.empty()) known += ", ";
      known += name;
    }
    throw std::invalid_argument("unknown property '" + property +
                                "' (known: " + known + ")");
  }

  report.elapsedSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    startedAt)
          .count();
  return report;
}

std::string toJson(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["property"] = report.property;
  j["n"] = report.n;
  j["casesChecked"] = report.casesChecked;
  j["failures"] = report.failures;
  j["notes"] = report.notes;
  j["elapsedSeconds"] = report.elapsedSeconds;
  j["passed"] = report.passed();
  return j.dump();
}

}  // namespace permstat
