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

#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "permstat/harness.hpp"
#include "permstat/permutation.hpp"
#include "permstat/statistics.hpp"

using permstat::DistributionTable;
using permstat::distribution;
using permstat::Permutation;
using permstat::VerificationReport;
using permstat::verify;

TEST_CASE("factorial, ranking and unranking") {
  CHECK(permstat::factorial(0) == 1);
  CHECK(permstat::factorial(5) == 120);
  CHECK(permstat::factorial(10) == 3628800);

  CHECK(permstat::nthPermutation(3, 0).str() == "123");
  CHECK(permstat::nthPermutation(3, 5).str() == "321");
  CHECK_THROWS_AS(permstat::nthPermutation(3, 6), std::invalid_argument);

  // Enumeration is lexicographic and rank-consistent.
  unsigned long long rank = 0;
  permstat::forEachPermutation(5, [&](const Permutation& p) {
    CHECK(permstat::lexRank(p) == rank);
    CHECK(permstat::nthPermutation(5, rank) == p);
    ++rank;
  });
  CHECK(rank == 120);
}

TEST_CASE("statistic evaluation by name") {
  const auto p = Permutation::parse("52718346");
  CHECK(permstat::evaluateStatistic("des", p) == 3);
  CHECK(permstat::evaluateStatistic("asc", p) == 4);
  CHECK(permstat::evaluateStatistic("maj", p) == 9);
  CHECK(permstat::evaluateStatistic("stat", p) == 14);
  CHECK(permstat::evaluateStatistic("F", p) == 5);
  CHECK_THROWS_AS(permstat::evaluateStatistic("mad", p),
                  std::invalid_argument);
  CHECK(permstat::knownStatistics().size() == 7);
}

TEST_CASE("distribution of inv at n=3 is the q-factorial") {
  const auto table = distribution({"inv"}, 3);
  CHECK(table.counts.size() == 4);
  CHECK(table.counts.at({0}) == 1);
  CHECK(table.counts.at({1}) == 2);
  CHECK(table.counts.at({2}) == 2);
  CHECK(table.counts.at({3}) == 1);
}

TEST_CASE("distribution joins stats and counts always sum to n!") {
  for (int n = 1; n <= 5; ++n) {
    const auto table = distribution({"des", "stat"}, n);
    unsigned long long total = 0;
    for (const auto& [key, count] : table.counts) total += count;
    CHECK(total == permstat::factorial(n));
  }
}

TEST_CASE("des-stat and des-maj distributions coincide") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(distribution({"des", "stat"}, n).counts ==
          distribution({"des", "maj"}, n).counts);
  }
}

TEST_CASE("the 5-tuple distribution is symmetric under swapping maj and stat") {
  for (int n = 1; n <= 5; ++n) {
    const auto table = distribution({"adj", "des", "F", "maj", "stat"}, n);
    auto swapped = table.counts;
    swapped.clear();
    for (const auto& [key, count] : table.counts) {
      swapped[{key[0], key[1], key[2], key[4], key[3]}] += count;
    }
    CHECK(table.counts == swapped);
  }
}

TEST_CASE("total major index matches the symmetry formula") {
  // The complement p_i -> n+1-p_i exchanges ascents and descents, pairing
  // each permutation with one whose maj is n(n-1)/2 - maj + des-sum
  // adjustment; summed over S_n the average maj is n(n-1)/4.
  for (int n = 2; n <= 6; ++n) {
    const auto table = distribution({"maj"}, n);
    long long sum = 0;
    for (const auto& [key, count] : table.counts) {
      sum += key[0] * static_cast<long long>(count);
    }
    CHECK(sum == static_cast<long long>(permstat::factorial(n)) * n *
                     (n - 1) / 4);
  }
}

TEST_CASE("distribution validates input") {
  CHECK_THROWS_AS(distribution({"des"}, 0), std::invalid_argument);
  CHECK_THROWS_AS(distribution({"des"}, 11), std::invalid_argument);
  CHECK_THROWS_AS(distribution({"bogus"}, 3), std::invalid_argument);
  CHECK_THROWS_AS(distribution({}, 3), std::invalid_argument);
}

TEST_CASE("csv export") {
  CHECK(permstat::exportTable(distribution({"des"}, 2),
                              permstat::TableFormat::Csv) ==
        "des,count\n0,1\n1,1\n");
  CHECK(permstat::exportTable(distribution({"des", "maj"}, 2),
                              permstat::TableFormat::Csv) ==
        "des,maj,count\n0,0,1\n1,1,1\n");
}

TEST_CASE("json export and round trip") {
  const auto table = distribution({"inv"}, 3);
  const auto text =
      permstat::exportTable(table, permstat::TableFormat::Json);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["n"] == 3);
  CHECK(j["stats"] == std::vector<std::string>{"inv"});
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][0]["key"] == std::vector<long long>{0});
  CHECK(j["rows"][0]["count"] == 1);
  CHECK(j["rows"][1]["count"] == 2);
  CHECK(j["rows"][2]["count"] == 2);
  CHECK(j["rows"][3]["key"] == std::vector<long long>{3});

  // Rebuild the table from its JSON and compare.
  DistributionTable rebuilt;
  rebuilt.n = j["n"];
  rebuilt.stats = j["stats"].get<std::vector<std::string>>();
  for (const auto& row : j["rows"]) {
    rebuilt.counts[row["key"].get<std::vector<long long>>()] = row["count"];
  }
  CHECK(rebuilt == table);
}

TEST_CASE("parallel sweeps match serial sweeps") {
  for (int jobs : {2, 3, 8}) {
    CHECK(distribution({"des", "stat"}, 6, jobs) ==
          distribution({"des", "stat"}, 6, 1));
  }
  const VerificationReport serial = verify("involution", 6, 1);
  const VerificationReport parallel = verify("involution", 6, 4);
  CHECK(serial.casesChecked == parallel.casesChecked);
  CHECK(serial.failures == parallel.failures);
  CHECK(parallel.casesChecked == 720);
}

TEST_CASE("verify covers every documented property") {
  for (const std::string& property : permstat::knownProperties()) {
    const auto report = verify(property, 4);
    CHECK(report.passed());
    CHECK(report.property == property);
  }
}

TEST_CASE("verify trivial and worked cases") {
  const auto tiny = verify("involution", 1);
  CHECK(tiny.casesChecked == 1);
  CHECK(tiny.passed());

  const auto involution = verify("involution", 6);
  CHECK(involution.casesChecked == 720);
  CHECK(involution.passed());

  const auto equidist = verify("equidist-des-stat-maj", 6);
  CHECK(equidist.casesChecked == 720);
  CHECK(equidist.passed());

  const auto firstmax = verify("firstmax-relations", 7);
  CHECK(firstmax.casesChecked == 720);
  CHECK(firstmax.passed());
  REQUIRE(firstmax.notes.size() == 1);
  CHECK(firstmax.notes[0].find("5040 of 5040") != std::string::npos);

  const auto carlitz = verify("carlitz-transport", 6);
  CHECK(carlitz.passed());
  REQUIRE(carlitz.notes.size() == 1);
  CHECK(carlitz.notes[0].find("distinct") != std::string::npos);
}

TEST_CASE("additivity-stat reports the excluded-label status") {
  const auto without = verify("additivity-stat", 3);
  CHECK(without.passed());
  CHECK(without.casesChecked == 6);
  REQUIRE(without.notes.size() == 1);
  CHECK(without.notes[0].find("no violation") != std::string::npos);

  const auto with = verify("additivity-stat", 4);
  CHECK(with.passed());
  CHECK(with.casesChecked == 24);
  REQUIRE(with.notes.size() == 1);
  CHECK(with.notes[0].find("first witness sigma=132 label=2") !=
        std::string::npos);
}

TEST_CASE("additivity case counts cover sigma times labels") {
  const auto report = verify("additivity-maj", 5);
  CHECK(report.casesChecked == permstat::factorial(5));
  CHECK(report.passed());
}

TEST_CASE("verify validates input") {
  CHECK_THROWS_AS(verify("involution", 0), std::invalid_argument);
  CHECK_THROWS_AS(verify("involution", 11), std::invalid_argument);
  CHECK_THROWS_AS(verify("bogus", 4), std::invalid_argument);
}

TEST_CASE("report json shape") {
  const auto report = verify("label-sum", 4);
  const auto j = nlohmann::json::parse(permstat::toJson(report));
  CHECK(j["property"] == "label-sum");
  CHECK(j["n"] == 4);
  CHECK(j["casesChecked"] == 24);
  CHECK(j["failures"].is_array());
  CHECK(j["failures"].empty());
  CHECK(j["passed"] == true);
  CHECK(j["elapsedSeconds"].is_number());
}
