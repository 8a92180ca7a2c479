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

// Command-line front end. Talks to the library exclusively through the C
// API in permstat/permstat.h.
//
// Exit codes: 0 success / property verified, 1 property failure
// (counterexamples on stdout as JSON), 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permstat/permstat.h"

namespace {

struct PermGuard {
  ps_perm* value = nullptr;
  ~PermGuard() { ps_perm_free(value); }
};

struct StringGuard {
  char* value = nullptr;
  ~StringGuard() { ps_string_free(value); }
};

int usageError() {
  std::cerr << "permstat: " << ps_last_error() << "\n";
  return 2;
}

ps_scheme schemeFromName(const std::string& name) {
  if (name == "inv") return PS_SCHEME_INV;
  if (name == "maj") return PS_SCHEME_MAJ;
  return PS_SCHEME_STAT;
}

ps_map mapFromName(const std::string& name) {
  if (name == "rho") return PS_MAP_RHO;
  if (name == "carlitz") return PS_MAP_CARLITZ;
  return PS_MAP_BURSTEIN;
}

// --jobs wins; otherwise PERMSTAT_JOBS; otherwise one worker.
int resolveJobs(bool jobsGiven, int jobsValue) {
  if (jobsGiven) return jobsValue;
  if (const char* env = std::getenv("PERMSTAT_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) {
      return static_cast<int>(v);
    }
    std::cerr << "permstat: ignoring invalid PERMSTAT_JOBS='" << env << "'\n";
  }
  return 1;
}

int checkForce(int n, bool force) {
  if (n > 9 && !force) {
    std::cerr << "permstat: n=" << n
              << " sweeps are minutes-scale; pass --force to run them\n";
    return 2;
  }
  return 0;
}

int runStats(const std::string& permText) {
  PermGuard perm;
  if (ps_perm_parse(permText.c_str(), &perm.value) != PS_OK) {
    return usageError();
  }
  ps_stat_vector v{};
  if (ps_perm_stats(perm.value, &v) != PS_OK) return usageError();
  StringGuard canonical;
  ps_perm_format(perm.value, &canonical.value);
  nlohmann::ordered_json j;
  j["perm"] = canonical.value;
  j["n"] = ps_perm_size(perm.value);
  j["des"] = v.des;
  j["asc"] = v.asc;
  j["inv"] = v.inv;
  j["maj"] = v.maj;
  j["stat"] = v.stat;
  j["adj"] = v.adj;
  j["first"] = v.first;
  std::cout << j.dump() << "\n";
  return 0;
}

int runLabel(const std::string& scheme, const std::string& permText) {
  PermGuard perm;
  if (ps_perm_parse(permText.c_str(), &perm.value) != PS_OK) {
    return usageError();
  }
  const int32_t n = ps_perm_size(perm.value);
  std::vector<int32_t> labels(static_cast<std::size_t>(n) + 1);
  if (ps_labeling(schemeFromName(scheme), perm.value, labels.data(), n + 1) !=
      PS_OK) {
    return usageError();
  }
  std::string out;
  for (int32_t i = 0; i < n; ++i) {
    out += "[" + std::to_string(labels[static_cast<std::size_t>(i)]) + "]";
    out += std::to_string(ps_perm_letter(perm.value, i + 1));
  }
  out += "[" + std::to_string(labels[static_cast<std::size_t>(n)]) + "]";
  std::cout << out << "\n";
  return 0;
}

int runCode(const std::string& scheme, const std::string& permText) {
  PermGuard perm;
  if (ps_perm_parse(permText.c_str(), &perm.value) != PS_OK) {
    return usageError();
  }
  StringGuard word;
  if (ps_code_of(schemeFromName(scheme), perm.value, &word.value) != PS_OK) {
    return usageError();
  }
  std::cout << word.value << "\n";
  return 0;
}

int runDecode(const std::string& scheme, const std::string& wordText) {
  PermGuard perm;
  if (ps_decode(schemeFromName(scheme), wordText.c_str(), &perm.value) !=
      PS_OK) {
    return usageError();
  }
  StringGuard text;
  if (ps_perm_format(perm.value, &text.value) != PS_OK) return usageError();
  std::cout << text.value << "\n";
  return 0;
}

int runApply(const std::string& map, const std::string& permText,
             bool withTrace) {
  PermGuard perm;
  if (ps_perm_parse(permText.c_str(), &perm.value) != PS_OK) {
    return usageError();
  }
  PermGuard image;
  if (withTrace) {
    ps_trace* trace = nullptr;
    if (ps_apply_traced(mapFromName(map), perm.value, &image.value, &trace) !=
        PS_OK) {
      return usageError();
    }
    const char* digitName = map == "carlitz" ? "c_i" : "s_i";
    std::printf("%4s %4s  %s\n", "i", digitName, "sigma^(i)");
    const int32_t rows = ps_trace_size(trace);
    for (int32_t r = 0; r < rows; ++r) {
      int32_t step = 0;
      int32_t digit = 0;
      StringGuard text;
      ps_trace_step(trace, r, &step, &digit, &text.value);
      std::printf("%4d %4d  %s\n", step, digit, text.value);
    }
    ps_trace_free(trace);
  } else if (ps_apply(mapFromName(map), perm.value, &image.value) != PS_OK) {
    return usageError();
  }
  StringGuard text;
  if (ps_perm_format(image.value, &text.value) != PS_OK) return usageError();
  std::cout << text.value << "\n";
  return 0;
}

int runCount(const std::string& patternText, const std::string& permText) {
  ps_pattern* pattern = nullptr;
  if (ps_pattern_parse(patternText.c_str(), &pattern) != PS_OK) {
    return usageError();
  }
  PermGuard perm;
  if (ps_perm_parse(permText.c_str(), &perm.value) != PS_OK) {
    ps_pattern_free(pattern);
    return usageError();
  }
  int64_t count = 0;
  const ps_status st = ps_count(pattern, perm.value, &count);
  ps_pattern_free(pattern);
  if (st != PS_OK) return usageError();
  std::cout << count << "\n";
  return 0;
}

int runDist(const std::string& stats, int n, int jobs,
            const std::string& format, const std::string& outFile) {
  ps_table* table = nullptr;
  if (ps_distribution(stats.c_str(), n, jobs, &table) != PS_OK) {
    return usageError();
  }
  StringGuard text;
  const ps_status st = ps_table_format(table, format.c_str(), &text.value);
  ps_table_free(table);
  if (st != PS_OK) return usageError();
  if (outFile.empty()) {
    std::cout << text.value;
    if (format == "json") std::cout << "\n";
  } else {
    std::ofstream out(outFile, std::ios::binary);
    if (!out) {
      std::cerr << "permstat: cannot open '" << outFile << "' for writing\n";
      return 2;
    }
    out << text.value;
    if (format == "json") out << "\n";
  }
  return 0;
}

int runVerify(const std::string& property, int n, int jobs) {
  ps_report* report = nullptr;
  if (ps_verify(property.c_str(), n, jobs, &report) != PS_OK) {
    return usageError();
  }
  StringGuard text;
  ps_report_format(report, &text.value);
  std::cout << text.value << "\n";
  const bool passed = ps_report_passed(report) == 1;
  ps_report_free(report);
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "permutation statistics, insertion encodings, and exhaustive "
      "equidistribution checks"};
  app.set_version_flag("--version", ps_version());
  app.require_subcommand(1);

  std::string statsPerm;
  auto* statsCmd =
      app.add_subcommand("stats", "statistic vector of a permutation, JSON");
  statsCmd->add_option("PERM", statsPerm, "permutation in one-line notation")
      ->required();

  std::string labelScheme;
  std::string labelPerm;
  auto* labelCmd =
      app.add_subcommand("label", "insertion labeling in bracket form");
  labelCmd->add_option("--scheme", labelScheme, "labeling scheme")
      ->required()
      ->check(CLI::IsMember({"inv", "maj", "stat"}));
  labelCmd->add_option("PERM", labelPerm)->required();

  std::string codeScheme;
  std::string codePerm;
  auto* codeCmd = app.add_subcommand("code", "code word of a permutation");
  codeCmd->add_option("--scheme", codeScheme)
      ->required()
      ->check(CLI::IsMember({"inv", "maj", "stat"}));
  codeCmd->add_option("PERM", codePerm)->required();

  std::string decodeScheme;
  std::string decodeWord;
  auto* decodeCmd =
      app.add_subcommand("decode", "permutation with the given code word");
  decodeCmd->add_option("--scheme", decodeScheme)
      ->required()
      ->check(CLI::IsMember({"inv", "maj", "stat"}));
  decodeCmd->add_option("WORD", decodeWord)->required();

  std::string applyMap;
  std::string applyPerm;
  bool applyTrace = false;
  auto* applyCmd = app.add_subcommand("apply", "apply a bijection");
  applyCmd->add_option("--map", applyMap)
      ->required()
      ->check(CLI::IsMember({"rho", "carlitz", "burstein"}));
  applyCmd->add_option("PERM", applyPerm)->required();
  applyCmd->add_flag("--trace", applyTrace,
                     "print the insertion chain (rho, carlitz)");

  std::string countPattern;
  std::string countPerm;
  auto* countCmd =
      app.add_subcommand("count", "occurrences of a dashed pattern");
  countCmd->add_option("PATTERN", countPattern,
                       "e.g. \"b-ca\", \"^cb-a\" (quote '$' and '!')")
      ->required();
  countCmd->add_option("PERM", countPerm)->required();

  std::string distStats;
  int distN = 0;
  int distJobs = 1;
  std::string distFormat = "json";
  std::string distOut;
  bool distForce = false;
  auto* distCmd =
      app.add_subcommand("dist", "joint distribution table over S_n");
  distCmd->add_option("--stats", distStats,
                      "comma list of des, asc, inv, maj, stat, adj, F")
      ->required();
  distCmd->add_option("--n", distN, "permutation size")
      ->required()
      ->check(CLI::Range(1, 10));
  auto* distJobsOpt = distCmd->add_option("--jobs", distJobs, "worker count")
                          ->check(CLI::Range(1, 1024));
  distCmd->add_option("--format", distFormat)
      ->check(CLI::IsMember({"json", "csv"}));
  distCmd->add_option("--out", distOut, "write to file instead of stdout");
  distCmd->add_flag("--force", distForce, "allow n = 10");

  std::string verifyProperty;
  int verifyN = 8;
  int verifyJobs = 1;
  bool verifyForce = false;
  auto* verifyCmd =
      app.add_subcommand("verify", "exhaustively check a named property");
  verifyCmd
      ->add_option("--property", verifyProperty,
                   "one of: involution, preserve-des-F, maj-stat-swap, "
                   "carlitz-transport, burstein-5tuple, additivity-inv, "
                   "additivity-maj, additivity-stat, label-sum, "
                   "abcd-multiset, anchored-identity, eq-star-star, "
                   "equidist-des-stat-maj, firstmax-relations")
      ->required();
  verifyCmd->add_option("--n", verifyN, "permutation size (default 8)")
      ->check(CLI::Range(1, 10));
  auto* verifyJobsOpt =
      verifyCmd->add_option("--jobs", verifyJobs, "worker count")
          ->check(CLI::Range(1, 1024));
  verifyCmd->add_flag("--force", verifyForce, "allow n = 10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (statsCmd->parsed()) return runStats(statsPerm);
  if (labelCmd->parsed()) return runLabel(labelScheme, labelPerm);
  if (codeCmd->parsed()) return runCode(codeScheme, codePerm);
  if (decodeCmd->parsed()) return runDecode(decodeScheme, decodeWord);
  if (applyCmd->parsed()) return runApply(applyMap, applyPerm, applyTrace);
  if (countCmd->parsed()) return runCount(countPattern, countPerm);
  if (distCmd->parsed()) {
    if (const int rc = checkForce(distN, distForce); rc != 0) return rc;
    return runDist(distStats, distN,
                   resolveJobs(distJobsOpt->count() > 0, distJobs),
                   distFormat, distOut);
  }
  if (verifyCmd->parsed()) {
    if (const int rc = checkForce(verifyN, verifyForce); rc != 0) return rc;
    return runVerify(verifyProperty, verifyN,
                     resolveJobs(verifyJobsOpt->count() > 0, verifyJobs));
  }
  return 2;
}
