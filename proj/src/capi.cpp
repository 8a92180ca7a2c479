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

#include "permstat/permstat.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "permstat/bijections.hpp"
#include "permstat/errors.hpp"
#include "permstat/harness.hpp"
#include "permstat/labeling.hpp"
#include "permstat/pattern.hpp"
#include "permstat/statistics.hpp"

struct ps_perm {
  permstat::Permutation value;
};
struct ps_pattern {
  permstat::DashedPattern value;
};
struct ps_trace {
  permstat::InsertionTrace value;
};
struct ps_table {
  permstat::DistributionTable value;
};
struct ps_report {
  permstat::VerificationReport value;
};

namespace {

thread_local std::string g_lastError;

template <class T>
void requireArg(const T* ptr, const char* name) {
  if (ptr == nullptr) {
    throw std::invalid_argument(std::string(name) + " must not be NULL");
  }
}

template <class Fn>
ps_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_lastError.clear();
    return PS_OK;
  } catch (const permstat::ParseError& e) {
    g_lastError = e.what();
    return PS_ERROR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_lastError = e.what();
    return PS_ERROR_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_lastError = e.what();
    return PS_ERROR_ARGUMENT;
  } catch (const std::exception& e) {
    g_lastError = e.what();
    return PS_ERROR_INTERNAL;
  } catch (...) {
    g_lastError = "unknown error";
    return PS_ERROR_INTERNAL;
  }
}

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

permstat::Scheme toScheme(ps_scheme scheme) {
  switch (scheme) {
    case PS_SCHEME_INV:
      return permstat::Scheme::Inv;
    case PS_SCHEME_MAJ:
      return permstat::Scheme::Maj;
    case PS_SCHEME_STAT:
      return permstat::Scheme::Stat;
  }
  throw std::invalid_argument("invalid scheme value");
}

std::vector<std::string> splitCsv(const char* text) {
  std::vector<std::string> out;
  const std::string s(text);
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    out.push_back(
        s.substr(start, (comma == std::string::npos ? s.size() : comma) -
                            start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* ps_version(void) { return "1.0.0"; }

const char* ps_last_error(void) { return g_lastError.c_str(); }

void ps_string_free(char* s) { std::free(s); }

ps_status ps_perm_parse(const char* text, ps_perm** out) {
  return guarded([&] {
    requireArg(text, "text");
    requireArg(out, "out");
    *out = new ps_perm{permstat::Permutation::parse(text)};
  });
}

ps_status ps_perm_create(const int32_t* letters, int32_t n, ps_perm** out) {
  return guarded([&] {
    requireArg(letters, "letters");
    requireArg(out, "out");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<int> values(letters, letters + n);
    *out = new ps_perm{permstat::Permutation(std::move(values))};
  });
}

void ps_perm_free(ps_perm* p) { delete p; }

int32_t ps_perm_size(const ps_perm* p) {
  return p == nullptr ? 0 : p->value.size();
}

int32_t ps_perm_letter(const ps_perm* p, int32_t position) {
  if (p == nullptr || position < 1 || position > p->value.size()) return 0;
  return p->value.letter(position);
}

ps_status ps_perm_format(const ps_perm* p, char** out) {
  return guarded([&] {
    requireArg(p, "p");
    requireArg(out, "out");
    *out = dupString(p->value.str());
  });
}

ps_status ps_perm_restrict(const ps_perm* p, int32_t bound, ps_perm** out) {
  return guarded([&] {
    requireArg(p, "p");
    requireArg(out, "out");
    *out = new ps_perm{p->value.restrictTo(bound)};
  });
}

ps_status ps_perm_stats(const ps_perm* p, ps_stat_vector* out) {
  return guarded([&] {
    requireArg(p, "p");
    requireArg(out, "out");
    const permstat::StatVector v = permstat::statVector(p->value);
    out->des = v.des;
    out->asc = v.asc;
    out->inv = v.inv;
    out->maj = v.maj;
    out->stat = v.stat;
    out->adj = v.adj;
    out->first = v.first;
  });
}

ps_status ps_labeling(ps_scheme scheme, const ps_perm* p, int32_t* labels,
                      int32_t capacity) {
  return guarded([&] {
    requireArg(p, "p");
    requireArg(labels, "labels");
    const auto values = permstat::makeLabeling(toScheme(scheme), p->value);
    if (capacity < static_cast<int32_t>(values.size())) {
      throw std::invalid_argument("capacity must be at least n+1");
    }
    for (std::size_t s = 0; s < values.size(); ++s) {
      labels[s] = values[s];
    }
  });
}

ps_status ps_insert(ps_scheme scheme, int32_t label, const ps_perm* p,
                    ps_perm** out) {
  return guarded([&] {
    requireArg(p, "p");
    requireArg(out, "out");
    *out = new ps_perm{permstat::insertMax(toScheme(scheme), label, p->value)};
  });
}

ps_status ps_uninsert(ps_scheme scheme, const ps_perm* p, int32_t* label,
                      ps_perm** out) {
  return guarded([&] {
    requireArg(p, "p");
    requireArg(label, "label");
    requireArg(out, "out");
    auto [lab, rest] = permstat::unInsert(toScheme(scheme), p->value);
    *label = lab;
    *out = new ps_perm{std::move(rest)};
  });
}

ps_status ps_code_of(ps_scheme scheme, const ps_perm* p, char** out) {
  return guarded([&] {
    requireArg(p, "p");
    requireArg(out, "out");
    *out = dupString(permstat::codeOf(toScheme(scheme), p->value).str());
  });
}

ps_status ps_decode(ps_scheme scheme, const char* word, ps_perm** out) {
  return guarded([&] {
    requireArg(word, "word");
    requireArg(out, "out");
    *out = new ps_perm{
        permstat::decode(toScheme(scheme), permstat::CodeWord::parse(word))};
  });
}

ps_status ps_pattern_parse(const char* text, ps_pattern** out) {
  return guarded([&] {
    requireArg(text, "text");
    requireArg(out, "out");
    *out = new ps_pattern{permstat::DashedPattern::parse(text)};
  });
}

void ps_pattern_free(ps_pattern* t) { delete t; }

ps_status ps_count(const ps_pattern* t, const ps_perm* p, int64_t* out) {
  return guarded([&] {
    requireArg(t, "pattern");
    requireArg(p, "p");
    requireArg(out, "out");
    *out = permstat::countOccurrences(t->value, p->value);
  });
}

ps_status ps_apply(ps_map map, const ps_perm* p, ps_perm** out) {
  return guarded([&] {
    requireArg(p, "p");
    requireArg(out, "out");
    switch (map) {
      case PS_MAP_RHO:
        *out = new ps_perm{permstat::rho(p->value)};
        return;
      case PS_MAP_CARLITZ:
        *out = new ps_perm{permstat::carlitz(p->value)};
        return;
      case PS_MAP_BURSTEIN:
        *out = new ps_perm{permstat::burstein(p->value)};
        return;
    }
    throw std::invalid_argument("invalid map value");
  });
}

ps_status ps_apply_traced(ps_map map, const ps_perm* p, ps_perm** out,
                          ps_trace** trace) {
  if (trace == nullptr) return ps_apply(map, p, out);
  return guarded([&] {
    requireArg(p, "p");
    requireArg(out, "out");
    permstat::InsertionTrace chain;
    switch (map) {
      case PS_MAP_RHO:
        chain = permstat::rhoTraced(p->value);
        break;
      case PS_MAP_CARLITZ:
        chain = permstat::carlitzTraced(p->value);
        break;
      case PS_MAP_BURSTEIN:
        throw std::invalid_argument(
            "trace is available for rho and carlitz only");
      default:
        throw std::invalid_argument("invalid map value");
    }
    *out = new ps_perm{chain.result()};
    *trace = new ps_trace{std::move(chain)};
  });
}

int32_t ps_trace_size(const ps_trace* t) {
  return t == nullptr ? 0 : static_cast<int32_t>(t->value.steps.size());
}

ps_status ps_trace_step(const ps_trace* t, int32_t index, int32_t* step,
                        int32_t* digit, char** image) {
  return guarded([&] {
    requireArg(t, "trace");
    if (index < 0 || index >= static_cast<int32_t>(t->value.steps.size())) {
      throw std::invalid_argument("trace index out of range");
    }
    const permstat::TraceStep& row =
        t->value.steps[static_cast<std::size_t>(index)];
    if (step != nullptr) *step = row.step;
    if (digit != nullptr) *digit = row.digit;
    if (image != nullptr) *image = dupString(row.image.str());
  });
}

void ps_trace_free(ps_trace* t) { delete t; }

ps_status ps_distribution(const char* stats_csv, int32_t n, int32_t jobs,
                          ps_table** out) {
  return guarded([&] {
    requireArg(stats_csv, "stats_csv");
    requireArg(out, "out");
    *out = new ps_table{permstat::distribution(splitCsv(stats_csv), n, jobs)};
  });
}

ps_status ps_table_format(const ps_table* t, const char* format, char** out) {
  return guarded([&] {
    requireArg(t, "table");
    requireArg(format, "format");
    requireArg(out, "out");
    permstat::TableFormat fmt;
    if (std::strcmp(format, "json") == 0) {
      fmt = permstat::TableFormat::Json;
    } else if (std::strcmp(format, "csv") == 0) {
      fmt = permstat::TableFormat::Csv;
    } else {
      throw std::invalid_argument("format must be \"json\" or \"csv\"");
    }
    *out = dupString(permstat::exportTable(t->value, fmt));
  });
}

void ps_table_free(ps_table* t) { delete t; }

ps_status ps_verify(const char* property, int32_t n, int32_t jobs,
                    ps_report** out) {
  return guarded([&] {
    requireArg(property, "property");
    requireArg(out, "out");
    *out = new ps_report{permstat::verify(property, n, jobs)};
  });
}

int32_t ps_report_passed(const ps_report* r) {
  return (r != nullptr && r->value.passed()) ? 1 : 0;
}

int64_t ps_report_cases(const ps_report* r) {
  return r == nullptr ? 0 : static_cast<int64_t>(r->value.casesChecked);
}

int32_t ps_report_failure_count(const ps_report* r) {
  return r == nullptr ? 0 : static_cast<int32_t>(r->value.failures.size());
}

ps_status ps_report_format(const ps_report* r, char** out) {
  return guarded([&] {
    requireArg(r, "report");
    requireArg(out, "out");
    *out = dupString(permstat::toJson(r->value));
  });
}

void ps_report_free(ps_report* r) { delete r; }

}  // extern "C"
