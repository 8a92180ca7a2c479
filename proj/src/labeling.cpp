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

#include "permstat/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "permstat/errors.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

Scheme schemeFromName(std::string_view name) {
  if (name == "inv") return Scheme::Inv;
  if (name == "maj") return Scheme::Maj;
  if (name == "stat") return Scheme::Stat;
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (known: inv, maj, stat)");
}

std::string_view schemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::Inv:
      return "inv";
    case Scheme::Maj:
      return "maj";
    case Scheme::Stat:
      return "stat";
  }
  throw std::invalid_argument("invalid scheme value");
}

std::vector<int> makeLabeling(Scheme scheme, const Permutation& p) {
  const int m = p.size();
  if (m == 0) {
    throw std::invalid_argument("labeling requires a nonempty permutation");
  }
  std::vector<int> labels(static_cast<std::size_t>(m) + 1, -1);
  switch (scheme) {
    case Scheme::Inv: {
      for (int s = 0; s <= m; ++s) labels[static_cast<std::size_t>(s)] = m - s;
      break;
    }
    case Scheme::Maj: {
      const std::vector<int> des = descents(p);
      labels[static_cast<std::size_t>(m)] = 0;
      int next = 1;
      for (auto it = des.rbegin(); it != des.rend(); ++it) {
        labels[static_cast<std::size_t>(*it)] = next++;
      }
      for (int s = 0; s < m; ++s) {
        if (labels[static_cast<std::size_t>(s)] < 0) {
          labels[static_cast<std::size_t>(s)] = next++;
        }
      }
      break;
    }
    case Scheme::Stat: {
      const std::vector<int> des = descents(p);
      int next = 0;
      for (int d : des) labels[static_cast<std::size_t>(d)] = next++;
      labels[static_cast<std::size_t>(m)] = next++;
      labels[0] = next++;
      const std::vector<int> asc = ascents(p);
      for (auto it = asc.rbegin(); it != asc.rend(); ++it) {
        labels[static_cast<std::size_t>(*it)] = next++;
      }
      break;
    }
  }
  return labels;
}

Permutation insertMax(Scheme scheme, int label, const Permutation& p) {
  const int m = p.size();
  if (label < 0 || label > m) {
    throw std::invalid_argument("label " + std::to_string(label) +
                                " outside 0.." + std::to_string(m));
  }
  const std::vector<int> labels = makeLabeling(scheme, p);
  const auto it = std::find(labels.begin(), labels.end(), label);
  const auto gap = static_cast<std::size_t>(it - labels.begin());
  std::vector<int> letters = p.letters();
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(gap), m + 1);
  return Permutation(std::move(letters));
}

std::pair<int, Permutation> unInsert(Scheme scheme, const Permutation& p) {
  const int m = p.size();
  if (m < 2) throw std::invalid_argument("unInsert requires n >= 2");
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(m) - 1);
  int gap = -1;
  for (int i = 1; i <= m; ++i) {
    const int v = p.letter(i);
    if (v == m) {
      gap = i - 1;
    } else {
      rest.push_back(v);
    }
  }
  Permutation sigma(std::move(rest));
  const int label =
      makeLabeling(scheme, sigma)[static_cast<std::size_t>(gap)];
  return {label, std::move(sigma)};
}

CodeWord::CodeWord(std::vector<int> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) {
    throw std::invalid_argument("code word must be nonempty");
  }
  for (int i = 1; i <= static_cast<int>(digits_.size()); ++i) {
    const int w = digits_[static_cast<std::size_t>(i) - 1];
    if (w < 0 || w > i - 1) {
      throw std::invalid_argument(
          "digit w_" + std::to_string(i) + "=" + std::to_string(w) +
          " outside 0.." + std::to_string(i - 1));
    }
  }
}

CodeWord CodeWord::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty code word", 0);
  std::vector<int> digits;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = text.find(',', start);
      const std::size_t len =
          (comma == std::string_view::npos ? text.size() : comma) - start;
      const std::string_view token = text.substr(start, len);
      if (token.empty()) throw ParseError("empty entry", start);
      int value = 0;
      const char* begin = token.data();
      const char* end = begin + token.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc{} || ptr != end) {
        throw ParseError("invalid integer '" + std::string(token) + "'",
                         start);
      }
      digits.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char ch = text[i];
      if (ch < '0' || ch > '9') {
        throw ParseError(std::string("unexpected character '") + ch + "'", i);
      }
      digits.push_back(ch - '0');
    }
  }
  try {
    return CodeWord(std::move(digits));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

long long CodeWord::digitSum() const {
  return std::accumulate(digits_.begin(), digits_.end(), 0LL);
}

std::string CodeWord::str() const {
  std::string out;
  if (size() <= 10) {
    out.reserve(digits_.size());
    for (int w : digits_) out.push_back(static_cast<char>('0' + w));
  } else {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(digits_[i]);
    }
  }
  return out;
}

CodeWord codeOf(Scheme scheme, const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  Permutation current = p;
  for (int i = n; i >= 2; --i) {
    auto [label, smaller] = unInsert(scheme, current);
    digits[static_cast<std::size_t>(i) - 1] = label;
    current = std::move(smaller);
  }
  return CodeWord(std::move(digits));
}

Permutation decode(Scheme scheme, const CodeWord& word) {
  Permutation current({1});
  for (int i = 2; i <= word.size(); ++i) {
    current =
        insertMax(scheme, word.digits()[static_cast<std::size_t>(i) - 1],
                  current);
  }
  return current;
}

}  // namespace permstat
