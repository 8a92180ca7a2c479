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

#include "permstat/permutation.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

void validateLetters(const std::vector<int>& letters) {
  const int n = static_cast<int>(letters.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : letters) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("letter " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("letter " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

int parseInt(std::string_view token, std::size_t offset) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("invalid integer '" + std::string(token) + "'", offset);
  }
  return value;
}

}  // namespace

Permutation::Permutation(std::vector<int> letters)
    : letters_(std::move(letters)) {
  validateLetters(letters_);
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<int> letters(static_cast<std::size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  return Permutation(std::move(letters));
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty permutation", 0);
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = text.find(',', start);
      const std::size_t len =
          (comma == std::string_view::npos ? text.size() : comma) - start;
      const std::string_view token = text.substr(start, len);
      if (token.empty()) throw ParseError("empty entry", start);
      letters.push_back(parseInt(token, start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char ch = text[i];
      if (ch < '0' || ch > '9') {
        throw ParseError(std::string("unexpected character '") + ch + "'", i);
      }
      letters.push_back(ch - '0');
    }
  }
  try {
    return Permutation(std::move(letters));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

int Permutation::letter(int position) const {
  if (position < 1 || position > size()) {
    throw std::out_of_range("position " + std::to_string(position) +
                            " outside 1.." + std::to_string(size()));
  }
  return letters_[static_cast<std::size_t>(position) - 1];
}

Permutation Permutation::restrictTo(int bound) const {
  if (bound < 1 || bound > size()) {
    throw std::invalid_argument("restriction bound " + std::to_string(bound) +
                                " outside 1.." + std::to_string(size()));
  }
  std::vector<int> kept;
  kept.reserve(static_cast<std::size_t>(bound));
  for (int v : letters_) {
    if (v <= bound) kept.push_back(v);
  }
  return Permutation(std::move(kept));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    out.reserve(letters_.size());
    for (int v : letters_) out.push_back(static_cast<char>('0' + v));
  } else {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.str();
}

Permutation prefixTransform(const Permutation& p) {
  const int k = p.size();
  if (k == 0) {
    throw std::invalid_argument(
        "prefix transform requires a nonempty permutation");
  }
  if (p.first() != k) {
    throw std::invalid_argument(
        "prefix transform requires the first letter to be maximal");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  out.push_back(k);
  for (int j = k; j >= 2; --j) out.push_back(k - p.letter(j));
  return Permutation(std::move(out));
}

}  // namespace permstat
