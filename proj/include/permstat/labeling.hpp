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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// The three insertion labeling schemes. Each assigns the labels {0..m} to
// the m+1 gaps of a length-m permutation so that inserting the next maximum
// letter at label i raises the scheme's statistic by exactly i (for stat,
// at every label except des+1).
enum class Scheme { Inv, Maj, Stat };

// "inv" | "maj" | "stat"; throws std::invalid_argument otherwise.
Scheme schemeFromName(std::string_view name);
std::string_view schemeName(Scheme scheme);

// labels[s] is the label of the gap after position s; gap 0 precedes the
// first letter.
//
//   inv:  gaps numbered right to left with 0..m.
//   maj:  gap m gets 0, descent gaps right to left get 1..des, all other
//         gaps left to right get des+1..m.
//   stat: descent gaps and gap m left to right get 0..des, gap 0 gets
//         des+1, ascent gaps right to left get des+2..m.
std::vector<int> makeLabeling(Scheme scheme, const Permutation& p);

// Inserts m+1 into the gap labeled `label` (0 <= label <= m).
Permutation insertMax(Scheme scheme, int label, const Permutation& p);

// Removes the maximum letter and reports the label of the gap it occupied
// under the scheme's labeling of the remainder. Requires n >= 2; inverse of
// insertMax.
std::pair<int, Permutation> unInsert(Scheme scheme, const Permutation& p);

// A word w_1..w_n with w_i in [0, i-1] (so w_1 = 0).
class CodeWord {
 public:
  CodeWord() = default;

  // Throws std::invalid_argument when a digit is out of range or the word
  // is empty.
  explicit CodeWord(std::vector<int> digits);

  // Accepts contiguous digits ("01112216") or comma-separated integers.
  static CodeWord parse(std::string_view text);

  const std::vector<int>& digits() const { return digits_; }
  int size() const { return static_cast<int>(digits_.size()); }
  long long digitSum() const;

  // Contiguous digits for n <= 10, comma-separated beyond.
  std::string str() const;

  friend bool operator==(const CodeWord&, const CodeWord&) = default;

 private:
  std::vector<int> digits_;
};

// Digit i is the label peeled off by unInsert at size i (digit 1 is 0). The
// digit sum recovers inv under the inv scheme and maj under the maj scheme.
CodeWord codeOf(Scheme scheme, const Permutation& p);

// The unique permutation with the given code, rebuilt by iterated insertMax
// from the singleton permutation.
Permutation decode(Scheme scheme, const CodeWord& word);

}  // namespace permstat
