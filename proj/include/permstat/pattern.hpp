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
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// A vincular (dashed) pattern with optional positional anchors.
//
// Text syntax:
//
//   pattern := [ '^' | '!' ] block ( '-' block )* [ '$' ]
//   block   := ('a'..'z')+
//
// Letters compare alphabetically and must form a contiguous initial segment
// a, b, c, ... each used exactly once. Letters inside one block must match
// adjacent positions of the permutation; a dash allows any gap. '^' pins the
// first matched position to 1, '!' forbids position 1, '$' pins the last
// matched position to n.
//
// Examples: "ba" (adjacent descents), "b-ca", "^cb-a", "^c-b-a$".
struct DashedPattern {
  std::vector<std::vector<int>> blocks;  // letter ranks 1..m, in pattern order
  bool anchorFirst = false;              // '^'
  bool anchorLast = false;               // '$'
  bool forbidFirst = false;              // '!'

  int length() const;
  std::string str() const;

  // Throws ParseError (with offset) on malformed text.
  static DashedPattern parse(std::string_view text);

  friend bool operator==(const DashedPattern&, const DashedPattern&) = default;
};

// Number of index tuples i_1 < ... < i_m that are consecutive within blocks,
// order-isomorphic to the pattern, and satisfy its anchors. Returns 0 when
// the pattern is longer than the permutation.
long long countOccurrences(const DashedPattern& pattern, const Permutation& p);

// stat = (ac-b) + (ba-c) + (cb-a) + (ba).
long long statOf(const Permutation& p);

// maj = (a-cb) + (b-ca) + (c-ba) + (ba); agrees with majorIndex.
long long majViaPatterns(const Permutation& p);

// Letter collections for p whose first letter is maximal, all sorted
// ascending:
//
//   a: letters p_i with p_1 p_i p_{i+1} descending          (set)
//   b: one entry p_i per pair i < j with p_{j+1} < p_i < p_j (multiset)
//   c: letters p_i with p_1 p_i p_m descending, m = size     (set)
//   d: one entry p_i per pair i < j with p_j < p_i < p_{j+1} (multiset)
//
// The multiset unions a+b and c+d coincide.
struct MultisetQuadruple {
  std::vector<int> a, b, c, d;

  friend bool operator==(const MultisetQuadruple&,
                         const MultisetQuadruple&) = default;
};

MultisetQuadruple computeABCD(const Permutation& p);

// (^c-ba)p + (b-ca)p == (^c-b-a$)p + (b-ac)p, for p with maximal first
// letter.
bool checkAnchoredIdentity(const Permutation& p);

}  // namespace permstat
