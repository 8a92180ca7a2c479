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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

// A permutation of {1, ..., n} in one-line notation.
//
// Positions are 1-based everywhere in the public API: letter(1) is the first
// letter and descents are positions in [1, n-1]. Instances are immutable
// after construction.
class Permutation {
 public:
  // The empty permutation. Only the base case of recursive constructions;
  // every other entry point requires n >= 1.
  Permutation() = default;

  // Takes ownership of `letters`, which must contain each of 1..n exactly
  // once. Throws std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> letters);

  static Permutation identity(int n);

  // Accepts contiguous digits for n <= 9 ("52718346") or comma-separated
  // integers ("5,2,7,1,8,3,4,6"). Throws ParseError on malformed text.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  // 1-based; throws std::out_of_range unless 1 <= position <= size().
  int letter(int position) const;

  // The first letter, usually written F. Requires n >= 1.
  int first() const { return letter(1); }

  const std::vector<int>& letters() const { return letters_; }

  // The subsequence of letters <= bound with positions compacted; an element
  // of S_bound. Requires 1 <= bound <= size().
  Permutation restrictTo(int bound) const;

  // One-line notation: contiguous digits for n <= 9, comma-separated beyond.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> letters_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// k p_2 ... p_k  |->  k (k-p_k) (k-p_{k-1}) ... (k-p_2).
// Requires the first letter to be the maximum; self-inverse on that domain.
Permutation prefixTransform(const Permutation& p);

}  // namespace permstat
