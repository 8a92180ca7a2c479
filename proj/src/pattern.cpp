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

#include "permstat/pattern.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "permstat/errors.hpp"

namespace permstat {

int DashedPattern::length() const {
  int m = 0;
  for (const auto& block : blocks) m += static_cast<int>(block.size());
  return m;
}

std::string DashedPattern::str() const {
  std::string out;
  if (anchorFirst) out.push_back('^');
  if (forbidFirst) out.push_back('!');
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out.push_back('-');
    for (int rank : blocks[b]) {
      out.push_back(static_cast<char>('a' + rank - 1));
    }
  }
  if (anchorLast) out.push_back('$');
  return out;
}

DashedPattern DashedPattern::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty pattern", 0);
  DashedPattern out;
  std::size_t i = 0;
  if (text[i] == '^') {
    out.anchorFirst = true;
    ++i;
  } else if (text[i] == '!') {
    out.forbidFirst = true;
    ++i;
  }

  constexpr std::size_t kUnused = std::numeric_limits<std::size_t>::max();
  std::array<std::size_t, 26> seenAt{};
  seenAt.fill(kUnused);
  std::vector<int> current;
  bool closed = false;  // '$' consumed

  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (closed) throw ParseError("'$' must be the final character", i);
    if (ch >= 'a' && ch <= 'z') {
      const int rank = ch - 'a' + 1;
      if (seenAt[static_cast<std::size_t>(rank) - 1] != kUnused) {
        throw ParseError(std::string("letter '") + ch + "' repeated", i);
      }
      seenAt[static_cast<std::size_t>(rank) - 1] = i;
      current.push_back(rank);
    } else if (ch == '-') {
      if (current.empty()) throw ParseError("empty block", i);
      out.blocks.push_back(std::move(current));
      current.clear();
    } else if (ch == '$') {
      out.anchorLast = true;
      closed = true;
    } else if (ch == '^') {
      throw ParseError("'^' is only allowed at the start", i);
    } else if (ch == '!') {
      if (out.anchorFirst && i == 1) {
        throw ParseError("'^' and '!' are mutually exclusive", i);
      }
      throw ParseError("'!' is only allowed at the start", i);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
  }
  if (current.empty()) throw ParseError("empty block", text.size());
  out.blocks.push_back(std::move(current));

  // Letters must be exactly a..<a+m>; with repeats excluded it is enough to
  // reject any rank above the pattern length.
  const int m = out.length();
  for (int rank = m + 1; rank <= 26; ++rank) {
    const std::size_t at = seenAt[static_cast<std::size_t>(rank) - 1];
    if (at == kUnused) continue;
    int missing = 1;
    while (seenAt[static_cast<std::size_t>(missing) - 1] != kUnused) ++missing;
    throw ParseError(std::string("letter '") +
                         static_cast<char>('a' + rank - 1) + "' used but '" +
                         static_cast<char>('a' + missing - 1) + "' is not",
                     at);
  }
  return out;
}

long long countOccurrences(const DashedPattern& pattern,
                           const Permutation& p) {
  const int n = p.size();
  const int blockCount = static_cast<int>(pattern.blocks.size());
  if (blockCount == 0) throw std::invalid_argument("pattern has no blocks");

  std::array<int, 26> ranks{};
  std::array<int, 26> blockLen{};
  std::array<int, 27> remaining{};  // letters in blocks b..end
  int m = 0;
  for (int b = 0; b < blockCount; ++b) {
    blockLen[static_cast<std::size_t>(b)] =
        static_cast<int>(pattern.blocks[static_cast<std::size_t>(b)].size());
    for (int rank : pattern.blocks[static_cast<std::size_t>(b)]) {
      ranks[static_cast<std::size_t>(m++)] = rank;
    }
  }
  if (m > n) return 0;
  remaining[static_cast<std::size_t>(blockCount)] = 0;
  for (int b = blockCount - 1; b >= 0; --b) {
    remaining[static_cast<std::size_t>(b)] =
        remaining[static_cast<std::size_t>(b) + 1] +
        blockLen[static_cast<std::size_t>(b)];
  }

  std::array<int, 26> values{};
  long long total = 0;

  auto place = [&](auto&& self, int blockIdx, int minStart,
                   int placed) -> void {
    if (blockIdx == blockCount) {
      ++total;
      return;
    }
    const int len = blockLen[static_cast<std::size_t>(blockIdx)];
    int lo = minStart;
    int hi = n - remaining[static_cast<std::size_t>(blockIdx)] + 1;
    if (blockIdx == 0) {
      if (pattern.anchorFirst) {
        lo = std::max(lo, 1);
        hi = std::min(hi, 1);
      }
      if (pattern.forbidFirst) lo = std::max(lo, 2);
    }
    if (blockIdx == blockCount - 1 && pattern.anchorLast) {
      lo = std::max(lo, n - len + 1);
      hi = std::min(hi, n - len + 1);
    }
    for (int start = lo; start <= hi; ++start) {
      bool ok = true;
      for (int t = 0; t < len && ok; ++t) {
        const int v = p.letter(start + t);
        const int r = ranks[static_cast<std::size_t>(placed + t)];
        for (int u = 0; u < placed + t; ++u) {
          if ((values[static_cast<std::size_t>(u)] < v) !=
              (ranks[static_cast<std::size_t>(u)] < r)) {
            ok = false;
            break;
          }
        }
        values[static_cast<std::size_t>(placed + t)] = v;
      }
      if (ok) self(self, blockIdx + 1, start + len, placed + len);
    }
  };
  place(place, 0, 1, 0);
  return total;
}

long long statOf(const Permutation& p) {
  static const DashedPattern acb = DashedPattern::parse("ac-b");
  static const DashedPattern bac = DashedPattern::parse("ba-c");
  static const DashedPattern cba = DashedPattern::parse("cb-a");
  static const DashedPattern ba = DashedPattern::parse("ba");
  return countOccurrences(acb, p) + countOccurrences(bac, p) +
         countOccurrences(cba, p) + countOccurrences(ba, p);
}

long long majViaPatterns(const Permutation& p) {
  static const DashedPattern acb = DashedPattern::parse("a-cb");
  static const DashedPattern bca = DashedPattern::parse("b-ca");
  static const DashedPattern cba = DashedPattern::parse("c-ba");
  static const DashedPattern ba = DashedPattern::parse("ba");
  return countOccurrences(acb, p) + countOccurrences(bca, p) +
         countOccurrences(cba, p) + countOccurrences(ba, p);
}

MultisetQuadruple computeABCD(const Permutation& p) {
  const int m = p.size();
  if (m == 0) throw std::invalid_argument("empty permutation");
  if (p.first() != m) {
    throw std::invalid_argument("requires the first letter to be maximal");
  }
  MultisetQuadruple q;
  const int last = p.letter(m);
  for (int i = 2; i < m; ++i) {
    const int v = p.letter(i);
    if (v > p.letter(i + 1)) q.a.push_back(v);
    if (v > last) q.c.push_back(v);
  }
  for (int j = 2; j < m; ++j) {
    const int pj = p.letter(j);
    const int pj1 = p.letter(j + 1);
    if (pj > pj1) {
      for (int i = 1; i < j; ++i) {
        const int v = p.letter(i);
        if (v > pj1 && v < pj) q.b.push_back(v);
      }
    } else {
      for (int i = 1; i < j; ++i) {
        const int v = p.letter(i);
        if (v > pj && v < pj1) q.d.push_back(v);
      }
    }
  }
  std::sort(q.a.begin(), q.a.end());
  std::sort(q.b.begin(), q.b.end());
  std::sort(q.c.begin(), q.c.end());
  std::sort(q.d.begin(), q.d.end());
  return q;
}

bool checkAnchoredIdentity(const Permutation& p) {
  if (p.empty() || p.first() != p.size()) {
    throw std::invalid_argument("requires the first letter to be maximal");
  }
  static const DashedPattern lhs1 = DashedPattern::parse("^c-ba");
  static const DashedPattern lhs2 = DashedPattern::parse("b-ca");
  static const DashedPattern rhs1 = DashedPattern::parse("^c-b-a$");
  static const DashedPattern rhs2 = DashedPattern::parse("b-ac");
  return countOccurrences(lhs1, p) + countOccurrences(lhs2, p) ==
         countOccurrences(rhs1, p) + countOccurrences(rhs2, p);
}

}  // namespace permstat
