// Copyright 2026 The tableauxb Authors.
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

#include "tableauxb/enumerate.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "tableauxb/errors.h"

namespace tableauxb {
namespace {

std::uint64_t low_bits(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

void check_window_length(int n) {
  if (n < 1 || n > 63) {
    throw InvalidArgument("signed windows: n = " + std::to_string(n) +
                          " outside [1, 63]");
  }
}

// Writes -max, ..., -min of the absolute values in `mask` (bit a set for
// value a) into out, the lexicographically smallest arrangement.
void fill_smallest(std::uint64_t mask, std::span<int> out) {
  std::size_t pos = 0;
  while (mask != 0) {
    const int a = 63 - std::countl_zero(mask);
    out[pos++] = -a;
    mask &= ~(std::uint64_t{1} << a);
  }
}

class TableauGenerator {
 public:
  TableauGenerator(const ShiftedDiagram& d,
                   const std::function<void(const PermutationTableau&)>& visit)
      : d_(d), visit_(visit), rows_(d.row_count(), 0) {}

  void run() { place(d_.row_count() - 1, 0, 0); }

 private:
  void place(int r, std::uint64_t bad, std::uint64_t has_one) {
    if (r < 0) {
      visit_(PermutationTableau(d_, rows_));
      return;
    }
    const int len = d_.row_length(r);
    const bool stair = d_.row_label(r) < 0;
    if (stair) {
      // Diagonal 0: the whole stair row is 0, and the column still needs a 1
      // somewhere below.
      if ((has_one >> r) & 1u) {
        rows_[r] = 0;
        place(r - 1, bad, has_one);
      }
    }
    const std::uint64_t forced = stair ? (std::uint64_t{1} << r) : 0;
    const std::uint64_t first = stair ? forced : 0;
    for (std::uint64_t bits = first; bits < (std::uint64_t{1} << len); ++bits) {
      if ((bits & forced) != forced || (bits & bad) != 0) continue;
      rows_[r] = bits;
      std::uint64_t next_bad = bad;
      if (bits != 0) {
        const int lead = std::countr_zero(bits);
        next_bad |= ~bits & low_bits(len) & ~low_bits(lead + 1);
      }
      place(r - 1, next_bad, has_one | bits);
    }
    rows_[r] = 0;
  }

  const ShiftedDiagram& d_;
  const std::function<void(const PermutationTableau&)>& visit_;
  std::vector<std::uint64_t> rows_;
};

Census empty_census(int n) {
  Census c;
  c.n = n;
  for (auto& hist : c.alternating) hist.assign(n + 1, 0);
  c.type_a_alternating.assign(n + 1, 0);
  c.type_a_reverse.assign(n + 1, 0);
  return c;
}

void tally(Census& c, std::span<const int> w) {
  ++c.total;
  const int k = count_fixed_points(w);
  const AlternatingTypeSet types = alternating_types(w);
  for (AlternatingType t : kAlternatingTypes) {
    if (types.contains(t)) ++c.alternating[static_cast<int>(t)][k];
  }
  if (const auto cls = derangement_class(w)) {
    for (int i = 0; i <= static_cast<int>(*cls); ++i) ++c.derangements[i];
  }
  if (std::all_of(w.begin(), w.end(), [](int v) { return v > 0; })) {
    if (types.contains(AlternatingType::kPosDU)) ++c.type_a_alternating[k];
    if (types.contains(AlternatingType::kPosUD)) ++c.type_a_reverse[k];
    if (k == 0) ++c.type_a_derangements;
  }
}

}  // namespace

EnumerationBounds enumeration_bounds() {
  EnumerationBounds bounds;
  if (const char* env = std::getenv("TABLEAUXB_MAX_N")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= 63) {
      bounds.permutations = static_cast<int>(value);
      bounds.tableaux = static_cast<int>(value);
    }
  }
  return bounds;
}

std::vector<int> first_signed_window(int n) {
  check_window_length(n);
  std::vector<int> w(n);
  fill_smallest(low_bits(n + 1) & ~std::uint64_t{1}, w);
  return w;
}

std::vector<int> first_signed_window_starting_with(int n, int first) {
  check_window_length(n);
  if (first == 0 || std::abs(first) > n) {
    throw InvalidArgument("first entry " + std::to_string(first) +
                          " outside [-n, n] \\ {0}");
  }
  std::vector<int> w(n);
  w[0] = first;
  const std::uint64_t rest =
      low_bits(n + 1) & ~std::uint64_t{1} & ~(std::uint64_t{1} << std::abs(first));
  fill_smallest(rest, std::span<int>(w).subspan(1));
  return w;
}

bool next_signed_permutation(std::span<int> w) {
  std::uint64_t suffix = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    const int v = w[i];
    const int a = std::abs(v);
    suffix |= std::uint64_t{1} << a;
    int next = 0;
    if (v < 0) {
      // Largest b < a gives the smallest negative value above v.
      const std::uint64_t smaller = suffix & low_bits(a);
      if (smaller != 0) {
        next = -(63 - std::countl_zero(smaller));
      } else {
        next = std::countr_zero(suffix);  // smallest positive value
      }
    } else {
      const std::uint64_t larger = suffix & ~low_bits(a + 1);
      if (larger != 0) next = std::countr_zero(larger);
    }
    if (next != 0) {
      w[i] = next;
      fill_smallest(suffix & ~(std::uint64_t{1} << std::abs(next)),
                    w.subspan(i + 1));
      return true;
    }
  }
  return false;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<SignedPermutation> out;
  for_each_signed_window(n, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

void for_each_tableau(
    int n, const std::function<void(const PermutationTableau&)>& visit,
    int bound) {
  if (n < 1) throw InvalidArgument("all_tableaux: n must be positive");
  if (n > bound) {
    throw PreconditionError("all_tableaux: n = " + std::to_string(n) +
                            " exceeds the enumeration bound " +
                            std::to_string(bound) +
                            " (raise it with TABLEAUXB_MAX_N)");
  }
  if (n > 20) throw PreconditionError("all_tableaux: n too large");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ShiftedDiagram d = ShiftedDiagram::from_mask(n, mask);
    TableauGenerator(d, visit).run();
  }
}

std::vector<PermutationTableau> all_tableaux(int n, int bound) {
  std::vector<PermutationTableau> out;
  for_each_tableau(n, [&](const PermutationTableau& t) { out.push_back(t); },
                   bound);
  return out;
}

std::uint64_t Census::alternating_count(AlternatingType type, int k) const {
  const auto& hist = alternating[static_cast<int>(type)];
  return k >= 0 && k < static_cast<int>(hist.size()) ? hist[k] : 0;
}

std::uint64_t Census::snakes() const {
  const auto& hist = alternating[static_cast<int>(AlternatingType::kPosDU)];
  return std::accumulate(hist.begin(), hist.end(), std::uint64_t{0});
}

int Census::max_fixed_points_observed(AlternatingType type) const {
  const auto& hist = alternating[static_cast<int>(type)];
  for (int k = static_cast<int>(hist.size()) - 1; k >= 0; --k) {
    if (hist[k] != 0) return k;
  }
  return -1;
}

void Census::merge(const Census& other) {
  total += other.total;
  for (std::size_t t = 0; t < alternating.size(); ++t) {
    for (std::size_t k = 0; k < alternating[t].size(); ++k) {
      alternating[t][k] += other.alternating[t][k];
    }
  }
  for (std::size_t i = 0; i < derangements.size(); ++i) {
    derangements[i] += other.derangements[i];
  }
  for (std::size_t k = 0; k < type_a_alternating.size(); ++k) {
    type_a_alternating[k] += other.type_a_alternating[k];
    type_a_reverse[k] += other.type_a_reverse[k];
  }
  type_a_derangements += other.type_a_derangements;
}

Census compute_census(int n, int threads) {
  check_window_length(n);
  std::vector<int> firsts;
  for (int v = -n; v <= n; ++v) {
    if (v != 0) firsts.push_back(v);
  }
  threads = std::clamp(threads, 1, static_cast<int>(firsts.size()));
  std::vector<Census> partial(threads, empty_census(n));
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < firsts.size(); i += threads) {
          for_each_signed_window_starting_with(
              n, firsts[i], [&](std::span<const int> w) { tally(partial[t], w); });
        }
      });
    }
  }
  Census result = empty_census(n);
  for (const Census& c : partial) result.merge(c);
  return result;
}

std::uint64_t count(const CountQuery& query, int threads) {
  const EnumerationBounds bounds = enumeration_bounds();
  if (std::holds_alternative<TableauCount>(query.object)) {
    std::uint64_t total = 0;
    for_each_tableau(query.n, [&](const PermutationTableau&) { ++total; },
                     bounds.tableaux);
    return total;
  }
  if (query.n < 1) throw InvalidArgument("count: n must be positive");
  if (query.n > bounds.permutations) {
    throw PreconditionError("count: n = " + std::to_string(query.n) +
                            " exceeds the enumeration bound " +
                            std::to_string(bounds.permutations) +
                            " (raise it with TABLEAUXB_MAX_N)");
  }
  const Census census = compute_census(query.n, threads);
  return std::visit(
      [&](const auto& q) -> std::uint64_t {
        using Q = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<Q, AlternatingCount>) {
          return census.alternating_count(q.type, q.k);
        } else if constexpr (std::is_same_v<Q, DerangementCount>) {
          return census.derangement_count(q.cls);
        } else if constexpr (std::is_same_v<Q, SnakeCount>) {
          return census.snakes();
        } else if constexpr (std::is_same_v<Q, TypeACount>) {
          const auto at = [&](const std::vector<std::uint64_t>& hist) {
            return q.k >= 0 && q.k < static_cast<int>(hist.size()) ? hist[q.k]
                                                                   : 0;
          };
          switch (q.kind) {
            case TypeAKind::kAlternating: return at(census.type_a_alternating);
            case TypeAKind::kReverseAlternating: return at(census.type_a_reverse);
            case TypeAKind::kDerangement: return census.type_a_derangements;
          }
          return 0;
        } else {
          return 0;
        }
      },
      query.object);
}

std::uint64_t count_snakes_by_recursion(int n) {
  if (n < 1 || n > 16) {
    throw InvalidArgument("count_snakes_by_recursion: n outside [1, 16]");
  }
  // completions[(used, last)]: ways to extend a prefix that used the
  // absolute values in `used` and ended with `last`. Entries alternate up
  // and down starting with an ascent from 0.
  std::map<std::pair<std::uint32_t, int>, std::uint64_t> memo;
  const auto extend = [&](auto&& self, std::uint32_t used,
                          int last) -> std::uint64_t {
    const int placed = std::popcount(used);
    if (placed == n) return 1;
    const auto key = std::make_pair(used, last);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const bool ascent = placed % 2 == 0;
    std::uint64_t total = 0;
    for (int a = 1; a <= n; ++a) {
      if ((used >> a) & 1u) continue;
      for (int v : {-a, a}) {
        if (ascent ? v > last : v < last) {
          total += self(self, used | (1u << a), v);
        }
      }
    }
    memo.emplace(key, total);
    return total;
  };
  return extend(extend, 0, 0);
}

std::uint64_t count_ordinary_derangements(int n) {
  if (n < 0 || n > 12) {
    throw InvalidArgument("count_ordinary_derangements: n outside [0, 12]");
  }
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::uint64_t total = 0;
  do {
    bool fixed = false;
    for (int i = 0; i < n && !fixed; ++i) fixed = p[i] == i + 1;
    total += !fixed;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace tableauxb
