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

#ifndef TABLEAUXB_ENUMERATE_H_
#define TABLEAUXB_ENUMERATE_H_

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "tableauxb/signed_permutation.h"
#include "tableauxb/tableau.h"

namespace tableauxb {

// Default exhaustive bounds. TABLEAUXB_MAX_N, when set, replaces both.
struct EnumerationBounds {
  int permutations = 8;
  int tableaux = 6;
};
EnumerationBounds enumeration_bounds();

// Lexicographically smallest window of length n: -n, -(n-1), ..., -1.
std::vector<int> first_signed_window(int n);
// Smallest window of length n whose first entry is `first`.
std::vector<int> first_signed_window_starting_with(int n, int first);

// Advances `window` to its lexicographic successor among signed windows of
// the same length. Returns false (leaving the window unspecified) after the
// last one, n, n-1, ..., 1. Mirrors std::next_permutation.
bool next_signed_permutation(std::span<int> window);

// Visits all 2^n n! windows of length n in lexicographic order.
template <typename Visitor>
void for_each_signed_window(int n, Visitor&& visit) {
  std::vector<int> window = first_signed_window(n);
  do {
    visit(std::span<const int>(window));
  } while (next_signed_permutation(window));
}

// Visits the windows whose first entry is `first`, in lexicographic order.
// The 2n choices of `first` partition the whole set.
template <typename Visitor>
void for_each_signed_window_starting_with(int n, int first, Visitor&& visit) {
  std::vector<int> window = first_signed_window_starting_with(n, first);
  do {
    visit(std::span<const int>(window));
  } while (next_signed_permutation(window) && window[0] == first);
}

std::vector<SignedPermutation> all_signed_permutations(int n);

// Every valid tableau of length n exactly once: column sets in increasing
// mask order, then fillings by backtracking from the bottom row up with
// conditions (1)-(3) as pruning. PreconditionError if n > bound.
void for_each_tableau(int n,
                      const std::function<void(const PermutationTableau&)>& visit,
                      int bound = enumeration_bounds().tableaux);
std::vector<PermutationTableau> all_tableaux(
    int n, int bound = enumeration_bounds().tableaux);

// Every statistic the counting queries need, gathered in one pass over S_n^B.
struct Census {
  int n = 0;
  std::uint64_t total = 0;
  // alternating[type][k]: windows whose type set contains `type` and that
  // have k fixed points.
  std::array<std::vector<std::uint64_t>, 4> alternating;
  // Membership counts per DerangementClass (nested).
  std::array<std::uint64_t, 3> derangements{};
  // Windows with all entries positive, i.e. ordinary permutations of [n]:
  // alternating (s1 > s2 < ...) and reverse alternating, by fixed points.
  std::vector<std::uint64_t> type_a_alternating;
  std::vector<std::uint64_t> type_a_reverse;
  std::uint64_t type_a_derangements = 0;

  std::uint64_t alternating_count(AlternatingType type, int k) const;
  std::uint64_t derangement_count(DerangementClass cls) const {
    return derangements[static_cast<int>(cls)];
  }
  std::uint64_t snakes() const;
  // Largest k with a nonzero count, or -1 if the type never occurs.
  int max_fixed_points_observed(AlternatingType type) const;

  void merge(const Census& other);
};

// Partitioned by first window entry across `threads` workers; the result
// does not depend on the thread count.
Census compute_census(int n, int threads = 1);

struct AlternatingCount {
  AlternatingType type;
  int k;
};
struct DerangementCount {
  DerangementClass cls;
};
struct TableauCount {};
struct SnakeCount {};
enum class TypeAKind { kAlternating, kReverseAlternating, kDerangement };
struct TypeACount {
  TypeAKind kind;
  int k = 0;  // fixed points; ignored for kDerangement
};

struct CountQuery {
  int n;
  std::variant<AlternatingCount, DerangementCount, TableauCount, SnakeCount,
               TypeACount>
      object;
};

// Brute-force count. PreconditionError when n exceeds the relevant bound.
std::uint64_t count(const CountQuery& query, int threads = 1);

// Independent oracles used by the verifiers.

// Snakes of length n (0 < s1 > s2 < ...), by memoized recursion on the set
// of used absolute values and the last entry.
std::uint64_t count_snakes_by_recursion(int n);
// Ordinary derangements of [n], by std::next_permutation. D_0 = 1.
std::uint64_t count_ordinary_derangements(int n);

}  // namespace tableauxb

#endif  // TABLEAUXB_ENUMERATE_H_
