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

#ifndef TABLEAUXB_SIGNED_PERMUTATION_H_
#define TABLEAUXB_SIGNED_PERMUTATION_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tableauxb {

// An element of the hyperoctahedral group B_n in window notation. Only
// sigma(1..n) is stored; sigma(-i) = -sigma(i) is implied.
class SignedPermutation {
 public:
  // Validates that |window| is a permutation of {1..n} with no zeros.
  // Throws InvalidArgument otherwise.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);

  int n() const { return static_cast<int>(window_.size()); }
  std::span<const int> window() const { return window_; }

  // sigma(i) for i in [-n, n] \ {0}.
  int operator()(int i) const;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;

 private:
  std::vector<int> window_;
};

inline SignedPermutation make_signed_permutation(std::vector<int> window) {
  return SignedPermutation(std::move(window));
}

// "-4,-5,3,2" <-> window. Whitespace around entries is ignored.
SignedPermutation parse_window(std::string_view text);
std::string format_window(std::span<const int> window);
inline std::string format_window(const SignedPermutation& sigma) {
  return format_window(sigma.window());
}

// The four sign/first-step patterns of alternating signed permutations.
//   kNegDU: 0 > s1 > s2 < s3 > ...    kNegUD: 0 > s1 < s2 > s3 < ...
//   kPosDU: 0 < s1 > s2 < s3 > ...    kPosUD: 0 < s1 < s2 > s3 < ...
// kPosDU windows are Arnold's snakes.
enum class AlternatingType : std::uint8_t { kNegDU, kNegUD, kPosDU, kPosUD };

inline constexpr std::array<AlternatingType, 4> kAlternatingTypes = {
    AlternatingType::kNegDU, AlternatingType::kNegUD, AlternatingType::kPosDU,
    AlternatingType::kPosUD};

// "-DU", "-UD", "+DU", "+UD".
std::string_view to_string(AlternatingType type);
// Accepts the canonical spellings and the aliases ndu, nud, pdu, pud
// (case-insensitive).
std::optional<AlternatingType> parse_alternating_type(std::string_view text);

// A window of length 1 satisfies two patterns vacuously, so classification
// works on sets.
class AlternatingTypeSet {
 public:
  constexpr AlternatingTypeSet() = default;

  constexpr void insert(AlternatingType t) { bits_ |= bit(t); }
  constexpr bool contains(AlternatingType t) const {
    return (bits_ & bit(t)) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<AlternatingType> to_vector() const;

  friend constexpr bool operator==(AlternatingTypeSet,
                                   AlternatingTypeSet) = default;

 private:
  static constexpr std::uint8_t bit(AlternatingType t) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(t));
  }
  std::uint8_t bits_ = 0;
};

// Derangement classes, nested as kMinusD within kMinus within kB.
//   kB:      no fixed point
//   kMinus:  kB and sigma(1) < 0
//   kMinusD: kMinus and sigma(2) < sigma(1)  (requires n >= 2)
enum class DerangementClass : std::uint8_t { kB, kMinus, kMinusD };

inline constexpr std::array<DerangementClass, 3> kDerangementClasses = {
    DerangementClass::kB, DerangementClass::kMinus, DerangementClass::kMinusD};

std::string_view to_string(DerangementClass cls);
// "B", "minus", "minus-d" (also "-", "-D").
std::optional<DerangementClass> parse_derangement_class(std::string_view text);

// Ascending list of i in [n] with sigma(i) = i.
std::vector<int> fixed_points(std::span<const int> window);
inline std::vector<int> fixed_points(const SignedPermutation& sigma) {
  return fixed_points(sigma.window());
}
int count_fixed_points(std::span<const int> window);

AlternatingTypeSet alternating_types(std::span<const int> window);
inline AlternatingTypeSet alternating_types(const SignedPermutation& sigma) {
  return alternating_types(sigma.window());
}

// The unique matching type, or nullopt when none matches. Throws
// InvalidArgument when more than one type matches (only possible for n = 1);
// callers that count should use alternating_types().
std::optional<AlternatingType> classify_alternating(
    const SignedPermutation& sigma);

// Most specific class, or nullopt if sigma has a fixed point.
std::optional<DerangementClass> derangement_class(std::span<const int> window);
inline std::optional<DerangementClass> derangement_class(
    const SignedPermutation& sigma) {
  return derangement_class(sigma.window());
}

// Membership, honoring the nesting (a kMinusD window is also in kB).
bool in_derangement_class(std::span<const int> window, DerangementClass cls);

// Largest possible number of fixed points of an alternating window of the
// given type and length: ceil((n-2)/2), ceil((n-1)/2), ceil(n/2),
// ceil((n+1)/2) for -DU, -UD, +DU, +UD.
int max_fixed_points(AlternatingType type, int n);

}  // namespace tableauxb

#endif  // TABLEAUXB_SIGNED_PERMUTATION_H_
