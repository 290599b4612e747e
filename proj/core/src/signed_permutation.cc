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

#include "tableauxb/signed_permutation.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "tableauxb/errors.h"

namespace tableauxb {
namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// True iff w[0] > w[1] < w[2] > ... when `down_first`, or the mirrored
// pattern otherwise.
bool zigzags(std::span<const int> w, bool down_first) {
  bool down = down_first;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (down ? !(w[i] > w[i + 1]) : !(w[i] < w[i + 1])) return false;
    down = !down;
  }
  return true;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> window)
    : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  if (n == 0) throw InvalidArgument("signed permutation: empty window");
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = window_[i];
    if (v == 0) {
      throw InvalidArgument("signed permutation: zero at position " +
                            std::to_string(i + 1));
    }
    const int a = std::abs(v);
    if (a > n) {
      throw InvalidArgument("signed permutation: entry " + std::to_string(v) +
                            " out of range for n = " + std::to_string(n));
    }
    if (seen[a]) {
      throw InvalidArgument("signed permutation: repeated absolute value " +
                            std::to_string(a));
    }
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int i) const {
  if (i == 0 || std::abs(i) > n()) {
    throw InvalidArgument("signed permutation: index " + std::to_string(i) +
                          " outside [-n, n]");
  }
  return i > 0 ? window_[i - 1] : -window_[-i - 1];
}

SignedPermutation parse_window(std::string_view text) {
  std::vector<int> values;
  text = trim(text);
  if (text.empty()) throw InvalidArgument("window: empty text");
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw InvalidArgument("window: cannot parse entry '" +
                            std::string(token) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return SignedPermutation(std::move(values));
}

std::string format_window(std::span<const int> window) {
  std::string out;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(window[i]);
  }
  return out;
}

std::string_view to_string(AlternatingType type) {
  switch (type) {
    case AlternatingType::kNegDU: return "-DU";
    case AlternatingType::kNegUD: return "-UD";
    case AlternatingType::kPosDU: return "+DU";
    case AlternatingType::kPosUD: return "+UD";
  }
  return "?";
}

std::optional<AlternatingType> parse_alternating_type(std::string_view text) {
  const std::string t = lowercase(trim(text));
  if (t == "-du" || t == "ndu") return AlternatingType::kNegDU;
  if (t == "-ud" || t == "nud") return AlternatingType::kNegUD;
  if (t == "+du" || t == "pdu") return AlternatingType::kPosDU;
  if (t == "+ud" || t == "pud") return AlternatingType::kPosUD;
  return std::nullopt;
}

int AlternatingTypeSet::size() const { return std::popcount(bits_); }

std::vector<AlternatingType> AlternatingTypeSet::to_vector() const {
  std::vector<AlternatingType> out;
  for (AlternatingType t : kAlternatingTypes) {
    if (contains(t)) out.push_back(t);
  }
  return out;
}

std::string_view to_string(DerangementClass cls) {
  switch (cls) {
    case DerangementClass::kB: return "B";
    case DerangementClass::kMinus: return "minus";
    case DerangementClass::kMinusD: return "minus-d";
  }
  return "?";
}

std::optional<DerangementClass> parse_derangement_class(
    std::string_view text) {
  const std::string t = lowercase(trim(text));
  if (t == "b") return DerangementClass::kB;
  if (t == "minus" || t == "-") return DerangementClass::kMinus;
  if (t == "minus-d" || t == "minusd" || t == "-d") {
    return DerangementClass::kMinusD;
  }
  return std::nullopt;
}

std::vector<int> fixed_points(std::span<const int> window) {
  std::vector<int> out;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i] == static_cast<int>(i) + 1) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int count_fixed_points(std::span<const int> window) {
  int k = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    k += window[i] == static_cast<int>(i) + 1;
  }
  return k;
}

AlternatingTypeSet alternating_types(std::span<const int> window) {
  AlternatingTypeSet out;
  if (window.empty()) return out;
  const bool negative = window[0] < 0;
  if (zigzags(window, /*down_first=*/true)) {
    out.insert(negative ? AlternatingType::kNegDU : AlternatingType::kPosDU);
  }
  if (zigzags(window, /*down_first=*/false)) {
    out.insert(negative ? AlternatingType::kNegUD : AlternatingType::kPosUD);
  }
  return out;
}

std::optional<AlternatingType> classify_alternating(
    const SignedPermutation& sigma) {
  const AlternatingTypeSet types = alternating_types(sigma);
  if (types.empty()) return std::nullopt;
  if (types.size() > 1) {
    std::string names;
    for (AlternatingType t : types.to_vector()) {
      if (!names.empty()) names += ", ";
      names += to_string(t);
    }
    throw InvalidArgument("classify_alternating: window " +
                          format_window(sigma) + " matches several types (" +
                          names + ")");
  }
  return types.to_vector().front();
}

std::optional<DerangementClass> derangement_class(std::span<const int> window) {
  if (count_fixed_points(window) > 0) return std::nullopt;
  if (window[0] > 0) return DerangementClass::kB;
  if (window.size() >= 2 && window[1] < window[0]) {
    return DerangementClass::kMinusD;
  }
  return DerangementClass::kMinus;
}

bool in_derangement_class(std::span<const int> window, DerangementClass cls) {
  const auto actual = derangement_class(window);
  return actual.has_value() &&
         static_cast<int>(*actual) >= static_cast<int>(cls);
}

int max_fixed_points(AlternatingType type, int n) {
  if (n < 1) throw InvalidArgument("max_fixed_points: n must be positive");
  // ceil(a / 2) for a >= -1, in integers.
  const auto ceil_half = [](int a) { return (a + 1) / 2; };
  switch (type) {
    case AlternatingType::kNegDU: return ceil_half(n - 2);
    case AlternatingType::kNegUD: return ceil_half(n - 1);
    case AlternatingType::kPosDU: return ceil_half(n);
    case AlternatingType::kPosUD: return ceil_half(n + 1);
  }
  return 0;
}

}  // namespace tableauxb
