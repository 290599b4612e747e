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

#ifndef TABLEAUXB_VERIFY_H_
#define TABLEAUXB_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tableauxb {

// Exhaustively checked identities. Counting theorems compare two
// independently enumerated numbers; structural ones count counterexamples
// against an expected 0.
enum class Theorem {
  kMaxFix,          // max k with d_k^t(n) != 0 equals the closed form
  kMaxCor,          // no i with sigma(i) > i and sigma(i+1) > i+1 (maximal)
  kAltDer,          // d^t_kmax(n) = |paired derangement class|
  kZetaBijective,   // zeta maps PT_n^B onto S_n^B injectively
  kLemBijec,        // row labels / diagonals <-> sigma(i) vs i and 0
  kLemRclw,         // fixed-point runs in alternating windows
  kCorRclw,         // shape of T+ for theta outputs
  kConsecRows,      // consecutive positive rows vs ascents / descents
  kLeftmostOnes,    // consecutive stair rows with diagonal 1
  kRoundTrips,      // psi(theta(T)) = T and theta(psi(T)) = T
  kTypeA,           // all-zero-diagonal restriction and the type-A counts
  kSnakeCount,      // snakes vs a prefix recursion
};

std::string_view to_string(Theorem theorem);
std::optional<Theorem> parse_theorem(std::string_view name);
const std::vector<Theorem>& all_theorems();

struct ReportRow {
  int n = 0;
  std::string label;   // which identity / clause / type the row covers
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool pass = false;
  // Rows outside the stated hypotheses (e.g. the off-parity lengths of a
  // bijection) are recorded but do not gate the report.
  bool asserted = true;
  std::uint64_t checked = 0;  // objects examined, for structural rows
  std::string note;
};

struct VerificationReport {
  Theorem theorem;
  std::vector<ReportRow> rows;
  double seconds = 0.0;

  // True iff every asserted row passes.
  bool passed() const;
};

struct VerifyOptions {
  int threads = 1;
  // Sample size for the n = 7, 8 round trips reached through zeta_inverse.
  int round_trip_samples = 1000;
  unsigned seed = 20140131;
};

// Runs the checks for n = 1..n_max (or the subrange the theorem speaks
// about). PreconditionError if n_max exceeds the enumeration bounds needed.
VerificationReport verify(Theorem theorem, int n_max,
                          const VerifyOptions& options = {});

std::string format_report_table(const VerificationReport& report);
std::string format_report_json(const VerificationReport& report);

}  // namespace tableauxb

#endif  // TABLEAUXB_VERIFY_H_
