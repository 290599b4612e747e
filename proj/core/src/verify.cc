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

#include "tableauxb/verify.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "tableauxb/bijections.h"
#include "tableauxb/enumerate.h"
#include "tableauxb/errors.h"
#include "tableauxb/zigzag.h"

namespace tableauxb {
namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 12> kNames{{
    {Theorem::kMaxFix, "maxfix"},
    {Theorem::kMaxCor, "maxcor"},
    {Theorem::kAltDer, "altder"},
    {Theorem::kZetaBijective, "zeta-bijective"},
    {Theorem::kLemBijec, "lem-bijec"},
    {Theorem::kLemRclw, "lem-rclw"},
    {Theorem::kCorRclw, "cor-rclw"},
    {Theorem::kConsecRows, "consecrows"},
    {Theorem::kLeftmostOnes, "leftmostones"},
    {Theorem::kRoundTrips, "round-trips"},
    {Theorem::kTypeA, "type-a"},
    {Theorem::kSnakeCount, "snake"},
}};

struct Record {
  PermutationTableau tableau;
  SignedPermutation image;
};

// Results are independent of the thread count, so caches key on n alone.
const Census& census_for(int n, int threads) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Census>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Census>(compute_census(n, threads));
  return *slot;
}

const std::vector<Record>& tableaux_for(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<Record>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<Record>>();
    for_each_tableau(n, [&](const PermutationTableau& t) {
      slot->push_back({t, zeta(t)});
    });
  }
  return *slot;
}

void require_bound(int n_max, int bound, std::string_view what) {
  if (n_max < 1) throw InvalidArgument("verify: n_max must be positive");
  if (n_max > bound) {
    throw PreconditionError("verify: n_max = " + std::to_string(n_max) +
                            " exceeds the " + std::string(what) +
                            " enumeration bound " + std::to_string(bound) +
                            " (raise it with TABLEAUXB_MAX_N)");
  }
}

// Splits S_n^B by first entry across workers, one accumulator each.
template <typename Acc, typename Visit>
std::vector<Acc> scan_windows(int n, int threads, const Acc& init, Visit visit) {
  std::vector<int> firsts;
  for (int v = -n; v <= n; ++v) {
    if (v != 0) firsts.push_back(v);
  }
  threads = std::clamp(threads, 1, static_cast<int>(firsts.size()));
  std::vector<Acc> accs(threads, init);
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < firsts.size(); i += threads) {
          for_each_signed_window_starting_with(
              n, firsts[i], [&](std::span<const int> w) { visit(accs[t], w); });
        }
      });
    }
  }
  return accs;
}

ReportRow counting_row(int n, std::string label, std::uint64_t lhs,
                       std::uint64_t rhs, std::string note = {}) {
  ReportRow row;
  row.n = n;
  row.label = std::move(label);
  row.lhs = lhs;
  row.rhs = rhs;
  row.pass = lhs == rhs;
  row.note = std::move(note);
  return row;
}

ReportRow structural_row(int n, std::string label, std::uint64_t failures,
                         std::uint64_t checked, std::string note = {}) {
  ReportRow row = counting_row(n, std::move(label), failures, 0, std::move(note));
  row.checked = checked;
  return row;
}

std::string type_label(AlternatingType t) { return std::string(to_string(t)); }

int floor_half(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }
int ceil_half(int a) { return -floor_half(-a); }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

bool all_diagonals_zero(const PermutationTableau& t) {
  const ShiftedDiagram& d = t.diagram();
  for (int r = 0; r < d.column_count(); ++r) {
    if (t.cell(r, r)) return false;
  }
  return true;
}

bool is_maximal_of_type(const SignedPermutation& s, AlternatingType t) {
  return alternating_types(s).contains(t) &&
         count_fixed_points(s.window()) == max_fixed_points(t, s.n());
}

// ---------------------------------------------------------------------------

std::vector<ReportRow> check_maxfix(int n_max, const VerifyOptions& opt) {
  require_bound(n_max, enumeration_bounds().permutations, "permutation");
  std::vector<ReportRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const Census& c = census_for(n, opt.threads);
    for (AlternatingType t : kAlternatingTypes) {
      const int observed = c.max_fixed_points_observed(t);
      ReportRow row = counting_row(
          n, type_label(t) + " max k", static_cast<std::uint64_t>(std::max(observed, 0)),
          static_cast<std::uint64_t>(max_fixed_points(t, n)));
      if (observed < 0) {
        row.pass = false;
        row.note = "type does not occur";
      }
      row.checked = c.total;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<ReportRow> check_maxcor(int n_max, const VerifyOptions& opt) {
  require_bound(n_max, enumeration_bounds().permutations, "permutation");
  struct Acc {
    std::uint64_t maximal = 0, clause1 = 0, clause2 = 0;
  };
  std::vector<ReportRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto accs = scan_windows(n, opt.threads, Acc{}, [n](Acc& a, std::span<const int> w) {
      const AlternatingTypeSet types = alternating_types(w);
      if (types.empty()) return;
      const int k = count_fixed_points(w);
      bool maximal = false;
      for (AlternatingType t : kAlternatingTypes) {
        maximal = maximal || (types.contains(t) && k == max_fixed_points(t, n));
      }
      if (!maximal) return;
      ++a.maximal;
      bool bad1 = false, bad2 = false;
      for (int i = 1; i <= n; ++i) {
        const bool exceeds = w[i - 1] > i;
        if (exceeds && i < n && w[i] > i + 1) bad1 = true;
        if (exceeds && i > 1 && i < n && !(w[i - 2] < w[i - 1] && w[i - 1] > w[i])) {
          bad2 = true;
        }
      }
      a.clause1 += bad1;
      a.clause2 += bad2;
    });
    Acc total;
    for (const Acc& a : accs) {
      total.maximal += a.maximal;
      total.clause1 += a.clause1;
      total.clause2 += a.clause2;
    }
    rows.push_back(structural_row(n, "no adjacent excedances", total.clause1,
                                  total.maximal));
    rows.push_back(structural_row(n, "excedance is a peak", total.clause2,
                                  total.maximal));
  }
  return rows;
}

std::vector<ReportRow> check_altder(int n_max, const VerifyOptions& opt) {
  require_bound(n_max, enumeration_bounds().permutations, "permutation");
  std::vector<ReportRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const Census& alt = census_for(n, opt.threads);
    for (AlternatingType t : kAlternatingTypes) {
      const int k = max_fixed_points(t, n);
      // Source length m with alternating_length(t, m) = n, rounded down
      // off parity.
      int m = 0;
      switch (t) {
        case AlternatingType::kNegDU: m = (n + 2) / 2; break;
        case AlternatingType::kNegUD: m = (n + 1) / 2; break;
        case AlternatingType::kPosDU: m = n / 2; break;
        case AlternatingType::kPosUD: m = (n - 1) / 2; break;
      }
      const DerangementClass cls = paired_derangement_class(t);
      // The empty permutation is the only derangement of length 0.
      const std::uint64_t rhs =
          m == 0 ? 1 : census_for(m, opt.threads).derangement_count(cls);
      const bool on_parity = alternating_length(t, m) == n;
      ReportRow row = counting_row(
          n, type_label(t), alt.alternating_count(t, k), rhs,
          "k=" + std::to_string(k) + " vs " + std::string(to_string(cls)) +
              " derangements of length " + std::to_string(m));
      row.checked = alt.total;
      if (!on_parity) {
        row.asserted = false;
        row.note += ", off parity";
      }
      rows.push_back(row);
    }
    // Off parity for the DU types, n is forced to be a fixed point once
    // the maximum is positive.
    if (n % 2 == 1) {
      struct Acc {
        std::array<std::uint64_t, 2> maximal{}, unfixed{};
      };
      constexpr std::array<AlternatingType, 2> kDu{AlternatingType::kNegDU,
                                                   AlternatingType::kPosDU};
      const auto accs = scan_windows(n, opt.threads, Acc{}, [n, &kDu](Acc& a, std::span<const int> w) {
        const AlternatingTypeSet types = alternating_types(w);
        const int k = count_fixed_points(w);
        for (std::size_t i = 0; i < kDu.size(); ++i) {
          if (types.contains(kDu[i]) && k == max_fixed_points(kDu[i], n)) {
            ++a.maximal[i];
            a.unfixed[i] += w[n - 1] != n;
          }
        }
      });
      for (std::size_t i = 0; i < kDu.size(); ++i) {
        std::uint64_t maximal = 0, unfixed = 0;
        for (const Acc& a : accs) {
          maximal += a.maximal[i];
          unfixed += a.unfixed[i];
        }
        ReportRow row = structural_row(n, type_label(kDu[i]) + " n fixed",
                                       unfixed, maximal, "odd length");
        if (max_fixed_points(kDu[i], n) == 0) {
          row.asserted = false;
          row.note += ", no fixed points possible";
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::vector<ReportRow> check_zeta_bijective(int n_max, const VerifyOptions&) {
  require_bound(n_max, enumeration_bounds().tableaux, "tableau");
  std::vector<ReportRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto& records = tableaux_for(n);
    std::set<std::vector<int>> images;
    for (const Record& r : records) {
      const auto w = r.image.window();
      images.emplace(w.begin(), w.end());
    }
    const std::uint64_t expected = (std::uint64_t{1} << n) * factorial(n);
    ReportRow row = counting_row(n, "distinct images", images.size(), expected,
                                 "tableaux=" + std::to_string(records.size()));
    row.pass = row.pass && records.size() == expected;
    row.checked = records.size();
    rows.push_back(row);
  }
  return rows;
}

std::vector<ReportRow> check_lem_bijec(int n_max, const VerifyOptions&) {
  require_bound(n_max, enumeration_bounds().tableaux, "tableau");
  std::vector<ReportRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::array<std::uint64_t, 4> bad{};
    std::uint64_t checked = 0;
    for (const Record& r : tableaux_for(n)) {
      const ShiftedDiagram& d = r.tableau.diagram();
      for (int i = 1; i <= n; ++i) {
        const int s = r.image(i);
        const int pos = d.row_index(i);
        const int neg = d.row_index(-i);
        bad[0] += (s >= i) != (pos >= 0);
        bad[1] += (s == i) != (pos >= 0 && r.tableau.row_is_empty(pos));
        bad[2] += (s < i) != (neg >= 0);
        bad[3] += (s < 0) != (neg >= 0 && r.tableau.cell(neg, neg));
        ++checked;
      }
    }
    rows.push_back(structural_row(n, "s(i)>=i <=> row i", bad[0], checked));
    rows.push_back(structural_row(n, "s(i)=i <=> empty row i", bad[1], checked));
    rows.push_back(structural_row(n, "s(i)<i <=> row -i", bad[2], checked));
    rows.push_back(structural_row(n, "s(i)<0 <=> diagonal of -i is 1", bad[3], checked));
  }
  return rows;
}

// Position parity of the ascents in a type: even for DU, odd for UD.
int ascent_parity(AlternatingType t) {
  return t == AlternatingType::kNegDU || t == AlternatingType::kPosDU ? 0 : 1;
}

std::vector<ReportRow> check_lem_rclw(int n_max, const VerifyOptions& opt) {
  require_bound(n_max, enumeration_bounds().permutations, "permutation");
  struct Acc {
    std::array<std::uint64_t, 4> windows{}, long_run{}, odd_pair{}, even_pair{};
  };
  std::vector<ReportRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto accs = scan_windows(n, opt.threads, Acc{}, [n](Acc& a, std::span<const int> w) {
      const AlternatingTypeSet types = alternating_types(w);
      if (types.empty()) return;
      int run = 0, longest = 0;
      bool odd_pair = false, even_pair = false;
      for (int i = 1; i <= n; ++i) {
        run = w[i - 1] == i ? run + 1 : 0;
        longest = std::max(longest, run);
        if (run >= 2) ((i - 1) % 2 == 1 ? odd_pair : even_pair) = true;
      }
      for (AlternatingType t : kAlternatingTypes) {
        if (!types.contains(t)) continue;
        const int ti = static_cast<int>(t);
        ++a.windows[ti];
        a.long_run[ti] += longest > 2;
        a.odd_pair[ti] += odd_pair;
        a.even_pair[ti] += ascent_parity(t) == 0 ? odd_pair : even_pair;
      }
    });
    for (AlternatingType t : kAlternatingTypes) {
      const int ti = static_cast<int>(t);
      std::uint64_t windows = 0, long_run = 0, odd_pair = 0, off_ascent = 0;
      for (const Acc& a : accs) {
        windows += a.windows[ti];
        long_run += a.long_run[ti];
        odd_pair += a.odd_pair[ti];
        off_ascent += a.even_pair[ti];
      }
      rows.push_back(structural_row(n, type_label(t) + " fixed run <= 2", long_run, windows));
      rows.push_back(structural_row(n, type_label(t) + " fixed pair i,i+1 has i even",
                                    odd_pair, windows));
      rows.push_back(structural_row(n, type_label(t) + " fixed pair i,i+1 at an ascent",
                                    off_ascent, windows));
    }
  }
  return rows;
}

// Every theta output built from the derangement tableaux of length m.
template <typename Visit>
void for_each_theta_case(int m, AlternatingType t, Visit visit) {
  const DerangementClass cls = paired_derangement_class(t);
  for (const Record& r : tableaux_for(m)) {
    if (!in_derangement_class(r.image.window(), cls)) continue;
    visit(r, theta(r.tableau, t));
  }
}

std::vector<ReportRow> check_cor_rclw(int n_max, const VerifyOptions&) {
  require_bound(n_max, enumeration_bounds().tableaux, "tableau");
  std::vector<ReportRow> rows;
  for (int m = 1; m <= n_max; ++m) {
    for (AlternatingType t : kAlternatingTypes) {
      // 0, 1, 2: the three clauses as stated. 3, 4: the run and ascent
      // readings of the first two, consistent with the fixed-run check.
      std::array<std::uint64_t, 5> bad{};
      std::uint64_t outputs = 0;
      for_each_theta_case(m, t, [&](const Record&, const PermutationTableau& out) {
        ++outputs;
        const ShiftedDiagram& d = out.diagram();
        std::map<int, int> empty_by_length;
        std::array<bool, 5> hit{};
        int run = 0;
        for (int r = d.first_positive_row(); r < d.row_count(); ++r) {
          const bool empty = out.row_is_empty(r);
          const int label = d.row_label(r);
          if (empty && ++empty_by_length[d.row_length(r)] > 2) hit[0] = true;
          const bool follows = r > d.first_positive_row() && d.row_label(r - 1) == label - 1;
          run = empty ? (follows && run > 0 ? run + 1 : 1) : 0;
          if (run > 2) hit[3] = true;
          if (run >= 2) {
            const int i = label - 1;
            if (i % 2 != 0) hit[1] = true;
            if (i % 2 != ascent_parity(t)) hit[4] = true;
          }
          if (r + 1 < d.row_count() && !empty && !out.row_is_empty(r + 1)) {
            hit[2] = true;
          }
        }
        for (std::size_t c = 0; c < bad.size(); ++c) bad[c] += hit[c];
      });
      const std::string note = "outputs of length " +
                               std::to_string(alternating_length(t, m)) +
                               " from m=" + std::to_string(m);
      const std::string ty = type_label(t);
      rows.push_back(structural_row(m, ty + " <= 2 empty rows per length", bad[0], outputs, note));
      rows.push_back(structural_row(m, ty + " empty rows i,i+1 have i even", bad[1], outputs, note));
      rows.push_back(structural_row(m, ty + " no adjacent nonempty rows", bad[2], outputs, note));
      rows.push_back(structural_row(m, ty + " <= 2 consecutive empty rows", bad[3], outputs, note));
      rows.push_back(structural_row(m, ty + " empty rows i,i+1 at an ascent", bad[4], outputs, note));
    }
  }
  return rows;
}

std::vector<ReportRow> check_consecrows(int n_max, const VerifyOptions&) {
  require_bound(n_max, enumeration_bounds().tableaux, "tableau");
  std::vector<ReportRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::array<std::uint64_t, 3> bad{}, hits{};
    for (const Record& rec : tableaux_for(n)) {
      const ShiftedDiagram& d = rec.tableau.diagram();
      const auto& s = rec.image;
      for (int i = 1; i + 1 <= n; ++i) {
        const int ri = d.row_index(i);
        if (ri < 0) continue;
        const int rnext = d.row_index(i + 1);
        if (rnext >= 0) {
          if (rec.tableau.row_is_empty(ri)) {
            ++hits[0];
            bad[0] += !(s(i) < s(i + 1));
          } else if (rec.tableau.row_is_empty(rnext)) {
            ++hits[1];
            bad[1] += !(s(i) > s(i + 1));
          }
        } else if (i + 2 <= n && d.row_index(i + 2) >= 0 &&
                   rec.tableau.row_is_empty(ri)) {
          ++hits[2];
          bad[2] += !(s(i) > s(i + 1) && s(i + 1) < s(i + 2));
        }
      }
    }
    rows.push_back(structural_row(n, "empty i, row i+1 => ascent", bad[0], hits[0]));
    rows.push_back(structural_row(n, "nonempty i, empty i+1 => descent", bad[1], hits[1]));
    rows.push_back(structural_row(n, "empty i, col i+1, row i+2 => valley", bad[2], hits[2]));
  }
  return rows;
}

std::vector<ReportRow> check_leftmost_ones(int n_max, const VerifyOptions&) {
  require_bound(n_max, enumeration_bounds().tableaux, "tableau");
  std::vector<ReportRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t bad = 0, hits = 0;
    for (const Record& rec : tableaux_for(n)) {
      const PermutationTableau& t = rec.tableau;
      const ShiftedDiagram& d = t.diagram();
      for (int r = 0; r + 1 < d.column_count(); ++r) {
        if (!t.cell(r, r) || !t.cell(r + 1, r + 1)) continue;
        // Leftmost column of the upper row lies strictly left of the lower.
        if (leftmost_one(t, r) >= leftmost_one(t, r + 1)) continue;
        ++hits;
        const int i = -d.row_label(r), j = -d.row_label(r + 1);
        bad += !(rec.image(i) < rec.image(j) && rec.image(j) < 0);
      }
    }
    rows.push_back(structural_row(n, "s(i) < s(j) < 0", bad, hits));
  }
  return rows;
}

std::vector<ReportRow> check_round_trips(int n_max, const VerifyOptions& opt) {
  const EnumerationBounds bounds = enumeration_bounds();
  require_bound(n_max, std::max(bounds.permutations, bounds.tableaux),
                "permutation");
  std::vector<ReportRow> rows;

  // psi(theta(T)) = T on derangement tableaux; also the image size.
  for (int m = 1; m <= std::min(n_max, bounds.tableaux); ++m) {
    for (AlternatingType t : kAlternatingTypes) {
      std::uint64_t bad = 0, checked = 0;
      std::set<std::vector<int>> images;
      for_each_theta_case(m, t, [&](const Record& src, const PermutationTableau& out) {
        ++checked;
        bad += !(psi(out, t) == src.tableau);
        const SignedPermutation s = zeta(out);
        images.emplace(s.window().begin(), s.window().end());
      });
      rows.push_back(structural_row(m, type_label(t) + " psi(theta(T)) = T", bad, checked,
                                    "derangement tableaux of length m"));
      const int n = alternating_length(t, m);
      if (n >= 1 && n <= std::min(n_max, bounds.permutations)) {
        ReportRow row = counting_row(
            n, type_label(t) + " |theta image|", images.size(),
            census_for(n, opt.threads).alternating_count(t, max_fixed_points(t, n)),
            "from m=" + std::to_string(m));
        row.checked = checked;
        rows.push_back(row);
      }
    }
  }

  // theta(psi(T)) = T on maximal alternating tableaux.
  for (int n = 1; n <= n_max; ++n) {
    std::vector<AlternatingType> types;
    for (AlternatingType t : kAlternatingTypes) {
      if (has_bijection_parity(t, n)) types.push_back(t);
    }
    if (types.empty()) continue;
    std::map<AlternatingType, std::vector<PermutationTableau>> inputs;
    std::string source;
    if (n <= bounds.tableaux) {
      source = "all tableaux";
      for (const Record& r : tableaux_for(n)) {
        for (AlternatingType t : types) {
          if (is_maximal_of_type(r.image, t)) inputs[t].push_back(r.tableau);
        }
      }
    } else {
      require_bound(n, bounds.permutations, "permutation");
      using Found = std::map<AlternatingType, std::vector<std::vector<int>>>;
      const auto accs = scan_windows(n, opt.threads, Found{}, [&](Found& f, std::span<const int> w) {
        const AlternatingTypeSet set = alternating_types(w);
        if (set.empty()) return;
        const int k = count_fixed_points(w);
        for (AlternatingType t : types) {
          if (set.contains(t) && k == max_fixed_points(t, n)) {
            f[t].emplace_back(w.begin(), w.end());
          }
        }
      });
      std::mt19937 rng(opt.seed + static_cast<unsigned>(n));
      for (AlternatingType t : types) {
        std::vector<std::vector<int>> windows;
        for (const Found& f : accs) {
          if (auto it = f.find(t); it != f.end()) {
            windows.insert(windows.end(), it->second.begin(), it->second.end());
          }
        }
        std::sort(windows.begin(), windows.end());
        std::shuffle(windows.begin(), windows.end(), rng);
        if (windows.size() > static_cast<std::size_t>(opt.round_trip_samples)) {
          windows.resize(opt.round_trip_samples);
        }
        for (auto& w : windows) {
          inputs[t].push_back(zeta_inverse(SignedPermutation(std::move(w)), n));
        }
      }
      source = "zeta_inverse samples";
    }
    for (AlternatingType t : types) {
      std::uint64_t bad = 0;
      for (const PermutationTableau& tab : inputs[t]) {
        bad += !(theta(psi(tab, t), t) == tab);
      }
      rows.push_back(structural_row(n, type_label(t) + " theta(psi(T)) = T", bad,
                                    inputs[t].size(), source));
    }
  }
  return rows;
}

std::vector<ReportRow> check_type_a(int n_max, const VerifyOptions& opt) {
  const EnumerationBounds bounds = enumeration_bounds();
  require_bound(n_max, bounds.permutations, "permutation");
  std::vector<ReportRow> rows;
  for (int n = 1; n <= std::min(n_max, bounds.tableaux); ++n) {
    std::uint64_t zero_diagonal = 0, bad = 0;
    for (const Record& r : tableaux_for(n)) {
      if (!all_diagonals_zero(r.tableau)) continue;
      ++zero_diagonal;
      const auto w = r.image.window();
      bad += std::any_of(w.begin(), w.end(), [](int v) { return v < 0; });
    }
    rows.push_back(structural_row(n, "zero diagonals => positive image", bad,
                                  zero_diagonal));
    rows.push_back(counting_row(n, "zero-diagonal tableaux = n!", zero_diagonal,
                                factorial(n)));
    for (AlternatingType t : {AlternatingType::kPosDU, AlternatingType::kPosUD}) {
      std::uint64_t sources = 0, not_type_a = 0;
      for_each_theta_case(n, t, [&](const Record& src, const PermutationTableau& out) {
        if (!all_diagonals_zero(src.tableau)) return;
        ++sources;
        const SignedPermutation s = zeta(out);
        not_type_a += !all_diagonals_zero(out) ||
                      std::any_of(s.window().begin(), s.window().end(),
                                  [](int v) { return v < 0; });
      });
      rows.push_back(structural_row(n, type_label(t) + " theta keeps type A", not_type_a,
                                    sources, "derangement tableaux of length m=n"));
    }
  }
  for (int n = 4; n <= n_max; ++n) {
    const Census& c = census_for(n, opt.threads);
    const auto top = [](const std::vector<std::uint64_t>& hist) {
      int k = static_cast<int>(hist.size()) - 1;
      while (k > 0 && hist[k] == 0) --k;
      return static_cast<std::uint64_t>(k);
    };
    rows.push_back(counting_row(n, "max k, alternating", top(c.type_a_alternating),
                                ceil_half(n)));
    const int k = ceil_half(n);
    rows.push_back(counting_row(n, "d_k(n) = D(floor(n/2))", c.type_a_alternating[k],
                                count_ordinary_derangements(n / 2),
                                "k=" + std::to_string(k)));
    if (n >= 5) {
      rows.push_back(counting_row(n, "max k, reverse alternating",
                                  top(c.type_a_reverse), ceil_half(n + 1)));
      const int kr = ceil_half(n + 1);
      rows.push_back(counting_row(n, "d*_k(n) = D(floor((n-1)/2))",
                                  c.type_a_reverse[kr],
                                  count_ordinary_derangements((n - 1) / 2),
                                  "k=" + std::to_string(kr)));
    }
  }
  return rows;
}

std::vector<ReportRow> check_snakes(int n_max, const VerifyOptions& opt) {
  require_bound(n_max, enumeration_bounds().permutations, "permutation");
  std::vector<ReportRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    ReportRow row = counting_row(n, "snakes", census_for(n, opt.threads).snakes(),
                                 count_snakes_by_recursion(n),
                                 "rhs by prefix recursion");
    rows.push_back(row);
  }
  return rows;
}


}  // namespace

std::string_view to_string(Theorem theorem) {
  for (const auto& [t, name] : kNames) {
    if (t == theorem) return name;
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return c == '_' ? '-' : std::tolower(c); });
  for (const auto& [t, n] : kNames) {
    if (n == lower) return t;
  }
  if (lower == "type-a-restriction" || lower == "typea") return Theorem::kTypeA;
  if (lower == "snake-count" || lower == "snakes") return Theorem::kSnakeCount;
  return std::nullopt;
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = [] {
    std::vector<Theorem> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

bool VerificationReport::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReportRow& r) { return !r.asserted || r.pass; });
}

VerificationReport verify(Theorem theorem, int n_max,
                          const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report{theorem, {}, 0.0};
  switch (theorem) {
    case Theorem::kMaxFix: report.rows = check_maxfix(n_max, options); break;
    case Theorem::kMaxCor: report.rows = check_maxcor(n_max, options); break;
    case Theorem::kAltDer: report.rows = check_altder(n_max, options); break;
    case Theorem::kZetaBijective: report.rows = check_zeta_bijective(n_max, options); break;
    case Theorem::kLemBijec: report.rows = check_lem_bijec(n_max, options); break;
    case Theorem::kLemRclw: report.rows = check_lem_rclw(n_max, options); break;
    case Theorem::kCorRclw: report.rows = check_cor_rclw(n_max, options); break;
    case Theorem::kConsecRows: report.rows = check_consecrows(n_max, options); break;
    case Theorem::kLeftmostOnes: report.rows = check_leftmost_ones(n_max, options); break;
    case Theorem::kRoundTrips: report.rows = check_round_trips(n_max, options); break;
    case Theorem::kTypeA: report.rows = check_type_a(n_max, options); break;
    case Theorem::kSnakeCount: report.rows = check_snakes(n_max, options); break;
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.n < b.n; });
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report_table(const VerificationReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%s: %s (%zu rows, %.2f s)\n",
                std::string(to_string(report.theorem)).c_str(),
                report.passed() ? "PASS" : "FAIL", report.rows.size(), report.seconds);
  out << line;
  std::size_t width = 4;
  for (const ReportRow& r : report.rows) width = std::max(width, r.label.size());
  std::snprintf(line, sizeof line, "%3s  %-*s %12s %12s %10s  %s\n", "n",
                static_cast<int>(width), "case", "lhs", "rhs", "checked", "result");
  out << line;
  for (const ReportRow& r : report.rows) {
    const char* status = r.pass ? "ok" : (r.asserted ? "FAIL" : "mismatch");
    std::snprintf(line, sizeof line, "%3d  %-*s %12llu %12llu %10llu  %s%s",
                  r.n, static_cast<int>(width), r.label.c_str(),
                  static_cast<unsigned long long>(r.lhs),
                  static_cast<unsigned long long>(r.rhs),
                  static_cast<unsigned long long>(r.checked), status,
                  r.asserted ? "" : " (not asserted)");
    out << line;
    if (!r.note.empty()) out << "  [" << r.note << "]";
    out << '\n';
  }
  return out.str();
}

std::string format_report_json(const VerificationReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ReportRow& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"case", r.label},
                    {"lhs", r.lhs},
                    {"rhs", r.rhs},
                    {"pass", r.pass},
                    {"asserted", r.asserted},
                    {"checked", r.checked},
                    {"note", r.note}});
  }
  nlohmann::ordered_json doc = {{"theorem", std::string(to_string(report.theorem))},
                        {"passed", report.passed()},
                        {"seconds", report.seconds},
                        {"rows", std::move(rows)}};
  return doc.dump();
}

}  // namespace tableauxb
