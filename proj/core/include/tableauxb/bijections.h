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

#ifndef TABLEAUXB_BIJECTIONS_H_
#define TABLEAUXB_BIJECTIONS_H_

#include <span>
#include <vector>

#include "tableauxb/signed_permutation.h"
#include "tableauxb/tableau.h"

namespace tableauxb {

// One empty positive row to insert. `slot` counts border-path steps of the
// source tableau that precede the new row (0..m); rows sharing a slot are
// interchangeable since they are all zero.
struct PlannedInsertion {
  int slot = 0;
  int length = 0;

  friend bool operator==(const PlannedInsertion&,
                         const PlannedInsertion&) = default;
};

using InsertionPlan = std::vector<PlannedInsertion>;

// Derangement class paired with each alternating type:
// -DU -> kMinusD, -UD -> kMinus, +DU and +UD -> kB.
DerangementClass paired_derangement_class(AlternatingType type);

// Length of the alternating side produced from a derangement tableau of
// length m: 2m-2, 2m-1, 2m, 2m+1 for -DU, -UD, +DU, +UD.
int alternating_length(AlternatingType type, int m);

// Whether n has the parity on which the type's bijection is defined
// (even for -DU/+DU, odd for -UD/+UD) and is large enough to be reached.
bool has_bijection_parity(AlternatingType type, int n);

// Rows theta inserts into a derangement tableau of length m with positive
// shape `shape`. A shape whose first part is 0 is read as having no
// positive rows. Throws InvalidArgument for shapes that cannot occur in a
// length-m tableau.
InsertionPlan insertion_plan(std::span<const int> shape, int m,
                             AlternatingType type);

// Inserts empty positive rows into a tableau whose zeta-image lies in the
// paired derangement class, producing a tableau whose image is alternating
// of the given type with the maximal number of fixed points.
// PreconditionError on inputs outside the domain; InternalError if the
// result fails its own post-conditions.
PermutationTableau theta(const PermutationTableau& tableau,
                         AlternatingType type);

// Deletes every empty positive row. Defined on tableaux whose image is
// alternating of the given type with max_fixed_points fixed points, at the
// parity where theta lands.
PermutationTableau psi(const PermutationTableau& tableau, AlternatingType type);

}  // namespace tableauxb

#endif  // TABLEAUXB_BIJECTIONS_H_
