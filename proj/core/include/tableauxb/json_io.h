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

#ifndef TABLEAUXB_JSON_IO_H_
#define TABLEAUXB_JSON_IO_H_

#include <string>
#include <string_view>

#include "tableauxb/signed_permutation.h"
#include "tableauxb/tableau.h"

namespace tableauxb {

// {"n": 8, "columns": [3,5,6,8],
//  "rows": [{"label": -8, "cells": [1]}, ..., {"label": 7, "cells": [1]}]}
// Rows top to bottom, cells left to right, columns ascending. The loader
// rejects anything that disagrees with the geometry derived from n and
// columns. Compact single-line output.
std::string tableau_to_json(const PermutationTableau& tableau);
PermutationTableau tableau_from_json(std::string_view text);

// {"n": 4, "window": [-4,-5,3,2]}
std::string permutation_to_json(const SignedPermutation& sigma);
SignedPermutation permutation_from_json(std::string_view text);

// Either the JSON object form or the plain comma-separated window.
SignedPermutation parse_permutation(std::string_view text);

}  // namespace tableauxb

#endif  // TABLEAUXB_JSON_IO_H_
