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

#include <algorithm>
#include <sstream>
#include <string>

#include "tableauxb/tableau.h"

namespace tableauxb {
namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void rtrim(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

}  // namespace

std::string render_ascii(const PermutationTableau& t) {
  const ShiftedDiagram& d = t.diagram();
  std::size_t label_width = 1;
  for (int label : d.row_labels()) {
    label_width = std::max(label_width, std::to_string(label).size());
  }

  std::ostringstream out;
  if (d.column_count() > 0) {
    std::string header(label_width + 1, ' ');
    for (int j : d.column_labels()) header += pad_left(std::to_string(j), 2) + ' ';
    rtrim(header);
    out << header << '\n';
  }
  for (int r = 0; r < d.row_count(); ++r) {
    const int label = d.row_label(r);
    std::string line = pad_left(std::to_string(label), label_width) + ' ';
    for (int k = 0; k < d.row_length(r); ++k) {
      const char bit = t.cell(r, k) ? '1' : '0';
      const bool diagonal = label < 0 && k == r;
      line += diagonal ? std::string{'[', bit, ']'} : std::string{' ', bit, ' '};
    }
    rtrim(line);
    out << line << '\n';
  }
  for (const Violation& v : validate(t)) out << "* " << to_string(v) << '\n';
  return out.str();
}

}  // namespace tableauxb
