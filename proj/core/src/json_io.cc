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

#include "tableauxb/json_io.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tableauxb/errors.h"

namespace tableauxb {
namespace {

using json = nlohmann::ordered_json;

json parse_object(std::string_view text, std::string_view what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string(what) + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw InvalidArgument(std::string(what) + ": expected a JSON object");
  }
  return doc;
}

int int_field(const json& obj, const char* key, std::string_view what) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    throw InvalidArgument(std::string(what) + ": missing integer field \"" +
                          key + "\"");
  }
  return it->get<int>();
}

std::vector<int> int_array(const json& obj, const char* key,
                           std::string_view what) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) {
    throw InvalidArgument(std::string(what) + ": missing array field \"" +
                          key + "\"");
  }
  std::vector<int> out;
  for (const json& v : *it) {
    if (!v.is_number_integer()) {
      throw InvalidArgument(std::string(what) + ": \"" + key +
                            "\" must hold integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::string tableau_to_json(const PermutationTableau& tableau) {
  const ShiftedDiagram& d = tableau.diagram();
  json rows = json::array();
  for (int r = 0; r < d.row_count(); ++r) {
    json cells = json::array();
    for (int k = 0; k < d.row_length(r); ++k) cells.push_back(tableau.cell(r, k) ? 1 : 0);
    rows.push_back({{"label", d.row_label(r)}, {"cells", std::move(cells)}});
  }
  json doc = {{"n", d.n()}, {"columns", d.columns()}, {"rows", std::move(rows)}};
  return doc.dump();
}

PermutationTableau tableau_from_json(std::string_view text) {
  constexpr std::string_view kWhat = "tableau";
  const json doc = parse_object(text, kWhat);
  const int n = int_field(doc, "n", kWhat);
  const std::vector<int> columns = int_array(doc, "columns", kWhat);
  if (!std::is_sorted(columns.begin(), columns.end()) ||
      std::adjacent_find(columns.begin(), columns.end()) != columns.end()) {
    throw InvalidArgument("tableau: columns must be strictly increasing");
  }
  const ShiftedDiagram d(n, columns);
  const auto rows_it = doc.find("rows");
  if (rows_it == doc.end() || !rows_it->is_array()) {
    throw InvalidArgument("tableau: missing array field \"rows\"");
  }
  if (static_cast<int>(rows_it->size()) != d.row_count()) {
    throw InvalidArgument("tableau: expected " + std::to_string(d.row_count()) +
                          " rows, got " + std::to_string(rows_it->size()));
  }
  std::vector<std::uint64_t> bits(d.row_count(), 0);
  for (int r = 0; r < d.row_count(); ++r) {
    const json& row = (*rows_it)[r];
    if (!row.is_object()) throw InvalidArgument("tableau: rows must be objects");
    const int label = int_field(row, "label", kWhat);
    if (label != d.row_label(r)) {
      throw InvalidArgument("tableau: row " + std::to_string(r) +
                            " should have label " +
                            std::to_string(d.row_label(r)) + ", got " +
                            std::to_string(label));
    }
    const std::vector<int> cells = int_array(row, "cells", kWhat);
    if (static_cast<int>(cells.size()) != d.row_length(r)) {
      throw InvalidArgument("tableau: row " + std::to_string(label) +
                            " should have " + std::to_string(d.row_length(r)) +
                            " cells, got " + std::to_string(cells.size()));
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (cells[k] != 0 && cells[k] != 1) {
        throw InvalidArgument("tableau: cells must be 0 or 1");
      }
      if (cells[k] == 1) bits[r] |= std::uint64_t{1} << k;
    }
  }
  return PermutationTableau(d, std::move(bits));
}

std::string permutation_to_json(const SignedPermutation& sigma) {
  const auto w = sigma.window();
  json doc = {{"n", sigma.n()}, {"window", std::vector<int>(w.begin(), w.end())}};
  return doc.dump();
}

SignedPermutation permutation_from_json(std::string_view text) {
  constexpr std::string_view kWhat = "permutation";
  const json doc = parse_object(text, kWhat);
  std::vector<int> window = int_array(doc, "window", kWhat);
  if (doc.contains("n") &&
      int_field(doc, "n", kWhat) != static_cast<int>(window.size())) {
    throw InvalidArgument("permutation: n does not match the window length");
  }
  return SignedPermutation(std::move(window));
}

SignedPermutation parse_permutation(std::string_view text) {
  const auto first = std::find_if_not(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  if (first != text.end() && *first == '{') return permutation_from_json(text);
  return parse_window(text);
}

}  // namespace tableauxb
