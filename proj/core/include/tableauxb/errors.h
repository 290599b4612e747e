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

#ifndef TABLEAUXB_ERRORS_H_
#define TABLEAUXB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tableauxb {

// Malformed input: bad windows, labels out of range, schema mismatches.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed value that lies outside the domain of an operation, e.g. a
// tableau handed to theta whose image is not in the required derangement
// class, or an enumeration request beyond the configured bound.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An invariant the library guarantees was observed to fail. Never caused by
// user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tableauxb

#endif  // TABLEAUXB_ERRORS_H_
