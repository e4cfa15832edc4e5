// Copyright 2026 The projtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace projtri {

enum class ErrorKind {
  invalid_argument,
  degenerate_join,
  degenerate_meet,
  degenerate_triangle,
  all_at_infinity,
  not_interior,
  not_on_edge,
  not_flippable_non_simple,
  not_flippable_geometry,
  not_pseudo,
  not_in_region,
  walk_stuck,
  no_seed,
  degenerate_quad,
  invalid_canonical_set,
  collinear_obstruction,
  singular_frame,
  budget_exceeded,
  parse_error,
  io_error,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace projtri
