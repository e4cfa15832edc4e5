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

#include "projtri/errors.hpp"

namespace projtri {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::degenerate_join: return "DegenerateJoin";
    case ErrorKind::degenerate_meet: return "DegenerateMeet";
    case ErrorKind::degenerate_triangle: return "DegenerateTriangle";
    case ErrorKind::all_at_infinity: return "AllAtInfinity";
    case ErrorKind::not_interior: return "NotInterior";
    case ErrorKind::not_on_edge: return "NotOnEdge";
    case ErrorKind::not_flippable_non_simple: return "NotFlippable(NonSimple)";
    case ErrorKind::not_flippable_geometry: return "NotFlippable(Geometry)";
    case ErrorKind::not_pseudo: return "NotPseudo";
    case ErrorKind::not_in_region: return "NotInRegion";
    case ErrorKind::walk_stuck: return "WalkStuck";
    case ErrorKind::no_seed: return "NoSeed";
    case ErrorKind::degenerate_quad: return "DegenerateQuad";
    case ErrorKind::invalid_canonical_set: return "InvalidCanonicalSet";
    case ErrorKind::collinear_obstruction: return "CollinearObstruction";
    case ErrorKind::singular_frame: return "SingularFrame";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::io_error: return "IOError";
  }
  return "Unknown";
}

}  // namespace projtri
