// Copyright 2026 The forcelab Authors
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
#ifndef FORCELAB_FIXTURES_HPP_
#define FORCELAB_FIXTURES_HPP_

#include <string>
#include <vector>

#include "forcelab/json_io.hpp"

namespace forcelab {

struct FixtureGraphs {
  static Graph example14();  // 2 x 4 ladder
  static Graph example18();
  static Graph example19();
};

// Fractional perfect matchings and forcing functions drawn in the figures.
EdgeAssignment example14_gamma();
std::vector<WeightedPart> example14_parts();
EdgeAssignment example14_alpha();
EdgeAssignment example18_gamma();
EdgeAssignment example19_triangles();
EdgeAssignment example19_alpha();

std::vector<std::string> fixture_names();

// Runs one fixture; the result carries "pass" and a "checks" array of
// {name, expected, actual, pass}.
Json run_fixture(const std::string& name, const Limits& limits = {});

}  // namespace forcelab

#endif  // FORCELAB_FIXTURES_HPP_
