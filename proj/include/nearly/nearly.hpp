// Copyright 2026 The nearly Authors
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

#ifndef NEARLY_NEARLY_HPP
#define NEARLY_NEARLY_HPP

#include "nearly/canonical.hpp"
#include "nearly/census.hpp"
#include "nearly/enumerate.hpp"
#include "nearly/errors.hpp"
#include "nearly/graph.hpp"
#include "nearly/io.hpp"
#include "nearly/line_graph.hpp"
#include "nearly/matching.hpp"
#include "nearly/recognizers.hpp"
#include "nearly/solver.hpp"

#endif  // NEARLY_NEARLY_HPP
