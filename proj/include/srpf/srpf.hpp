// Copyright 2026 The srpf Authors
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

#ifndef SRPF_SRPF_HPP_
#define SRPF_SRPF_HPP_

#include "srpf/baseline.hpp"
#include "srpf/encoder.hpp"
#include "srpf/oracle.hpp"
#include "srpf/pareto.hpp"
#include "srpf/pathfinder.hpp"
#include "srpf/segment.hpp"
#include "srpf/segment_db.hpp"
#include "srpf/solution.hpp"
#include "srpf/topology.hpp"

#endif  // SRPF_SRPF_HPP_
