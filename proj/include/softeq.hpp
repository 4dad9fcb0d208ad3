// Copyright 2026 The softeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOFTEQ_SOFTEQ_HPP
#define SOFTEQ_SOFTEQ_HPP

#include "softeq/cost.hpp"
#include "softeq/diversity.hpp"
#include "softeq/domain.hpp"
#include "softeq/error.hpp"
#include "softeq/exact_solvers.hpp"
#include "softeq/generate.hpp"
#include "softeq/graph_min_dp.hpp"
#include "softeq/greedy.hpp"
#include "softeq/instance.hpp"
#include "softeq/matching.hpp"
#include "softeq/occurrence.hpp"
#include "softeq/oracle.hpp"
#include "softeq/propagation.hpp"
#include "softeq/rng.hpp"
#include "softeq/var_min_prop.hpp"

#endif  // SOFTEQ_SOFTEQ_HPP
