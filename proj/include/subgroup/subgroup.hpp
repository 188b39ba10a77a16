/*
 * Copyright 2026 The sgmine Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Umbrella header.

#ifndef SUBGROUP_SUBGROUP_HPP_
#define SUBGROUP_SUBGROUP_HPP_

#include "subgroup/bounds.hpp"
#include "subgroup/csv.hpp"
#include "subgroup/dataset.hpp"
#include "subgroup/error.hpp"
#include "subgroup/experiments.hpp"
#include "subgroup/metrics.hpp"
#include "subgroup/report.hpp"
#include "subgroup/scoring.hpp"
#include "subgroup/search.hpp"
#include "subgroup/stats.hpp"

#endif  // SUBGROUP_SUBGROUP_HPP_
