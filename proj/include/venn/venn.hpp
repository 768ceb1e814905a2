// Copyright 2026 The vennreduce Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "venn/analysis.hpp"
#include "venn/common.hpp"
#include "venn/complex.hpp"
#include "venn/corpus.hpp"
#include "venn/edwards.hpp"
#include "venn/grid.hpp"
#include "venn/grid_faces.hpp"
#include "venn/io.hpp"
#include "venn/lift.hpp"
#include "venn/map.hpp"
#include "venn/map_builders.hpp"
#include "venn/numerics.hpp"
#include "venn/report.hpp"
#include "venn/svg.hpp"
#include "venn/trace.hpp"
