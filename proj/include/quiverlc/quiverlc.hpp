// Copyright 2026 The quiverlc Authors
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

// Umbrella header.

#ifndef QUIVERLC_QUIVERLC_HPP
#define QUIVERLC_QUIVERLC_HPP

#include "quiverlc/distances.hpp"
#include "quiverlc/dot.hpp"
#include "quiverlc/ext_distance.hpp"
#include "quiverlc/families.hpp"
#include "quiverlc/lazy_quiver.hpp"
#include "quiverlc/paths.hpp"
#include "quiverlc/quiver.hpp"
#include "quiverlc/quiver_io.hpp"
#include "quiverlc/sections.hpp"
#include "quiverlc/structure.hpp"
#include "quiverlc/vertex.hpp"
#include "quiverlc/window_graph.hpp"
#include "quiverlc/zq.hpp"

#endif  // QUIVERLC_QUIVERLC_HPP
