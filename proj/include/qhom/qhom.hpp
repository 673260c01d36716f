// Copyright 2026 The qhom Authors
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

#include "qhom/density_matrix.hpp"
#include "qhom/errors.hpp"
#include "qhom/export.hpp"
#include "qhom/homogeniser.hpp"
#include "qhom/linalg.hpp"
#include "qhom/machine.hpp"
#include "qhom/partial_swap.hpp"
#include "qhom/random_states.hpp"
#include "qhom/scenarios.hpp"
#include "qhom/svg_plot.hpp"
#include "qhom/sweep_config.hpp"
#include "qhom/task.hpp"
#include "qhom/version.hpp"
