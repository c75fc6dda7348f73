// Copyright 2026 The qwit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the simulation and learning library (no I/O).
#pragma once

#include "dataset.hpp"
#include "entanglement.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "metrics.hpp"
#include "optimize.hpp"
#include "qstate.hpp"
#include "rewstates.hpp"
#include "rng.hpp"
#include "train.hpp"
#include "vqc.hpp"
#include "witness.hpp"
