// Copyright 2026 The cvqt Authors
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

#include "cvqt/cf_oracle.hpp"
#include "cvqt/errors.hpp"
#include "cvqt/gaussian_core.hpp"
#include "cvqt/io.hpp"
#include "cvqt/resource_states.hpp"
#include "cvqt/sampling.hpp"
#include "cvqt/sweep.hpp"
#include "cvqt/teleport_criteria.hpp"
