// Copyright 2026 The ctpower Authors
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

#include "ctpower/analysis/mismatch.hpp"
#include "ctpower/analysis/power.hpp"
#include "ctpower/analysis/quadrature.hpp"
#include "ctpower/analysis/rng.hpp"
#include "ctpower/analysis/sweep.hpp"
#include "ctpower/channel_config.hpp"
#include "ctpower/channels.hpp"
#include "ctpower/errors.hpp"
#include "ctpower/protocol.hpp"
#include "ctpower/qcore.hpp"
