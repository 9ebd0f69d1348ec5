// Copyright 2026 The wsbmf Authors.
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

#ifndef WSBMF_WSBMF_HPP
#define WSBMF_WSBMF_HPP

#include "wsbmf/core.hpp"
#include "wsbmf/cover.hpp"
#include "wsbmf/density.hpp"
#include "wsbmf/experiment.hpp"
#include "wsbmf/factorize.hpp"
#include "wsbmf/graph.hpp"
#include "wsbmf/io.hpp"
#include "wsbmf/metrics.hpp"
#include "wsbmf/model_selection.hpp"
#include "wsbmf/synth.hpp"

#endif  // WSBMF_WSBMF_HPP
