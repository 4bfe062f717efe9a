// Copyright 2026 The gptlab Authors
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

#pragma once

#include "gptlab/capacity/blahut_arimoto.hpp"
#include "gptlab/capacity/bounds.hpp"
#include "gptlab/core/algebra.hpp"
#include "gptlab/core/information.hpp"
#include "gptlab/core/parallel.hpp"
#include "gptlab/core/random.hpp"
#include "gptlab/core/tolerances.hpp"
#include "gptlab/core/types.hpp"
#include "gptlab/core/validation.hpp"
#include "gptlab/hadamard/hadamard.hpp"
#include "gptlab/hst/hst.hpp"
#include "gptlab/protocols/baseline.hpp"
#include "gptlab/protocols/dense_coding.hpp"
#include "gptlab/protocols/teleport.hpp"
#include "gptlab/theory.hpp"
#include "gptlab/variants/embedded.hpp"
#include "gptlab/variants/lambda_tau.hpp"
#include "gptlab/variants/lemmas.hpp"
#include "gptlab/variants/weak.hpp"
