// Copyright 2026 The batchgreedy Authors
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

#ifndef BATCHGREEDY_BATCHGREEDY_H_
#define BATCHGREEDY_BATCHGREEDY_H_

#include "batchgreedy/error.h"
#include "batchgreedy/greedy.h"
#include "batchgreedy/index_set.h"
#include "batchgreedy/linalg.h"
#include "batchgreedy/mm.h"
#include "batchgreedy/oed.h"
#include "batchgreedy/problems.h"
#include "batchgreedy/random.h"
#include "batchgreedy/set_function.h"

#endif  // BATCHGREEDY_BATCHGREEDY_H_
