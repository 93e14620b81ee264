// Copyright 2026 The rpq Authors
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

#include "rpq/csr.hpp"
#include "rpq/generators.hpp"
#include "rpq/graph.hpp"
#include "rpq/ndjson.hpp"
#include "rpq/nfa.hpp"
#include "rpq/oracle.hpp"
#include "rpq/path.hpp"
#include "rpq/pipeline.hpp"
#include "rpq/product.hpp"
#include "rpq/regex.hpp"
#include "rpq/restricted_engine.hpp"
#include "rpq/types.hpp"
#include "rpq/walk_engine.hpp"
