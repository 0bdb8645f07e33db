/*
 * Copyright 2026 The SDW Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */
#ifndef SDW_ORACLES_HPP
#define SDW_ORACLES_HPP

// Reference implementations; they include nothing from the solver headers.

#include "oracle_curves.hpp"
#include "oracle_graph.hpp"
#include "oracle_polygon.hpp"
#include "oracle_tree.hpp"

#endif
