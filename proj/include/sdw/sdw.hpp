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
#ifndef SDW_SDW_HPP
#define SDW_SDW_HPP

#include "dff.hpp"
#include "ff.hpp"
#include "ff1d.hpp"
#include "freespace.hpp"
#include "generators.hpp"
#include "geom.hpp"
#include "graph.hpp"
#include "numeric.hpp"
#include "one_sided.hpp"
#include "polygon.hpp"
#include "schedule.hpp"
#include "tree.hpp"

#endif
