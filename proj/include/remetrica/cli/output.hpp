/*
 * Copyright 2026 The Remetrica Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "remetrica/hutchinson.hpp"
#include "remetrica/space.hpp"

namespace remetrica::cli {

// One point per row, coordinates comma separated, %.17g, no header.
void write_points_csv(std::ostream& out, const FinitePointSet& points);
std::vector<Point> read_points_csv(std::istream& in, const std::string& where);

// 1000x1000 scatter with the domain box scaled to the viewport. 1-D sets are
// drawn along the horizontal midline; higher dimensions use the first two axes.
void write_points_svg(std::ostream& out, const FinitePointSet& points, const BoxDomain& domain);

// step,size,hausdorff_base[,<extra metric>...]
void write_log_csv(std::ostream& out, const IterationLog& log);

std::string format_double(double v);

}  // namespace remetrica::cli
