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

#include "remetrica/cli/output.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "remetrica/error.hpp"

namespace remetrica::cli {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_points_csv(std::ostream& out, const FinitePointSet& points) {
  const PointBatch& batch = points.batch();
  for (std::size_t i = 0; i < batch.size(); ++i) {
    for (std::size_t c = 0; c < batch.dim(); ++c) out << (c ? "," : "") << format_double(batch.at(c, i));
    out << '\n';
  }
}

std::vector<Point> read_points_csv(std::istream& in, const std::string& where) {
  std::vector<Point> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> coords;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t used = 0;
        coords.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw Error(ErrorKind::parse, where + ":" + std::to_string(line_no) + ": not a number: \"" + cell + "\"");
      }
    }
    try {
      out.emplace_back(std::move(coords));
    } catch (const Error& e) {
      throw Error(ErrorKind::parse, where + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void write_points_svg(std::ostream& out, const FinitePointSet& points, const BoxDomain& domain) {
  constexpr double kSize = 1000.0;
  const PointBatch& batch = points.batch();
  auto scale = [&](std::size_t axis, double v) {
    return (v - domain.lower()[axis]) / (domain.upper()[axis] - domain.lower()[axis]) * kSize;
  };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const double cx = scale(0, batch.at(0, i));
    // SVG y grows downwards.
    const double cy = batch.dim() >= 2 ? kSize - scale(1, batch.at(1, i)) : kSize / 2;
    out << "<circle cx=\"" << format_double(cx) << "\" cy=\"" << format_double(cy) << "\" r=\"1.5\"/>\n";
  }
  out << "</svg>\n";
}

void write_log_csv(std::ostream& out, const IterationLog& log) {
  out << "step,size,hausdorff_base";
  for (const auto& name : log.extra_metrics) out << ",hausdorff_" << name;
  out << '\n';
  for (const auto& s : log.steps) {
    out << s.step << ',' << s.size << ',' << format_double(s.hausdorff_base);
    for (double v : s.hausdorff_extra) out << ',' << format_double(v);
    out << '\n';
  }
}

}  // namespace remetrica::cli
