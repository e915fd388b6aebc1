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

#include "remetrica/maps.hpp"

#include <cmath>
#include <sstream>

#include "remetrica/error.hpp"

namespace remetrica {

MapSpec MapSpec::affine(const std::vector<std::vector<double>>& rows, std::vector<double> offset) {
  const std::size_t dim = rows.size();
  if (dim == 0) throw Error(ErrorKind::dimension, "affine map needs at least one row");
  if (offset.size() != dim) throw Error(ErrorKind::dimension, "affine offset length differs from matrix size");
  Affine a{dim, {}, std::move(offset)};
  a.matrix.reserve(dim * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) throw Error(ErrorKind::dimension, "affine matrix must be square");
    a.matrix.insert(a.matrix.end(), row.begin(), row.end());
  }
  for (double v : a.matrix)
    if (!std::isfinite(v)) throw Error(ErrorKind::numeric, "affine matrix entry is not finite");
  for (double v : a.offset)
    if (!std::isfinite(v)) throw Error(ErrorKind::numeric, "affine offset entry is not finite");
  return MapSpec(std::move(a));
}

MapSpec MapSpec::scale(double factor, double offset) { return affine({{factor}}, {offset}); }

MapSpec MapSpec::identity(std::size_t dim) {
  std::vector<std::vector<double>> rows(dim, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) rows[i][i] = 1.0;
  return affine(rows, std::vector<double>(dim, 0.0));
}

MapSpec MapSpec::constant(std::vector<double> value) {
  const std::size_t dim = value.size();
  return affine(std::vector<std::vector<double>>(dim, std::vector<double>(dim, 0.0)), std::move(value));
}

MapSpec MapSpec::power(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent))
    throw Error(ErrorKind::params, "power exponent must be finite and positive");
  return MapSpec(Power{exponent});
}

MapSpec MapSpec::clamp() { return MapSpec(Clamp{}); }

MapSpec MapSpec::compose(MapSpec outer, MapSpec inner) {
  const auto od = outer.fixed_dim();
  const auto id = inner.fixed_dim();
  if (od && id && *od != *id) throw Error(ErrorKind::dimension, "composed maps differ in dimension");
  return MapSpec(Compose{std::make_shared<const MapSpec>(std::move(outer)),
                         std::make_shared<const MapSpec>(std::move(inner))});
}

std::optional<std::size_t> MapSpec::fixed_dim() const {
  if (const auto* a = std::get_if<Affine>(&node_)) return a->dim;
  if (const auto* c = std::get_if<Compose>(&node_)) {
    if (auto d = c->outer->fixed_dim()) return d;
    return c->inner->fixed_dim();
  }
  return std::nullopt;
}

bool MapSpec::uses_power() const {
  if (std::holds_alternative<Power>(node_)) return true;
  if (const auto* c = std::get_if<Compose>(&node_)) return c->outer->uses_power() || c->inner->uses_power();
  return false;
}

void MapSpec::eval_node(PointBatch& data, PointBatch& scratch, const BoxDomain& domain,
                        const simd::KernelTable& kernels) const {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Affine>) {
          if (n.dim != data.dim()) throw Error(ErrorKind::dimension, "affine map dimension differs from point");
          scratch.resize(data.size());
          kernels.affine(n.matrix.data(), n.offset.data(), data.view(), scratch.mutable_view());
          std::swap(data, scratch);
        } else if constexpr (std::is_same_v<T, Power>) {
          for (std::size_t c = 0; c < data.dim(); ++c) {
            auto col = data.column(c);
            for (double v : col)
              if (v < 0.0) throw Error(ErrorKind::negative_base, "power node applied to a negative coordinate");
            if (n.exponent == 0.5) {
              kernels.sqrt(col.data(), col.data(), col.size());
            } else if (n.exponent != 1.0) {
              for (double& v : col) v = std::pow(v, n.exponent);
            }
          }
        } else if constexpr (std::is_same_v<T, Clamp>) {
          if (domain.dim() != data.dim()) throw Error(ErrorKind::dimension, "clamp domain differs from point");
          for (std::size_t c = 0; c < data.dim(); ++c) {
            auto col = data.column(c);
            kernels.clamp(domain.lower()[c], domain.upper()[c], col.data(), col.data(), col.size());
          }
        } else {
          n.inner->eval_node(data, scratch, domain, kernels);
          n.outer->eval_node(data, scratch, domain, kernels);
        }
      },
      node_);
}

void MapSpec::eval_batch(const PointBatch& in, PointBatch& out, const BoxDomain& domain,
                         const simd::KernelTable& kernels) const {
  if (in.dim() != domain.dim()) throw Error(ErrorKind::dimension, "point dimension differs from domain");
  out = in;
  PointBatch scratch(in.dim());
  eval_node(out, scratch, domain, kernels);
  if (!out.all_finite()) throw Error(ErrorKind::numeric, "map produced a non-finite coordinate");
}

Point MapSpec::eval(const Point& x, const BoxDomain& domain) const {
  if (x.dim() != domain.dim()) throw Error(ErrorKind::dimension, "point dimension differs from domain");
  PointBatch in(x.dim());
  in.push_back(x);
  PointBatch out(x.dim());
  eval_batch(in, out, domain, simd::scalar_kernels());
  return out.point(0);
}

std::string MapSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Affine>) {
          os << "affine(A=[";
          for (std::size_t i = 0; i < n.matrix.size(); ++i) os << (i ? "," : "") << n.matrix[i];
          os << "],b=[";
          for (std::size_t i = 0; i < n.offset.size(); ++i) os << (i ? "," : "") << n.offset[i];
          os << "])";
        } else if constexpr (std::is_same_v<T, Power>) {
          os << "power(" << n.exponent << ")";
        } else if constexpr (std::is_same_v<T, Clamp>) {
          os << "clamp";
        } else {
          os << "compose(" << n.outer->describe() << "," << n.inner->describe() << ")";
        }
      },
      node_);
  return os.str();
}

std::vector<Point> validation_points(const BoxDomain& domain, std::size_t grid_points_per_axis) {
  if (grid_points_per_axis < 2) throw Error(ErrorKind::params, "validation grid needs at least 2 points per axis");
  const std::size_t dim = domain.dim();
  std::vector<Point> out;
  std::vector<std::size_t> idx(dim, 0);
  while (true) {
    std::vector<double> c(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const double lo = domain.lower()[i];
      const double hi = domain.upper()[i];
      c[i] = idx[i] + 1 == grid_points_per_axis
                 ? hi
                 : lo + (hi - lo) * static_cast<double>(idx[i]) / static_cast<double>(grid_points_per_axis - 1);
    }
    out.emplace_back(std::move(c));
    std::size_t axis = 0;
    while (axis < dim && ++idx[axis] == grid_points_per_axis) idx[axis++] = 0;
    if (axis == dim) break;
  }
  for (Point& corner : domain.corners()) out.push_back(std::move(corner));
  return out;
}

std::optional<SelfMapViolation> validate_ifs(const MetricSpace& space, const std::vector<MapSpec>& maps,
                                             std::size_t grid_points_per_axis) {
  const auto samples = validation_points(space.domain(), grid_points_per_axis);
  PointBatch in(space.dim());
  in.reserve(samples.size());
  for (const Point& p : samples) in.push_back(p);
  PointBatch out(space.dim());
  std::vector<double> buf(space.dim());
  for (std::size_t m = 0; m < maps.size(); ++m) {
    maps[m].eval_batch(in, out, space.domain(), simd::active_kernels());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out.copy_point(i, buf.data());
      if (!space.domain().contains(buf)) return SelfMapViolation{m, samples[i], out.point(i)};
    }
  }
  return std::nullopt;
}

Ifs::Ifs(MetricSpace space, std::vector<MapSpec> maps, std::size_t grid_points_per_axis)
    : space_(std::move(space)), maps_(std::move(maps)), validation_grid_(grid_points_per_axis) {
  if (maps_.empty()) throw Error(ErrorKind::params, "an IFS needs at least one map");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (auto d = maps_[i].fixed_dim(); d && *d != space_.dim())
      throw Error(ErrorKind::dimension, "map " + std::to_string(i) + " has dimension " + std::to_string(*d) +
                                            ", domain has " + std::to_string(space_.dim()));
  }
  if (auto v = validate_ifs(space_, maps_, validation_grid_)) {
    std::ostringstream os;
    os.precision(17);
    os << "map " << v->map_index << " sends (";
    for (std::size_t c = 0; c < v->input.dim(); ++c) os << (c ? ", " : "") << v->input[c];
    os << ") to (";
    for (std::size_t c = 0; c < v->image.dim(); ++c) os << (c ? ", " : "") << v->image[c];
    os << "), outside the domain";
    throw Error(ErrorKind::self_map, os.str());
  }
}

Point Ifs::eval_map(std::size_t i, const Point& x) const { return maps_.at(i).eval(x, domain()); }

Point Ifs::eval_word(const Word& w, const Point& x) const {
  Point p = x;
  for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) {
    if (*it >= maps_.size()) throw Error(ErrorKind::params, "word index out of range");
    p = eval_map(*it, p);
  }
  return p;
}

std::vector<Word> Ifs::words(std::size_t length) const {
  std::vector<Word> out;
  std::vector<std::size_t> idx(length, 0);
  while (true) {
    out.push_back(Word{idx});
    std::size_t pos = length;
    while (pos > 0 && ++idx[pos - 1] == maps_.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

Ifs Ifs::with_space(MetricSpace space) const {
  if (!(space.domain() == domain())) throw Error(ErrorKind::domain, "with_space requires the same domain");
  Ifs copy = *this;
  copy.space_ = std::move(space);
  return copy;
}

}  // namespace remetrica
