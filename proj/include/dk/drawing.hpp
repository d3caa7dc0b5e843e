// Copyright 2026 The diagram-kernel Authors
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

#include <optional>
#include <string>
#include <vector>

#include "dk/monoidal.hpp"

namespace dk::drawing {

enum class NodeKind { outer_dom, outer_cod, inner };

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Node {
  int id = 0;
  double x = 0;
  double y = 0;
  NodeKind kind = NodeKind::inner;
  std::string label;
  std::optional<Box> box;  // inner nodes carry their box for reconstruction

  friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
  int src = 0;
  int tgt = 0;
  std::string label;           // atom token
  std::vector<Point> hints;    // interior path points, y increasing

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Geometric counterpart of a diagram: y grows downward, the domain row at
/// the top, one inner node per box at height k + 1/2.
struct PlanarLayout {
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  const Node& node(int id) const;
  friend bool operator==(const PlanarLayout&, const PlanarLayout&) = default;
};

struct LayoutConfig {
  double wire_spacing = 1.0;
  double layer_spacing = 1.0;
  double box_height = 0.5;
  bool triangle_states = false;  // domain-empty plain boxes drawn as triangles
};

/// Throws LayoutError naming the violated invariant: a non-progressive edge,
/// an inner-node height tie, or an outer node without exactly one edge.
void check(const PlanarLayout& layout);

/// Unit-grid planar embedding: domain wires one apart at the top, box k at
/// height k + 1/2 with horizontal space widened on demand, codomain closed
/// at the bottom.
PlanarLayout draw(const Diagram& d);

/// Reconstructs the diagram: nodes ordered by height, a box per inner node,
/// offsets counted as wires crossing strictly left of each box.
Diagram read(const PlanarLayout& layout);

/// Wire x-coordinate at height y along an edge's piecewise-linear path.
double x_at(const PlanarLayout& layout, const Edge& edge, double y);

std::string to_tikz(const PlanarLayout& layout, const LayoutConfig& config = {});
std::string to_svg(const PlanarLayout& layout, const LayoutConfig& config = {});

}  // namespace dk::drawing
