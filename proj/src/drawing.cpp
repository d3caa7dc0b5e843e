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

#include "dk/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace dk::drawing {

const Node& PlanarLayout::node(int id) const {
  for (const Node& n : nodes) {
    if (n.id == id) return n;
  }
  throw LayoutError("unknown node id " + std::to_string(id));
}

// ---------------------------------------------------------------------------
// draw

namespace {

struct OpenWire {
  std::size_t edge = 0;  // index into the edges under construction
  double x = 0;          // current lane
  Ob atom;
};

struct Builder {
  PlanarLayout layout;
  int next_id = 0;

  int add_node(double x, double y, NodeKind kind, std::string label,
               std::optional<Box> box = std::nullopt) {
    layout.nodes.push_back(
        Node{next_id, x, y, kind, std::move(label), std::move(box)});
    return next_id++;
  }
};

}  // namespace

PlanarLayout draw(const Diagram& d) {
  Builder b;
  std::vector<OpenWire> frontier;
  const double y_end =
      static_cast<double>(std::max<std::size_t>(d.size(), 1));

  for (std::size_t i = 0; i < d.dom().size(); ++i) {
    const Ob& atom = d.dom()[i];
    double x = static_cast<double>(i);
    int node = b.add_node(x, 0.0, NodeKind::outer_dom, atom.token());
    b.layout.edges.push_back(Edge{node, -1, atom.token(), {}});
    frontier.push_back(OpenWire{b.layout.edges.size() - 1, x, atom});
  }

  for (std::size_t h = 0; h < d.size(); ++h) {
    const Box& box = d.boxes()[h];
    const std::size_t off = d.offsets()[h];
    const std::size_t k = box.dom().size();
    const std::size_t m = box.cod().size();
    const double y_box = static_cast<double>(h) + 0.5;

    // anchor: leftmost lane of the new codomain wires
    double anchor;
    if (k > 0) {
      anchor = frontier[off].x;
    } else if (off > 0) {
      anchor = frontier[off - 1].x + 1.0;
    } else if (!frontier.empty()) {
      anchor = frontier[0].x - static_cast<double>(std::max<std::size_t>(m, 1));
    } else {
      anchor = 0.0;
    }

    // widen: everything from the right flank onward shifts right, bending
    // each open wire just above this box
    const double need =
        anchor + static_cast<double>(std::max<std::size_t>(m, 1));
    if (off + k < frontier.size()) {
      double flank = frontier[off + k].x;
      double shift = need - flank;
      if (shift > 0) {
        for (std::size_t w = off + k; w < frontier.size(); ++w) {
          Edge& edge = b.layout.edges[frontier[w].edge];
          edge.hints.push_back(Point{frontier[w].x, static_cast<double>(h)});
          frontier[w].x += shift;
          edge.hints.push_back(Point{frontier[w].x, y_box});
        }
      }
    }

    // box node: centered over the wires it touches
    double x_box;
    if (k > 0 && m > 0) {
      double lo = std::min(frontier[off].x, anchor);
      double hi = std::max(frontier[off + k - 1].x,
                           anchor + static_cast<double>(m - 1));
      x_box = (lo + hi) / 2.0;
    } else if (k > 0) {
      x_box = (frontier[off].x + frontier[off + k - 1].x) / 2.0;
    } else {
      x_box = anchor + static_cast<double>(std::max<std::size_t>(m, 1) - 1) / 2.0;
    }
    int node = b.add_node(x_box, y_box, NodeKind::inner, box.name(), box);

    // close the consumed wires into the box
    for (std::size_t w = 0; w < k; ++w) {
      OpenWire& wire = frontier[off + w];
      Edge& edge = b.layout.edges[wire.edge];
      if (wire.x != x_box && y_box - 0.5 > b.layout.node(edge.src).y) {
        edge.hints.push_back(Point{wire.x, y_box - 0.5});
      }
      edge.tgt = node;
    }
    frontier.erase(frontier.begin() + static_cast<long>(off),
                   frontier.begin() + static_cast<long>(off + k));

    // open the produced wires on their lanes
    for (std::size_t w = 0; w < m; ++w) {
      const Ob& atom = box.cod()[w];
      double lane = anchor + static_cast<double>(w);
      Edge edge{node, -1, atom.token(), {}};
      if (lane != x_box) edge.hints.push_back(Point{lane, y_box + 0.5});
      b.layout.edges.push_back(std::move(edge));
      frontier.insert(frontier.begin() + static_cast<long>(off + w),
                      OpenWire{b.layout.edges.size() - 1, lane, atom});
    }
  }

  // close the remaining wires at the bottom
  for (OpenWire& wire : frontier) {
    int node =
        b.add_node(wire.x, y_end, NodeKind::outer_cod, wire.atom.token());
    b.layout.edges[wire.edge].tgt = node;
  }
  return b.layout;
}

// ---------------------------------------------------------------------------
// check

void check(const PlanarLayout& layout) {
  std::map<int, std::size_t> degree;
  for (const Node& n : layout.nodes) degree[n.id] = 0;
  for (const Edge& e : layout.edges) {
    const Node& src = layout.node(e.src);
    const Node& tgt = layout.node(e.tgt);
    double prev = src.y;
    for (const Point& p : e.hints) {
      if (p.y < prev) {
        throw LayoutError("non-progressive edge: path point above its "
                          "predecessor on edge " +
                          std::to_string(e.src) + " -> " +
                          std::to_string(e.tgt));
      }
      prev = p.y;
    }
    if (!(src.y < tgt.y)) {
      throw LayoutError("non-progressive edge " + std::to_string(e.src) +
                        " -> " + std::to_string(e.tgt));
    }
    ++degree[e.src];
    ++degree[e.tgt];
  }
  std::vector<double> inner_heights;
  for (const Node& n : layout.nodes) {
    if (n.kind == NodeKind::inner) {
      inner_heights.push_back(n.y);
      if (!n.box) {
        throw LayoutError("inner node " + std::to_string(n.id) +
                          " carries no box");
      }
    } else {
      if (degree[n.id] != 1) {
        throw LayoutError("outer node " + std::to_string(n.id) + " borders " +
                          std::to_string(degree[n.id]) +
                          " edges, expected exactly one");
      }
    }
  }
  std::sort(inner_heights.begin(), inner_heights.end());
  if (std::adjacent_find(inner_heights.begin(), inner_heights.end()) !=
      inner_heights.end()) {
    throw LayoutError("two inner nodes at the same height");
  }
  for (const Node& n : layout.nodes) {
    for (const Node& m : layout.nodes) {
      if (n.kind == NodeKind::outer_dom && m.kind == NodeKind::inner &&
          n.y >= m.y) {
        throw LayoutError("domain node " + std::to_string(n.id) +
                          " is not above every inner node");
      }
      if (n.kind == NodeKind::outer_cod && m.kind == NodeKind::inner &&
          n.y <= m.y) {
        throw LayoutError("codomain node " + std::to_string(n.id) +
                          " is not below every inner node");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// read

double x_at(const PlanarLayout& layout, const Edge& edge, double y) {
  const Node& src = layout.node(edge.src);
  const Node& tgt = layout.node(edge.tgt);
  std::vector<Point> points;
  points.push_back(Point{src.x, src.y});
  points.insert(points.end(), edge.hints.begin(), edge.hints.end());
  points.push_back(Point{tgt.x, tgt.y});
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Point& a = points[i];
    const Point& b = points[i + 1];
    if (a.y <= y && y <= b.y) {
      if (b.y == a.y) return a.x;
      double t = (y - a.y) / (b.y - a.y);
      return a.x + t * (b.x - a.x);
    }
  }
  return tgt.x;
}

namespace {

// x of the last fixed path point strictly before the edge reaches `y`,
// resp. the first one after; used to order edges around a node.
double approach_x(const PlanarLayout& layout, const Edge& e, double y,
                  bool incoming) {
  const Node& src = layout.node(e.src);
  const Node& tgt = layout.node(e.tgt);
  double x = incoming ? src.x : tgt.x;
  if (incoming) {
    for (const Point& p : e.hints) {
      if (p.y < y) x = p.x;
    }
  } else {
    for (std::size_t i = e.hints.size(); i-- > 0;) {
      if (e.hints[i].y > y) x = e.hints[i].x;
    }
  }
  return x;
}

// The edges touching an inner node, read left to right, must spell out the
// box's boundary types.
void check_box_wiring(const PlanarLayout& layout, const Node& node,
                      const Box& box) {
  std::vector<std::pair<double, std::string>> in_labels, out_labels;
  for (const Edge& e : layout.edges) {
    if (e.tgt == node.id) {
      in_labels.emplace_back(approach_x(layout, e, node.y, true), e.label);
    }
    if (e.src == node.id) {
      out_labels.emplace_back(approach_x(layout, e, node.y, false), e.label);
    }
  }
  std::sort(in_labels.begin(), in_labels.end());
  std::sort(out_labels.begin(), out_labels.end());
  auto mismatch = [&](const char* side) {
    throw LayoutError("edges at node " + std::to_string(node.id) +
                      " do not spell the " + side + " of box \"" +
                      box.name() + "\"");
  };
  if (in_labels.size() != box.dom().size()) mismatch("domain");
  for (std::size_t i = 0; i < in_labels.size(); ++i) {
    if (in_labels[i].second != box.dom()[i].token()) mismatch("domain");
  }
  if (out_labels.size() != box.cod().size()) mismatch("codomain");
  for (std::size_t i = 0; i < out_labels.size(); ++i) {
    if (out_labels[i].second != box.cod()[i].token()) mismatch("codomain");
  }
}

}  // namespace

Diagram read(const PlanarLayout& layout) {
  check(layout);

  std::vector<const Node*> dom_nodes;
  std::vector<const Node*> cod_nodes;
  std::vector<const Node*> inner_nodes;
  for (const Node& n : layout.nodes) {
    switch (n.kind) {
      case NodeKind::outer_dom: dom_nodes.push_back(&n); break;
      case NodeKind::outer_cod: cod_nodes.push_back(&n); break;
      case NodeKind::inner: inner_nodes.push_back(&n); break;
    }
  }
  auto by_x = [](const Node* a, const Node* b) { return a->x < b->x; };
  auto by_y = [](const Node* a, const Node* b) { return a->y < b->y; };
  std::sort(dom_nodes.begin(), dom_nodes.end(), by_x);
  std::sort(cod_nodes.begin(), cod_nodes.end(), by_x);
  std::sort(inner_nodes.begin(), inner_nodes.end(), by_y);

  std::vector<Ob> dom_atoms;
  for (const Node* n : dom_nodes) dom_atoms.push_back(Ob::from_token(n->label));

  std::vector<Box> boxes;
  std::vector<std::size_t> offsets;
  for (const Node* n : inner_nodes) {
    check_box_wiring(layout, *n, *n->box);
    boxes.push_back(*n->box);
    std::size_t left = 0;
    for (const Edge& e : layout.edges) {
      const Node& src = layout.node(e.src);
      const Node& tgt = layout.node(e.tgt);
      if (src.y < n->y && n->y < tgt.y && x_at(layout, e, n->y) < n->x) {
        ++left;
      }
    }
    offsets.push_back(left);
  }

  Diagram out = [&] {
    try {
      return Diagram(Ty(std::move(dom_atoms)), std::move(boxes),
                     std::move(offsets));
    } catch (const CompositionError& e) {
      throw LayoutError(std::string("layout does not encode a diagram: ") +
                        e.what());
    }
  }();

  if (cod_nodes.size() != out.cod().size()) {
    throw LayoutError("codomain row has " + std::to_string(cod_nodes.size()) +
                      " nodes, computed codomain has width " +
                      std::to_string(out.cod().size()));
  }
  for (std::size_t i = 0; i < cod_nodes.size(); ++i) {
    if (Ob::from_token(cod_nodes[i]->label) != out.cod()[i]) {
      throw LayoutError("codomain node " + std::to_string(cod_nodes[i]->id) +
                        " is labelled " + cod_nodes[i]->label +
                        ", computed codomain has " + out.cod()[i].token());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string fmt(double v) {
  char buf[32];
  // half-unit grid; one decimal is exact
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  std::string out(buf);
  if (out == "-0.0") out = "0.0";
  return out;
}

std::vector<Point> edge_points(const PlanarLayout& layout, const Edge& e) {
  std::vector<Point> points;
  const Node& src = layout.node(e.src);
  const Node& tgt = layout.node(e.tgt);
  points.push_back(Point{src.x, src.y});
  points.insert(points.end(), e.hints.begin(), e.hints.end());
  points.push_back(Point{tgt.x, tgt.y});
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

// cups and caps render as a single bent wire through the node; collect the
// merged point lists and the indices of the edges they absorb
struct RenderPlan {
  std::vector<std::vector<Point>> paths;
  std::vector<const Node*> rects;      // plain boxes
  std::vector<const Node*> triangles;  // domain-empty boxes, when enabled
};

RenderPlan plan_render(const PlanarLayout& layout, const LayoutConfig& config) {
  RenderPlan plan;
  std::vector<bool> used(layout.edges.size(), false);

  for (const Node& n : layout.nodes) {
    if (n.kind != NodeKind::inner) continue;
    BoxKind kind = n.box ? n.box->kind() : BoxKind::plain;
    if (kind == BoxKind::cup || kind == BoxKind::cap) {
      std::vector<std::size_t> incident;
      for (std::size_t i = 0; i < layout.edges.size(); ++i) {
        if (layout.edges[i].src == n.id || layout.edges[i].tgt == n.id) {
          incident.push_back(i);
        }
      }
      if (incident.size() == 2) {
        auto a = edge_points(layout, layout.edges[incident[0]]);
        auto b = edge_points(layout, layout.edges[incident[1]]);
        if (kind == BoxKind::cup) {
          std::reverse(b.begin(), b.end());
          a.insert(a.end(), b.begin() + 1, b.end());
        } else {
          std::reverse(a.begin(), a.end());
          a.insert(a.end(), b.begin() + 1, b.end());
        }
        plan.paths.push_back(std::move(a));
        used[incident[0]] = used[incident[1]] = true;
        continue;
      }
    }
    bool triangle = config.triangle_states && kind == BoxKind::plain &&
                    n.box && n.box->dom().empty();
    (triangle ? plan.triangles : plan.rects).push_back(&n);
  }
  for (std::size_t i = 0; i < layout.edges.size(); ++i) {
    if (!used[i]) plan.paths.push_back(edge_points(layout, layout.edges[i]));
  }
  return plan;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_tikz(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_tikz(const PlanarLayout& layout, const LayoutConfig& config) {
  RenderPlan plan = plan_render(layout, config);
  const double sx = config.wire_spacing;
  const double sy = config.layer_spacing;
  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  for (const auto& path : plan.paths) {
    out << "\\draw";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) out << " --";
      out << " (" << fmt(path[i].x * sx) << ", " << fmt(-path[i].y * sy)
          << ")";
    }
    out << ";\n";
  }
  for (const Node* n : plan.rects) {
    out << "\\node[draw, fill=white, minimum height="
        << fmt(config.box_height * 28.4) << "pt] at (" << fmt(n->x * sx)
        << ", " << fmt(-n->y * sy) << ") {" << escape_tikz(n->label)
        << "};\n";
  }
  for (const Node* n : plan.triangles) {
    double w = 0.5 * sx;
    double h = config.box_height * sy;
    out << "\\draw[fill=white] (" << fmt((n->x - w) * sx) << ", "
        << fmt(-(n->y + h / 2) * sy) << ") -- (" << fmt((n->x + w) * sx)
        << ", " << fmt(-(n->y + h / 2) * sy) << ") -- (" << fmt(n->x * sx)
        << ", " << fmt(-(n->y - h / 2) * sy) << ") -- cycle;\n";
    out << "\\node at (" << fmt(n->x * sx) << ", " << fmt(-(n->y + h / 6) * sy)
        << ") {" << escape_tikz(n->label) << "};\n";
  }
  for (const Node& n : layout.nodes) {
    if (n.kind == NodeKind::outer_dom) {
      out << "\\node at (" << fmt(n.x * sx) << ", " << fmt(-(n.y - 0.25) * sy)
          << ") {" << escape_tikz(n.label) << "};\n";
    } else if (n.kind == NodeKind::outer_cod) {
      out << "\\node at (" << fmt(n.x * sx) << ", " << fmt(-(n.y + 0.25) * sy)
          << ") {" << escape_tikz(n.label) << "};\n";
    }
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string to_svg(const PlanarLayout& layout, const LayoutConfig& config) {
  RenderPlan plan = plan_render(layout, config);
  const double scale = 40.0;
  const double margin = 40.0;
  double min_x = 0, max_x = 0, max_y = 1;
  for (const Node& n : layout.nodes) {
    min_x = std::min(min_x, n.x);
    max_x = std::max(max_x, n.x);
    max_y = std::max(max_y, n.y);
  }
  auto px = [&](double x) { return (x - min_x) * scale * config.wire_spacing + margin; };
  auto py = [&](double y) { return y * scale * config.layer_spacing + margin; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << fmt(px(max_x) + margin) << "\" height=\"" << fmt(py(max_y) + margin)
      << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  for (const auto& path : plan.paths) {
    out << "  <path d=\"";
    for (std::size_t i = 0; i < path.size(); ++i) {
      out << (i ? " L " : "M ") << fmt(px(path[i].x)) << " "
          << fmt(py(path[i].y));
    }
    out << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  const double bw = scale * 0.8;
  const double bh = scale * config.box_height * config.layer_spacing;
  for (const Node* n : plan.rects) {
    out << "  <rect x=\"" << fmt(px(n->x) - bw / 2) << "\" y=\""
        << fmt(py(n->y) - bh / 2) << "\" width=\"" << fmt(bw)
        << "\" height=\"" << fmt(bh)
        << "\" fill=\"white\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << fmt(px(n->x)) << "\" y=\"" << fmt(py(n->y) + 4)
        << "\" text-anchor=\"middle\">" << escape_xml(n->label)
        << "</text>\n";
  }
  for (const Node* n : plan.triangles) {
    out << "  <path d=\"M " << fmt(px(n->x) - bw / 2) << " "
        << fmt(py(n->y) + bh / 2) << " L " << fmt(px(n->x) + bw / 2) << " "
        << fmt(py(n->y) + bh / 2) << " L " << fmt(px(n->x)) << " "
        << fmt(py(n->y) - bh / 2)
        << " Z\" fill=\"white\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << fmt(px(n->x)) << "\" y=\""
        << fmt(py(n->y) + bh / 2 - 4) << "\" text-anchor=\"middle\">"
        << escape_xml(n->label) << "</text>\n";
  }
  for (const Node& n : layout.nodes) {
    if (n.kind == NodeKind::outer_dom) {
      out << "  <text x=\"" << fmt(px(n.x)) << "\" y=\"" << fmt(py(n.y) - 8)
          << "\" text-anchor=\"middle\">" << escape_xml(n.label)
          << "</text>\n";
    } else if (n.kind == NodeKind::outer_cod) {
      out << "  <text x=\"" << fmt(px(n.x)) << "\" y=\"" << fmt(py(n.y) + 16)
          << "\" text-anchor=\"middle\">" << escape_xml(n.label)
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dk::drawing
