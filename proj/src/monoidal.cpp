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

#include "dk/monoidal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dk {

// ---------------------------------------------------------------------------
// Ob

std::string Ob::token() const {
  if (z_ == 0) return name_;
  std::string suffix = z_ > 0 ? ".r" : ".l";
  int mag = z_ > 0 ? z_ : -z_;
  if (mag > 1) suffix += std::to_string(mag);
  return name_ + suffix;
}

Ob Ob::from_token(const std::string& token) {
  auto dot = token.rfind('.');
  if (dot == std::string::npos || dot + 1 >= token.size()) {
    return Ob(token);
  }
  char dir = token[dot + 1];
  if (dir != 'l' && dir != 'r') return Ob(token);
  int mag = 1;
  if (dot + 2 < token.size()) {
    try {
      std::size_t used = 0;
      mag = std::stoi(token.substr(dot + 2), &used);
      if (used != token.size() - dot - 2) return Ob(token);
    } catch (const std::exception&) {
      return Ob(token);
    }
  }
  return Ob(token.substr(0, dot), dir == 'r' ? mag : -mag);
}

// ---------------------------------------------------------------------------
// Ty

Ty Ty::of(std::initializer_list<std::string> names) {
  std::vector<Ob> obs;
  obs.reserve(names.size());
  for (const auto& n : names) obs.emplace_back(n);
  return Ty(std::move(obs));
}

Ty Ty::tensor(const Ty& other) const {
  std::vector<Ob> obs = obs_;
  obs.insert(obs.end(), other.obs_.begin(), other.obs_.end());
  return Ty(std::move(obs));
}

Ty Ty::slice(std::size_t i, std::size_t j) const {
  if (i > j || j > obs_.size()) {
    throw CompositionError("type slice [" + std::to_string(i) + ", " +
                           std::to_string(j) + ") out of range for width " +
                           std::to_string(obs_.size()));
  }
  return Ty(std::vector<Ob>(obs_.begin() + static_cast<long>(i),
                            obs_.begin() + static_cast<long>(j)));
}

std::string Ty::str() const {
  if (obs_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < obs_.size(); ++i) {
    if (i) out += " @ ";
    out += obs_[i].token();
  }
  return out;
}

const Ob& PRO::generator() {
  static const Ob q("1");
  return q;
}

PRO::operator Ty() const {
  return Ty(std::vector<Ob>(n, generator()));
}

// ---------------------------------------------------------------------------
// Box

const char* to_string(BoxKind kind) {
  switch (kind) {
    case BoxKind::plain: return "box";
    case BoxKind::cup: return "cup";
    case BoxKind::cap: return "cap";
    case BoxKind::swap_wires: return "swap";
    case BoxKind::copy_wires: return "copy";
    case BoxKind::delete_wires: return "del";
    case BoxKind::gate: return "gate";
    case BoxKind::ket: return "ket";
    case BoxKind::bra: return "bra";
    case BoxKind::scalar: return "scalar";
  }
  return "box";
}

Box::Box(std::string name, Ty dom, Ty cod, Json data, bool dagger)
    : name_(std::move(name)),
      dom_(std::move(dom)),
      cod_(std::move(cod)),
      data_(std::move(data)),
      dagger_(dagger),
      kind_(BoxKind::plain) {}

Box Box::dagger() const {
  Box out;
  out.name_ = name_;
  out.dom_ = cod_;
  out.cod_ = dom_;
  out.data_ = data_;
  switch (kind_) {
    case BoxKind::cup:
      out.kind_ = BoxKind::cap;
      out.dagger_ = false;
      out.name_ = "cap";
      break;
    case BoxKind::cap:
      out.kind_ = BoxKind::cup;
      out.dagger_ = false;
      out.name_ = "cup";
      break;
    case BoxKind::ket:
      out.kind_ = BoxKind::bra;
      out.dagger_ = false;
      break;
    case BoxKind::bra:
      out.kind_ = BoxKind::ket;
      out.dagger_ = false;
      break;
    case BoxKind::scalar: {
      out.kind_ = BoxKind::scalar;
      out.dagger_ = false;
      // conjugate the payload
      double re = data_.at("value").at(0).get<double>();
      double im = data_.at("value").at(1).get<double>();
      return Box::scalar(std::complex<double>(re, -im));
    }
    case BoxKind::swap_wires:
      out.kind_ = BoxKind::swap_wires;
      out.dagger_ = false;
      out.name_ = "swap";
      break;
    default:
      out.kind_ = kind_;
      out.dagger_ = !dagger_;
      break;
  }
  if (out.kind_ == BoxKind::ket || out.kind_ == BoxKind::bra) {
    // keep the display name in sync with the new kind
    std::string bits;
    for (const auto& b : data_.at("bits")) bits += b.get<int>() ? '1' : '0';
    out.name_ = out.kind_ == BoxKind::ket ? "|" + bits + ">" : "<" + bits + "|";
  }
  return out;
}

Box Box::with_data(Json data) const {
  Box out = *this;
  out.data_ = std::move(data);
  return out;
}

Box Box::raw(std::string name, Ty dom, Ty cod, Json data, bool dagger,
             BoxKind kind) {
  Box out;
  out.name_ = std::move(name);
  out.dom_ = std::move(dom);
  out.cod_ = std::move(cod);
  out.data_ = std::move(data);
  out.dagger_ = dagger;
  out.kind_ = kind;
  if (kind == BoxKind::cup || kind == BoxKind::cap) {
    const Ty& pair = kind == BoxKind::cup ? out.dom_ : out.cod_;
    const Ty& unit = kind == BoxKind::cup ? out.cod_ : out.dom_;
    if (!unit.empty() || pair.size() != 2 ||
        pair[0].name() != pair[1].name() ||
        std::abs(pair[0].z() - pair[1].z()) != 1) {
      throw ValidationError(std::string(to_string(kind)) +
                            " must pair one atom with its adjoint, got " +
                            pair.str());
    }
  }
  return out;
}

bool operator==(const Box& a, const Box& b) {
  return a.kind_ == b.kind_ && a.dagger_ == b.dagger_ && a.name_ == b.name_ &&
         a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.data_ == b.data_;
}

bool operator<(const Box& a, const Box& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.name_ != b.name_) return a.name_ < b.name_;
  if (a.dom_ != b.dom_) return a.dom_ < b.dom_;
  if (a.cod_ != b.cod_) return a.cod_ < b.cod_;
  if (a.dagger_ != b.dagger_) return a.dagger_ < b.dagger_;
  return a.data_ < b.data_;
}

bool operator==(const Layer& a, const Layer& b) {
  return a.left_ == b.left_ && a.box_ == b.box_ && a.right_ == b.right_;
}

// ---------------------------------------------------------------------------
// Diagram

Diagram Diagram::id(Ty t) { return Diagram(std::move(t), {}, {}); }

Diagram Diagram::from_box(Box b) {
  Ty dom = b.dom();
  return Diagram(std::move(dom), {std::move(b)}, {0});
}

Diagram::Diagram(Ty dom, std::vector<Box> boxes,
                 std::vector<std::size_t> offsets)
    : dom_(std::move(dom)), boxes_(std::move(boxes)), offsets_(std::move(offsets)) {
  build_layers();
}

Diagram::Diagram(Ty dom, Ty cod, std::vector<Box> boxes,
                 std::vector<std::size_t> offsets)
    : dom_(std::move(dom)), boxes_(std::move(boxes)), offsets_(std::move(offsets)) {
  build_layers();
  if (cod_ != cod) {
    throw CompositionError("declared codomain " + cod.str() +
                           " does not match computed codomain " + cod_.str());
  }
}

void Diagram::build_layers() {
  if (boxes_.size() != offsets_.size()) {
    throw CompositionError("boxes and offsets must have equal length, got " +
                           std::to_string(boxes_.size()) + " and " +
                           std::to_string(offsets_.size()));
  }
  layers_.clear();
  layers_.reserve(boxes_.size());
  Ty running = dom_;
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    const Box& box = boxes_[i];
    std::size_t off = offsets_[i];
    if (off + box.dom().size() > running.size()) {
      throw CompositionError("box " + std::to_string(i) + " (" + box.name() +
                             "): offset " + std::to_string(off) +
                             " out of range for type " + running.str());
    }
    Ty found = running.slice(off, off + box.dom().size());
    if (found != box.dom()) {
      throw CompositionError("box " + std::to_string(i) + " (" + box.name() +
                             "): expected " + box.dom().str() +
                             " at offset " + std::to_string(off) +
                             ", found " + found.str());
    }
    Ty left = running.slice(0, off);
    Ty right = running.slice(off + box.dom().size(), running.size());
    running = left.tensor(box.cod()).tensor(right);
    layers_.emplace_back(std::move(left), box, std::move(right));
  }
  cod_ = std::move(running);
}

Diagram Diagram::then(const Diagram& other) const {
  if (cod_ != other.dom_) {
    throw CompositionError("cannot compose: codomain " + cod_.str() +
                           " does not match domain " + other.dom_.str());
  }
  std::vector<Box> boxes = boxes_;
  boxes.insert(boxes.end(), other.boxes_.begin(), other.boxes_.end());
  std::vector<std::size_t> offsets = offsets_;
  offsets.insert(offsets.end(), other.offsets_.begin(), other.offsets_.end());
  return Diagram(dom_, std::move(boxes), std::move(offsets));
}

Diagram Diagram::tensor(const Diagram& other) const {
  std::vector<Box> boxes = boxes_;
  boxes.insert(boxes.end(), other.boxes_.begin(), other.boxes_.end());
  std::vector<std::size_t> offsets = offsets_;
  offsets.reserve(offsets.size() + other.offsets_.size());
  for (std::size_t off : other.offsets_) offsets.push_back(off + cod_.size());
  return Diagram(dom_.tensor(other.dom_), std::move(boxes), std::move(offsets));
}

Diagram Diagram::dagger() const {
  std::vector<Box> boxes;
  std::vector<std::size_t> offsets;
  boxes.reserve(boxes_.size());
  offsets.reserve(offsets_.size());
  for (std::size_t i = boxes_.size(); i-- > 0;) {
    boxes.push_back(boxes_[i].dagger());
    offsets.push_back(offsets_[i]);
  }
  return Diagram(cod_, std::move(boxes), std::move(offsets));
}

Diagram Diagram::slice(std::size_t i, std::size_t j) const {
  if (i > j || j > boxes_.size()) {
    throw CompositionError("diagram slice [" + std::to_string(i) + ", " +
                           std::to_string(j) + ") out of range for " +
                           std::to_string(boxes_.size()) + " boxes");
  }
  Ty dom = i < layers_.size() ? layers_[i].dom() : cod_;
  return Diagram(
      std::move(dom),
      std::vector<Box>(boxes_.begin() + static_cast<long>(i),
                       boxes_.begin() + static_cast<long>(j)),
      std::vector<std::size_t>(offsets_.begin() + static_cast<long>(i),
                               offsets_.begin() + static_cast<long>(j)));
}

namespace {

// Adjacent interchange at (i, i+1). The right interchanger applies when the
// top box sits entirely right of the bottom box's input block; the left one
// when the bottom box sits entirely right of the top box's output block.
// `prefer_left` decides who goes first when both apply (states and effects
// at equal offsets).
Diagram interchange_adjacent(const Diagram& d, std::size_t i,
                             bool prefer_left) {
  const Box& top = d.boxes()[i];
  const Box& bottom = d.boxes()[i + 1];
  std::size_t off_top = d.offsets()[i];
  std::size_t off_bottom = d.offsets()[i + 1];

  bool right_ok = off_top >= off_bottom + bottom.dom().size();
  bool left_ok = off_bottom >= off_top + top.cod().size();
  if (!right_ok && !left_ok) {
    throw InterchangeError("boxes " + std::to_string(i) + " (" + top.name() +
                           ") and " + std::to_string(i + 1) + " (" +
                           bottom.name() + ") are connected");
  }

  std::vector<Box> boxes = d.boxes();
  std::vector<std::size_t> offsets = d.offsets();
  bool use_right = prefer_left ? !left_ok : right_ok;
  if (use_right) {
    // bottom box moves up keeping its offset; top box shifts by the width
    // change of the box that passed it.
    boxes[i] = bottom;
    boxes[i + 1] = top;
    offsets[i] = off_bottom;
    offsets[i + 1] = off_top - bottom.dom().size() + bottom.cod().size();
  } else {
    boxes[i] = bottom;
    boxes[i + 1] = top;
    offsets[i] = off_bottom - top.cod().size() + top.dom().size();
    offsets[i + 1] = off_top;
  }
  return Diagram(d.dom(), std::move(boxes), std::move(offsets));
}

}  // namespace

Diagram Diagram::interchange(std::size_t i, std::size_t j, bool left) const {
  if (i >= boxes_.size() || j >= boxes_.size()) {
    throw CompositionError("interchange indices (" + std::to_string(i) + ", " +
                           std::to_string(j) + ") out of range for " +
                           std::to_string(boxes_.size()) + " boxes");
  }
  if (i == j) return *this;
  Diagram result = *this;
  if (i < j) {
    for (std::size_t k = i; k < j; ++k) {
      result = interchange_adjacent(result, k, left);
    }
  } else {
    for (std::size_t k = i; k-- > j;) {
      result = interchange_adjacent(result, k, left);
    }
  }
  return result;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool Diagram::boundary_connected() const {
  if (boxes_.empty()) return true;
  // Node per box plus one node for the boundary (index = box count).
  const std::size_t boundary = boxes_.size();
  UnionFind uf(boxes_.size() + 1);
  // origin of each open wire: boundary or the box that produced it
  std::vector<std::size_t> origin(dom_.size(), boundary);
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    const Box& box = boxes_[i];
    std::size_t off = offsets_[i];
    for (std::size_t w = 0; w < box.dom().size(); ++w) {
      uf.unite(i, origin[off + w]);
    }
    origin.erase(origin.begin() + static_cast<long>(off),
                 origin.begin() + static_cast<long>(off + box.dom().size()));
    origin.insert(origin.begin() + static_cast<long>(off), box.cod().size(), i);
  }
  for (std::size_t src : origin) uf.unite(src, boundary);
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (uf.find(i) != uf.find(boundary)) return false;
  }
  return true;
}

std::string Diagram::str() const {
  std::ostringstream out;
  out << dom_.str() << " -> " << cod_.str() << " [";
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (i) out << ", ";
    out << boxes_[i].name() << "@" << offsets_[i];
  }
  out << "]";
  return out.str();
}

bool operator==(const Diagram& a, const Diagram& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.boxes_ == b.boxes_ &&
         a.offsets_ == b.offsets_;
}

// ---------------------------------------------------------------------------
// Normalization

std::optional<Diagram> Normalizer::step() {
  const auto& boxes = current_.boxes();
  const auto& offsets = current_.offsets();
  for (std::size_t i = 0; i + 1 < boxes.size(); ++i) {
    bool applies =
        left_ ? offsets[i + 1] >= offsets[i] + boxes[i].cod().size()
              : offsets[i] >= offsets[i + 1] + boxes[i + 1].dom().size();
    if (applies) {
      current_ = current_.interchange(i, i + 1, left_);
      ++steps_;
      return current_;
    }
  }
  return std::nullopt;
}

NormalizeResult normalize(const Diagram& d, bool left, std::size_t max_steps) {
  NormalizeResult result;
  Normalizer normalizer(d, left);
  while (auto next = normalizer.step()) {
    result.trace.push_back(*next);
    if (result.trace.size() >= max_steps) {
      // one more probe decides whether we stopped exactly at the end
      Normalizer probe(normalizer.current(), left);
      result.truncated = probe.step().has_value();
      return result;
    }
  }
  return result;
}

Diagram normal_form(const Diagram& d, bool left) {
  if (!d.boundary_connected()) {
    throw DisconnectedError(
        "diagram is not boundary-connected; normal form is undefined: " +
        d.str());
  }
  const std::size_t n = d.size();
  const std::size_t cap = 10 * n * n * n + 100;
  Normalizer normalizer(d, left);
  while (normalizer.step()) {
    if (normalizer.steps() > cap) {
      throw Error("internal: interchanger normalization exceeded " +
                  std::to_string(cap) + " steps on a connected diagram");
    }
  }
  return normalizer.current();
}

}  // namespace dk
