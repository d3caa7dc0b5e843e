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

#include <compare>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dk/errors.hpp"

namespace dk {

using Json = nlohmann::json;

/// Atomic wire type: a name plus an adjoint winding number. Plain monoidal
/// diagrams only ever use winding zero; the rigid layer shifts it.
class Ob {
 public:
  Ob() = default;
  explicit Ob(std::string name, int z = 0) : name_(std::move(name)), z_(z) {}

  const std::string& name() const { return name_; }
  int z() const { return z_; }

  /// Compact one-token spelling: "x", "x.l", "x.r", "x.r2", "x.l3", ...
  std::string token() const;
  static Ob from_token(const std::string& token);

  friend bool operator==(const Ob&, const Ob&) = default;
  friend auto operator<=>(const Ob&, const Ob&) = default;

 private:
  std::string name_;
  int z_ = 0;
};

/// A word of atoms; the monoid operation is concatenation.
class Ty {
 public:
  using const_iterator = std::vector<Ob>::const_iterator;

  Ty() = default;
  explicit Ty(std::vector<Ob> obs) : obs_(std::move(obs)) {}
  Ty(std::initializer_list<Ob> obs) : obs_(obs) {}
  explicit Ty(const Ob& ob) : obs_{ob} {}

  /// All-zero-winding type from bare names.
  static Ty of(std::initializer_list<std::string> names);

  std::size_t size() const { return obs_.size(); }
  bool empty() const { return obs_.empty(); }
  const Ob& operator[](std::size_t i) const { return obs_[i]; }
  const std::vector<Ob>& atoms() const { return obs_; }
  const_iterator begin() const { return obs_.begin(); }
  const_iterator end() const { return obs_.end(); }

  Ty tensor(const Ty& other) const;
  /// Sub-word [i, j).
  Ty slice(std::size_t i, std::size_t j) const;
  std::string str() const;

  friend bool operator==(const Ty&, const Ty&) = default;
  friend auto operator<=>(const Ty&, const Ty&) = default;

 private:
  std::vector<Ob> obs_;
};

/// Width-n type over the single generator "1"; converts implicitly to Ty.
struct PRO {
  std::size_t n = 0;
  PRO() = default;
  explicit PRO(std::size_t width) : n(width) {}
  operator Ty() const;
  static const Ob& generator();
};

enum class BoxKind {
  plain,
  cup,
  cap,
  swap_wires,
  copy_wires,
  delete_wires,
  gate,
  ket,
  bra,
  scalar,
};

const char* to_string(BoxKind kind);

/// A generator of the signature: named, typed, optionally daggered, with an
/// arbitrary JSON payload. Structural generators (cups, swaps, gates, ...)
/// are tagged by kind and built through the factories below.
class Box {
 public:
  Box(std::string name, Ty dom, Ty cod, Json data = nullptr,
      bool dagger = false);

  // Rigid generators; the two atoms must be equal names with windings one
  // apart, in either direction (see rigid.cpp).
  static Box cup(const Ob& a, const Ob& b);
  static Box cap(const Ob& a, const Ob& b);

  // Cartesian structure on atoms (see cartesian.cpp).
  static Box swap(const Ob& a, const Ob& b);
  static Box copy(const Ob& a);
  static Box discard(const Ob& a);

  // Circuit generators (see circuit.cpp). Custom matrices are checked for
  // unitarity at construction.
  static Box gate(const std::string& name, std::size_t n_qubits);
  static Box gate(const std::string& name, std::size_t n_qubits,
                  const std::vector<std::complex<double>>& matrix);
  static Box rotation(char axis, double phase);
  static Box ket(const std::vector<int>& bits);
  static Box bra(const std::vector<int>& bits);
  static Box scalar(std::complex<double> value);

  /// Raw constructor used by decoders; validates kind-specific invariants.
  static Box raw(std::string name, Ty dom, Ty cod, Json data, bool dagger,
                 BoxKind kind);

  const std::string& name() const { return name_; }
  const Ty& dom() const { return dom_; }
  const Ty& cod() const { return cod_; }
  const Json& data() const { return data_; }
  bool is_dagger() const { return dagger_; }
  BoxKind kind() const { return kind_; }

  Box dagger() const;
  /// Same box with a different payload.
  Box with_data(Json data) const;

  friend bool operator==(const Box& a, const Box& b);
  friend bool operator!=(const Box& a, const Box& b) { return !(a == b); }
  friend bool operator<(const Box& a, const Box& b);

 private:
  Box() = default;
  std::string name_;
  Ty dom_;
  Ty cod_;
  Json data_;
  bool dagger_ = false;
  BoxKind kind_ = BoxKind::plain;
};

/// One box padded by identity wires: dom = left @ box.dom @ right.
class Layer {
 public:
  Layer(Ty left, Box box, Ty right)
      : left_(std::move(left)), box_(std::move(box)), right_(std::move(right)) {}

  const Ty& left() const { return left_; }
  const Box& box() const { return box_; }
  const Ty& right() const { return right_; }
  Ty dom() const { return left_.tensor(box_.dom()).tensor(right_); }
  Ty cod() const { return left_.tensor(box_.cod()).tensor(right_); }

  friend bool operator==(const Layer& a, const Layer& b);

 private:
  Ty left_;
  Box box_;
  Ty right_;
};

/// Arrow of the free (pre)monoidal category: a domain plus a vertical stack
/// of layers, stored as parallel box/offset lists. Layers are materialized
/// at construction so that type errors surface at the failing box index.
class Diagram {
 public:
  /// The empty identity.
  Diagram() = default;

  static Diagram id(Ty t);
  static Diagram from_box(Box b);

  /// Threads the running type through boxes/offsets and infers the codomain.
  Diagram(Ty dom, std::vector<Box> boxes, std::vector<std::size_t> offsets);
  /// As above, but additionally checks the given codomain.
  Diagram(Ty dom, Ty cod, std::vector<Box> boxes,
          std::vector<std::size_t> offsets);

  const Ty& dom() const { return dom_; }
  const Ty& cod() const { return cod_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  const std::vector<std::size_t>& offsets() const { return offsets_; }
  std::size_t size() const { return boxes_.size(); }
  const Layer& layer(std::size_t i) const { return layers_[i]; }
  const std::vector<Layer>& layers() const { return layers_; }

  Diagram then(const Diagram& other) const;
  Diagram tensor(const Diagram& other) const;
  Diagram dagger() const;
  /// Composite of layers [i, j) with inferred boundary types.
  Diagram slice(std::size_t i, std::size_t j) const;

  /// Exchanges boxes i and j; |i - j| > 1 decomposes into adjacent steps
  /// (box i migrates to position j). Fails atomically: on error the diagram
  /// is unchanged. The `left` flag picks the left interchanger first when
  /// both directions apply.
  Diagram interchange(std::size_t i, std::size_t j, bool left = false) const;

  /// True when every box reaches the top or bottom boundary through wires.
  bool boundary_connected() const;

  std::string str() const;

  friend bool operator==(const Diagram& a, const Diagram& b);
  friend bool operator!=(const Diagram& a, const Diagram& b) {
    return !(a == b);
  }

 private:
  void build_layers();  // validates and fills layers_, sets cod_

  Ty dom_;
  Ty cod_;
  std::vector<Box> boxes_;
  std::vector<std::size_t> offsets_;
  std::vector<Layer> layers_;
};

/// Step-at-a-time interchanger rewriting: scan top to bottom, apply the
/// first available right (or left) interchanger. May run forever on inputs
/// that are not boundary-connected; callers bound it.
class Normalizer {
 public:
  explicit Normalizer(Diagram d, bool left = false)
      : current_(std::move(d)), left_(left) {}

  /// Applies one step; nullopt when no interchanger applies.
  std::optional<Diagram> step();
  const Diagram& current() const { return current_; }
  std::size_t steps() const { return steps_; }

 private:
  Diagram current_;
  bool left_;
  std::size_t steps_ = 0;
};

struct NormalizeResult {
  std::vector<Diagram> trace;  // one diagram per rewrite step
  bool truncated = false;      // hit max_steps before reaching normal form
};

NormalizeResult normalize(const Diagram& d, bool left = false,
                          std::size_t max_steps = 100000);

/// Interchanger normal form. Throws DisconnectedError when the input is not
/// boundary-connected; a 10 n^3 + 100 step cap guards against non-termination
/// bugs on top of the connectivity check.
Diagram normal_form(const Diagram& d, bool left = false);

}  // namespace dk
