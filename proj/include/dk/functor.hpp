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

#include <map>

#include "dk/monoidal.hpp"
#include "dk/rigid.hpp"

namespace dk {

// A functor target provides the receiving category's operations plus the
// image of atoms and boxes:
//
//   using ObT  = ...;            // target object
//   using ArrT = ...;            // target arrow
//   ObT  unit() const;
//   ObT  tensor_ob(ObT, ObT) const;
//   ObT  map_atom(const Ob&) const;     // winding already applied
//   ArrT id(const ObT&) const;
//   ArrT then(ArrT, ArrT) const;
//   ArrT tensor(ArrT, ArrT) const;
//   ArrT box_image(const Box&, const Ty& mapped context...) -- see below
//
// Diagrams are evaluated layer by layer as id(left) @ F(box) @ id(right).

template <typename Target>
typename Target::ObT map_ty(const Target& target, const Ty& ty) {
  auto acc = target.unit();
  for (const Ob& atom : ty) {
    acc = target.tensor_ob(std::move(acc), target.map_atom(atom));
  }
  return acc;
}

template <typename Target>
typename Target::ArrT apply_functor(const Target& target, const Diagram& d) {
  auto acc = target.id(map_ty(target, d.dom()));
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Layer& layer = d.layer(i);
    auto image = target.box_image(layer.box());
    auto padded = target.tensor(
        target.tensor(target.id(map_ty(target, layer.left())),
                      std::move(image)),
        target.id(map_ty(target, layer.right())));
    acc = target.then(std::move(acc), std::move(padded));
  }
  return acc;
}

/// Free functor target: diagrams into diagrams over another signature.
/// Atom images may be whole types; cups and caps map to nested cups and caps.
class DiagramTarget {
 public:
  using ObT = Ty;
  using ArrT = Diagram;

  DiagramTarget(std::map<Ob, Ty> ob, std::map<Box, Diagram> ar);

  Ty unit() const { return Ty(); }
  Ty tensor_ob(Ty a, Ty b) const { return a.tensor(b); }
  Ty map_atom(const Ob& atom) const;
  Diagram id(const Ty& t) const { return Diagram::id(t); }
  Diagram then(Diagram a, Diagram b) const { return a.then(b); }
  Diagram tensor(Diagram a, Diagram b) const { return a.tensor(b); }
  Diagram box_image(const Box& box) const;

  const std::map<Ob, Ty>& ob() const { return ob_; }
  const std::map<Box, Diagram>& ar() const { return ar_; }

 private:
  std::map<Ob, Ty> ob_;
  std::map<Box, Diagram> ar_;
};

}  // namespace dk
