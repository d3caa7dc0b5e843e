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

#include "dk/functor.hpp"

#include "dk/cartesian.hpp"

namespace dk {

DiagramTarget::DiagramTarget(std::map<Ob, Ty> ob, std::map<Box, Diagram> ar)
    : ob_(std::move(ob)), ar_(std::move(ar)) {
  for (const auto& [atom, image] : ob_) {
    if (atom.z() != 0) {
      throw ValidationError(
          "object map must be given on winding-zero atoms, got " +
          atom.token());
    }
    (void)image;
  }
}

Ty DiagramTarget::map_atom(const Ob& atom) const {
  auto it = ob_.find(Ob(atom.name()));
  if (it == ob_.end()) {
    throw MappingError("no image for atom " + atom.token());
  }
  return rigid::shifted(it->second, atom.z());
}

Diagram DiagramTarget::box_image(const Box& box) const {
  switch (box.kind()) {
    case BoxKind::cup: {
      const Ob& a = box.dom()[0];
      const Ob& b = box.dom()[1];
      auto wind = b.z() == a.z() + 1 ? rigid::Wind::right_adjoint
                                     : rigid::Wind::left_adjoint;
      return rigid::cups(map_atom(a), wind);
    }
    case BoxKind::cap: {
      const Ob& a = box.cod()[0];
      const Ob& b = box.cod()[1];
      auto wind = b.z() == a.z() - 1 ? rigid::Wind::left_adjoint
                                     : rigid::Wind::right_adjoint;
      return rigid::caps(map_atom(a), wind);
    }
    case BoxKind::swap_wires:
      return cartesian::swap(map_atom(box.dom()[0]), map_atom(box.dom()[1]));
    case BoxKind::copy_wires:
      return box.is_dagger()
                 ? cartesian::copy(map_atom(box.cod()[0])).dagger()
                 : cartesian::copy(map_atom(box.dom()[0]));
    case BoxKind::delete_wires:
      return box.is_dagger()
                 ? cartesian::discard(map_atom(box.cod()[0])).dagger()
                 : cartesian::discard(map_atom(box.dom()[0]));
    default:
      break;
  }
  if (auto it = ar_.find(box); it != ar_.end()) return it->second;
  if (box.is_dagger()) {
    Box base = box.dagger();
    if (auto it = ar_.find(base); it != ar_.end()) {
      return it->second.dagger();
    }
  }
  // concrete generators carry their own meaning
  if (box.kind() == BoxKind::gate || box.kind() == BoxKind::ket ||
      box.kind() == BoxKind::bra || box.kind() == BoxKind::scalar) {
    return Diagram::from_box(box);
  }
  throw MappingError("no image for box \"" + box.name() + "\" : " +
                     box.dom().str() + " -> " + box.cod().str());
}

}  // namespace dk
