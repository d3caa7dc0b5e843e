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

#include <string>
#include <variant>

#include "dk/cartesian.hpp"
#include "dk/cat.hpp"
#include "dk/drawing.hpp"
#include "dk/monoidal.hpp"
#include "dk/rigid.hpp"
#include "dk/tensor.hpp"

namespace dk::io {

// Canonical JSON encodings. Top-level values are single-key objects:
// {"ob": ...}, {"arrow": ...}, {"ty": ...}, {"diagram": ...}, {"tensor": ...},
// {"grammar": ...}, {"layout": ...}, {"tensor_functor": ...},
// {"function_functor": ...}. Boxes appear under a key naming their kind.

Json encode(const cat::Ob& x);
Json encode(const cat::Box& box);
Json encode(const cat::Arrow& arrow);

Json encode_atom(const Ob& atom);  // "x" when the winding is zero, [name, z] otherwise
Json encode(const Ty& ty);
Json encode(const Box& box);
Json encode(const Diagram& d);
Json encode(const tensor::AnyTensor& t);
Json encode(const rigid::PregroupGrammar& grammar);
Json encode(const drawing::PlanarLayout& layout);

cat::Ob decode_cat_ob(const Json& j);
cat::Box decode_cat_box(const Json& j);
cat::Arrow decode_arrow(const Json& j);

Ob decode_atom(const Json& j);
Ty decode_ty(const Json& j);
Box decode_box(const Json& j);
Diagram decode_diagram(const Json& j);
tensor::AnyTensor decode_tensor(const Json& j);
rigid::PregroupGrammar decode_grammar(const Json& j);
drawing::PlanarLayout decode_layout(const Json& j);

using AnyFunctor =
    std::variant<tensor::TensorFunctor<bool>, tensor::TensorFunctor<double>,
                 tensor::TensorFunctor<std::complex<double>>,
                 cartesian::FunctionFunctor>;
AnyFunctor decode_functor(const Json& j);

/// Evaluates a decoded functor on a diagram; tensor functors produce
/// tensors, reported through the variant.
std::variant<tensor::AnyTensor, cartesian::Fn> apply_any_functor(
    const AnyFunctor& functor, const Diagram& d);

enum class ValueKind { diagram, arrow, tensor, grammar, layout, functor };

const char* to_string(ValueKind kind);

struct AnyValue {
  ValueKind kind;
  std::variant<Diagram, cat::Arrow, tensor::AnyTensor, rigid::PregroupGrammar,
               drawing::PlanarLayout, AnyFunctor>
      value;
};

/// Parses any recognized top-level value, dispatching on the single key.
AnyValue decode_value(const Json& j);
Json encode_value(const AnyValue& v);

Json parse_json(const std::string& text);

}  // namespace dk::io
