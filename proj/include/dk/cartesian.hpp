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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dk/functor.hpp"
#include "dk/monoidal.hpp"

namespace dk::cartesian {

/// Ladder of atomic swaps exchanging the x and y blocks.
Diagram swap(const Ty& x, const Ty& y);
/// Comonoid comultiplication: x -> x @ x, built by splitting both halves and
/// swapping the middle.
Diagram copy(const Ty& x);
/// Comonoid counit: x -> (), one wire ending per atom.
Diagram discard(const Ty& x);

/// Value universe for tuple functions: 64-bit integers and reals.
using Value = std::variant<std::int64_t, double>;

bool value_equal(const Value& a, const Value& b);
std::string value_str(const Value& v);

/// A pure function between tuples of fixed arities.
struct Fn {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::function<std::vector<Value>(const std::vector<Value>&)> run;

  std::vector<Value> operator()(const std::vector<Value>& args) const;
};

Fn fn_id(std::size_t arity);
/// Function composition: g after f.
Fn fn_then(Fn f, Fn g);
/// Tuple concatenation on split inputs.
Fn fn_tensor(Fn f, Fn g);

/// Named function table for data-driven functors: "add", "sub", "mul",
/// "div", "neg", "abs", "min", "max", "dup", "id", "const:<number>".
std::optional<Fn> builtin(const std::string& name);

/// Valuation of diagrams in tuple functions: atoms to arities, swaps, copies
/// and deletions to their tuple counterparts.
class FunctionFunctor {
 public:
  using ObT = std::size_t;
  using ArrT = Fn;

  FunctionFunctor() = default;
  FunctionFunctor(std::map<Ob, std::size_t> ob, std::map<Box, Fn> ar);

  /// Name-keyed image for data-driven functors; consulted after the box map.
  void set_named(const std::string& box_name, Fn fn);

  std::size_t unit() const { return 0; }
  std::size_t tensor_ob(std::size_t a, std::size_t b) const { return a + b; }
  std::size_t map_atom(const Ob& atom) const;
  Fn id(std::size_t arity) const { return fn_id(arity); }
  Fn then(Fn a, Fn b) const { return fn_then(std::move(a), std::move(b)); }
  Fn tensor(Fn a, Fn b) const { return fn_tensor(std::move(a), std::move(b)); }
  Fn box_image(const Box& box) const;

  Fn operator()(const Diagram& d) const { return apply_functor(*this, d); }

 private:
  std::map<Ob, std::size_t> ob_;
  std::map<Box, Fn> ar_;
  std::map<std::string, Fn> named_;
};

/// Applies the functor and runs the resulting function in one step,
/// checking the argument count.
std::vector<Value> run_diagram(const FunctionFunctor& functor,
                               const Diagram& d,
                               const std::vector<Value>& args);

/// Category operations of tuple functions, for functors out of plain free
/// categories.
struct FnTarget {
  using ObT = std::size_t;
  using ArrT = Fn;
  Fn id(std::size_t arity) const { return fn_id(arity); }
  Fn then(Fn a, Fn b) const { return fn_then(std::move(a), std::move(b)); }
};

}  // namespace dk::cartesian
