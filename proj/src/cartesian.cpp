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

#include "dk/cartesian.hpp"

#include <cmath>
#include <sstream>

namespace dk {

Box Box::swap(const Ob& a, const Ob& b) {
  return Box::raw("swap", Ty{a, b}, Ty{b, a}, nullptr, false,
                  BoxKind::swap_wires);
}

Box Box::copy(const Ob& a) {
  return Box::raw("copy", Ty{a}, Ty{a, a}, nullptr, false,
                  BoxKind::copy_wires);
}

Box Box::discard(const Ob& a) {
  return Box::raw("del", Ty{a}, Ty(), nullptr, false, BoxKind::delete_wires);
}

}  // namespace dk

namespace dk::cartesian {

namespace {

// sigma_{a, y} for a single atom a: a ladder of atomic swaps walking a past
// every atom of y.
Diagram swap_atom_left(const Ob& a, const Ty& y) {
  Diagram d = Diagram::id(Ty{a}.tensor(y));
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::vector<Box> boxes = {Box::swap(a, y[i])};
    d = d.then(Diagram(d.cod(), std::move(boxes), {i}));
  }
  return d;
}

}  // namespace

Diagram swap(const Ty& x, const Ty& y) {
  if (x.empty() || y.empty()) return Diagram::id(x.tensor(y));
  // peel atoms off x right to left; each one walks across y
  Diagram d = Diagram::id(x.tensor(y));
  for (std::size_t i = x.size(); i-- > 0;) {
    d = d.then(Diagram::id(x.slice(0, i))
                   .tensor(swap_atom_left(x[i], y))
                   .tensor(Diagram::id(x.slice(i + 1, x.size()))));
  }
  return d;
}

Diagram copy(const Ty& x) {
  if (x.empty()) return Diagram::id(Ty());
  if (x.size() == 1) return Diagram::from_box(Box::copy(x[0]));
  Ty head = x.slice(0, 1);
  Ty rest = x.slice(1, x.size());
  // copy both halves, then swap the middle blocks
  Diagram halves = copy(head).tensor(copy(rest));
  Diagram middle = Diagram::id(head)
                       .tensor(swap(head, rest))
                       .tensor(Diagram::id(rest));
  return halves.then(middle);
}

Diagram discard(const Ty& x) {
  Diagram d = Diagram::id(Ty());
  for (const Ob& atom : x) {
    d = d.tensor(Diagram::from_box(Box::discard(atom)));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Tuple functions

bool value_equal(const Value& a, const Value& b) { return a == b; }

std::string value_str(const Value& v) {
  std::ostringstream out;
  if (std::holds_alternative<std::int64_t>(v)) {
    out << std::get<std::int64_t>(v);
  } else {
    out << std::get<double>(v);
  }
  return out.str();
}

std::vector<Value> Fn::operator()(const std::vector<Value>& args) const {
  if (args.size() != dom) {
    throw ShapeError("function of arity " + std::to_string(dom) + " applied to " +
                     std::to_string(args.size()) + " arguments");
  }
  std::vector<Value> out = run(args);
  if (out.size() != cod) {
    throw ShapeError("function declared " + std::to_string(cod) +
                     " outputs but returned " + std::to_string(out.size()));
  }
  return out;
}

Fn fn_id(std::size_t arity) {
  return Fn{arity, arity, [](const std::vector<Value>& args) { return args; }};
}

Fn fn_then(Fn f, Fn g) {
  if (f.cod != g.dom) {
    throw ShapeError("cannot compose arity " + std::to_string(f.cod) +
                     " output with arity " + std::to_string(g.dom) + " input");
  }
  auto ff = std::move(f.run);
  auto gg = std::move(g.run);
  return Fn{f.dom, g.cod, [ff, gg](const std::vector<Value>& args) {
              return gg(ff(args));
            }};
}

Fn fn_tensor(Fn f, Fn g) {
  auto ff = std::move(f.run);
  auto gg = std::move(g.run);
  std::size_t split = f.dom;
  return Fn{f.dom + g.dom, f.cod + g.cod,
            [ff, gg, split](const std::vector<Value>& args) {
              std::vector<Value> left(args.begin(),
                                      args.begin() + static_cast<long>(split));
              std::vector<Value> right(args.begin() + static_cast<long>(split),
                                       args.end());
              std::vector<Value> out = ff(left);
              std::vector<Value> tail = gg(right);
              out.insert(out.end(), tail.begin(), tail.end());
              return out;
            }};
}

namespace {

double as_double(const Value& v) {
  return std::holds_alternative<double>(v) ? std::get<double>(v)
                                           : static_cast<double>(
                                                 std::get<std::int64_t>(v));
}

// integer when both inputs are integers, real otherwise
Value arith(const Value& a, const Value& b, char op) {
  if (std::holds_alternative<std::int64_t>(a) &&
      std::holds_alternative<std::int64_t>(b)) {
    std::int64_t x = std::get<std::int64_t>(a);
    std::int64_t y = std::get<std::int64_t>(b);
    switch (op) {
      case '+': return Value{x + y};
      case '-': return Value{x - y};
      case '*': return Value{x * y};
      case 'm': return Value{std::min(x, y)};
      case 'M': return Value{std::max(x, y)};
      default: break;
    }
  }
  double x = as_double(a);
  double y = as_double(b);
  switch (op) {
    case '+': return Value{x + y};
    case '-': return Value{x - y};
    case '*': return Value{x * y};
    case '/': return Value{x / y};
    case 'm': return Value{std::min(x, y)};
    case 'M': return Value{std::max(x, y)};
    default: throw Error("unknown arithmetic op");
  }
}

Fn binary(char op) {
  return Fn{2, 1, [op](const std::vector<Value>& args) {
              return std::vector<Value>{arith(args[0], args[1], op)};
            }};
}

std::optional<Value> parse_number(const std::string& text) {
  try {
    std::size_t used = 0;
    if (text.find('.') == std::string::npos &&
        text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used == text.size()) return Value{n};
    }
    double d = std::stod(text, &used);
    if (used == text.size()) return Value{d};
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

}  // namespace

std::optional<Fn> builtin(const std::string& name) {
  if (name == "add") return binary('+');
  if (name == "sub") return binary('-');
  if (name == "mul") return binary('*');
  if (name == "div") return binary('/');
  if (name == "min") return binary('m');
  if (name == "max") return binary('M');
  if (name == "neg") {
    return Fn{1, 1, [](const std::vector<Value>& args) {
                if (std::holds_alternative<std::int64_t>(args[0])) {
                  return std::vector<Value>{Value{-std::get<std::int64_t>(args[0])}};
                }
                return std::vector<Value>{Value{-std::get<double>(args[0])}};
              }};
  }
  if (name == "abs") {
    return Fn{1, 1, [](const std::vector<Value>& args) {
                if (std::holds_alternative<std::int64_t>(args[0])) {
                  return std::vector<Value>{
                      Value{std::abs(std::get<std::int64_t>(args[0]))}};
                }
                return std::vector<Value>{Value{std::fabs(std::get<double>(args[0]))}};
              }};
  }
  if (name == "dup") {
    return Fn{1, 2, [](const std::vector<Value>& args) {
                return std::vector<Value>{args[0], args[0]};
              }};
  }
  if (name == "id") return fn_id(1);
  if (name.rfind("const:", 0) == 0) {
    auto value = parse_number(name.substr(6));
    if (!value) return std::nullopt;
    Value v = *value;
    return Fn{0, 1, [v](const std::vector<Value>&) {
                return std::vector<Value>{v};
              }};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Functor

FunctionFunctor::FunctionFunctor(std::map<Ob, std::size_t> ob,
                                 std::map<Box, Fn> ar)
    : ob_(std::move(ob)), ar_(std::move(ar)) {
  for (const auto& [atom, arity] : ob_) {
    if (atom.z() != 0) {
      throw ValidationError(
          "object map must be given on winding-zero atoms, got " +
          atom.token());
    }
    (void)arity;
  }
}

void FunctionFunctor::set_named(const std::string& box_name, Fn fn) {
  named_[box_name] = std::move(fn);
}

std::size_t FunctionFunctor::map_atom(const Ob& atom) const {
  if (atom.z() != 0) {
    throw MappingError("tuple functions have no adjoints, got atom " +
                       atom.token());
  }
  auto it = ob_.find(atom);
  if (it == ob_.end()) {
    throw MappingError("no arity for atom " + atom.token());
  }
  return it->second;
}

Fn FunctionFunctor::box_image(const Box& box) const {
  switch (box.kind()) {
    case BoxKind::swap_wires: {
      std::size_t a = map_atom(box.dom()[0]);
      std::size_t b = map_atom(box.dom()[1]);
      return Fn{a + b, b + a, [a](const std::vector<Value>& args) {
                  std::vector<Value> out(args.begin() + static_cast<long>(a),
                                         args.end());
                  out.insert(out.end(), args.begin(),
                             args.begin() + static_cast<long>(a));
                  return out;
                }};
    }
    case BoxKind::copy_wires: {
      if (box.is_dagger()) break;  // merging is not a tuple function
      std::size_t a = map_atom(box.dom()[0]);
      return Fn{a, 2 * a, [](const std::vector<Value>& args) {
                  std::vector<Value> out = args;
                  out.insert(out.end(), args.begin(), args.end());
                  return out;
                }};
    }
    case BoxKind::delete_wires: {
      if (box.is_dagger()) break;
      std::size_t a = map_atom(box.dom()[0]);
      return Fn{a, 0, [](const std::vector<Value>&) {
                  return std::vector<Value>{};
                }};
    }
    default:
      break;
  }
  if (auto it = ar_.find(box); it != ar_.end()) return it->second;
  if (auto it = named_.find(box.name()); it != named_.end()) return it->second;
  // boxes may carry a named builtin in their payload under "fn"
  if (box.data().is_object() && box.data().contains("fn")) {
    if (auto fn = builtin(box.data().at("fn").get<std::string>())) {
      return *fn;
    }
  }
  if (auto fn = builtin(box.name())) return *fn;
  throw MappingError("no function for box \"" + box.name() + "\" : " +
                     box.dom().str() + " -> " + box.cod().str());
}

std::vector<Value> run_diagram(const FunctionFunctor& functor,
                               const Diagram& d,
                               const std::vector<Value>& args) {
  Fn fn = functor(d);
  return fn(args);
}

}  // namespace dk::cartesian
