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

#include "dk/json_io.hpp"

#include <complex>

namespace dk::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DecodeError("missing field \"" + std::string(key) + "\" in " +
                      j.dump());
  }
  return j.at(key);
}

[[noreturn]] void bad(const std::string& what, const Json& j) {
  throw DecodeError(what + ": " + j.dump());
}

}  // namespace

// ---------------------------------------------------------------------------
// cat

Json encode(const cat::Ob& x) { return Json{{"ob", {{"name", x.name()}}}}; }

Json encode(const cat::Box& box) {
  return Json{{"box",
               {{"name", box.name()},
                {"dom", encode(box.dom())},
                {"cod", encode(box.cod())},
                {"data", box.data()},
                {"dagger", box.is_dagger()}}}};
}

Json encode(const cat::Arrow& arrow) {
  Json boxes = Json::array();
  for (const auto& box : arrow.boxes()) boxes.push_back(encode(box));
  return Json{{"arrow",
               {{"dom", encode(arrow.dom())},
                {"cod", encode(arrow.cod())},
                {"boxes", std::move(boxes)}}}};
}

cat::Ob decode_cat_ob(const Json& j) {
  if (!j.is_object() || !j.contains("ob")) bad("expected an object value", j);
  return cat::Ob(field(j.at("ob"), "name"));
}

cat::Box decode_cat_box(const Json& j) {
  if (!j.is_object() || !j.contains("box")) bad("expected a box", j);
  const Json& b = j.at("box");
  return cat::Box(field(b, "name").get<std::string>(),
                  decode_cat_ob(field(b, "dom")),
                  decode_cat_ob(field(b, "cod")),
                  b.contains("data") ? b.at("data") : Json(nullptr),
                  b.contains("dagger") && b.at("dagger").get<bool>());
}

cat::Arrow decode_arrow(const Json& j) {
  if (!j.is_object() || !j.contains("arrow")) bad("expected an arrow", j);
  const Json& a = j.at("arrow");
  std::vector<cat::Box> boxes;
  for (const auto& box : field(a, "boxes")) {
    boxes.push_back(decode_cat_box(box));
  }
  try {
    return cat::Arrow(decode_cat_ob(field(a, "dom")),
                      decode_cat_ob(field(a, "cod")), std::move(boxes));
  } catch (const CompositionError& e) {
    throw DecodeError(std::string("ill-typed arrow: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// types and boxes

Json encode_atom(const Ob& atom) {
  if (atom.z() == 0) return Json(atom.name());
  return Json::array({atom.name(), atom.z()});
}

Ob decode_atom(const Json& j) {
  if (j.is_string()) return Ob(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j.at(0).is_string() &&
      j.at(1).is_number_integer()) {
    return Ob(j.at(0).get<std::string>(), j.at(1).get<int>());
  }
  bad("expected an atom (\"name\" or [name, z])", j);
}

Json encode(const Ty& ty) {
  Json atoms = Json::array();
  for (const Ob& atom : ty) atoms.push_back(encode_atom(atom));
  return Json{{"ty", std::move(atoms)}};
}

Ty decode_ty(const Json& j) {
  const Json* list = &j;
  if (j.is_object() && j.contains("ty")) list = &j.at("ty");
  if (list->is_number_integer()) {
    if (list->get<long long>() < 0) bad("negative width", j);
    return PRO(list->get<std::size_t>());
  }
  if (!list->is_array()) bad("expected a type", j);
  std::vector<Ob> atoms;
  for (const auto& atom : *list) atoms.push_back(decode_atom(atom));
  return Ty(std::move(atoms));
}

Json encode(const Box& box) {
  switch (box.kind()) {
    case BoxKind::plain:
      return Json{{"box",
                   {{"name", box.name()},
                    {"dom", encode(box.dom())},
                    {"cod", encode(box.cod())},
                    {"data", box.data()},
                    {"dagger", box.is_dagger()}}}};
    case BoxKind::cup:
      return Json{{"cup", Json::array({encode_atom(box.dom()[0]),
                                       encode_atom(box.dom()[1])})}};
    case BoxKind::cap:
      return Json{{"cap", Json::array({encode_atom(box.cod()[0]),
                                       encode_atom(box.cod()[1])})}};
    case BoxKind::swap_wires:
      return Json{{"swap", Json::array({encode_atom(box.dom()[0]),
                                        encode_atom(box.dom()[1])})}};
    case BoxKind::copy_wires:
      if (box.is_dagger()) {
        return Json{{"merge", encode_atom(box.cod()[0])}};
      }
      return Json{{"copy", encode_atom(box.dom()[0])}};
    case BoxKind::delete_wires:
      if (box.is_dagger()) {
        return Json{{"insert", encode_atom(box.cod()[0])}};
      }
      return Json{{"del", encode_atom(box.dom()[0])}};
    case BoxKind::gate: {
      Json gate = {{"name", box.name()},
                   {"qubits", box.data().at("qubits")}};
      if (box.data().contains("phase")) gate["phase"] = box.data().at("phase");
      if (box.data().contains("matrix")) {
        gate["matrix"] = box.data().at("matrix");
      }
      if (box.is_dagger()) gate["dagger"] = true;
      return Json{{"gate", std::move(gate)}};
    }
    case BoxKind::ket:
      return Json{{"ket", box.data().at("bits")}};
    case BoxKind::bra:
      return Json{{"bra", box.data().at("bits")}};
    case BoxKind::scalar:
      return Json{{"scalar", box.data().at("value")}};
  }
  throw DecodeError("unreachable box kind");
}

Box decode_box(const Json& j) {
  if (!j.is_object() || j.size() != 1) bad("expected a box", j);
  const std::string key = j.begin().key();
  const Json& body = j.begin().value();
  if (key == "box") {
    return Box(field(body, "name").get<std::string>(),
               decode_ty(field(body, "dom")), decode_ty(field(body, "cod")),
               body.contains("data") ? body.at("data") : Json(nullptr),
               body.contains("dagger") && body.at("dagger").get<bool>());
  }
  if (key == "cup" || key == "cap") {
    if (!body.is_array() || body.size() != 2) bad("expected an atom pair", j);
    Ob a = decode_atom(body.at(0));
    Ob b = decode_atom(body.at(1));
    return key == "cup" ? Box::cup(a, b) : Box::cap(a, b);
  }
  if (key == "swap") {
    if (!body.is_array() || body.size() != 2) bad("expected an atom pair", j);
    return Box::swap(decode_atom(body.at(0)), decode_atom(body.at(1)));
  }
  if (key == "copy") return Box::copy(decode_atom(body));
  if (key == "merge") return Box::copy(decode_atom(body)).dagger();
  if (key == "del") return Box::discard(decode_atom(body));
  if (key == "insert") return Box::discard(decode_atom(body)).dagger();
  if (key == "gate") {
    std::string name = field(body, "name").get<std::string>();
    std::size_t qubits = field(body, "qubits").get<std::size_t>();
    Box gate = [&] {
      if (body.contains("matrix")) {
        std::vector<std::complex<double>> matrix;
        for (const auto& entry : body.at("matrix")) {
          matrix.emplace_back(entry.at(0).get<double>(),
                              entry.at(1).get<double>());
        }
        return Box::gate(name, qubits, matrix);
      }
      if (body.contains("phase")) {
        if (name == "Rx") return Box::rotation('x', body.at("phase").get<double>());
        if (name == "Rz") return Box::rotation('z', body.at("phase").get<double>());
        bad("phase given for a non-rotation gate", j);
      }
      return Box::gate(name, qubits);
    }();
    if (body.contains("dagger") && body.at("dagger").get<bool>()) {
      gate = gate.dagger();
    }
    return gate;
  }
  if (key == "ket" || key == "bra") {
    std::vector<int> bits;
    for (const auto& bit : body) bits.push_back(bit.get<int>());
    return key == "ket" ? Box::ket(bits) : Box::bra(bits);
  }
  if (key == "scalar") {
    if (!body.is_array() || body.size() != 2) bad("expected [re, im]", j);
    return Box::scalar({body.at(0).get<double>(), body.at(1).get<double>()});
  }
  bad("unknown box kind \"" + key + "\"", j);
}

Json encode(const Diagram& d) {
  Json boxes = Json::array();
  for (const Box& box : d.boxes()) boxes.push_back(encode(box));
  return Json{{"diagram",
               {{"dom", encode(d.dom())},
                {"cod", encode(d.cod())},
                {"boxes", std::move(boxes)},
                {"offsets", d.offsets()}}}};
}

Diagram decode_diagram(const Json& j) {
  if (!j.is_object() || !j.contains("diagram")) bad("expected a diagram", j);
  const Json& d = j.at("diagram");
  std::vector<Box> boxes;
  for (const auto& box : field(d, "boxes")) boxes.push_back(decode_box(box));
  std::vector<std::size_t> offsets;
  for (const auto& off : field(d, "offsets")) {
    offsets.push_back(off.get<std::size_t>());
  }
  try {
    return Diagram(decode_ty(field(d, "dom")), decode_ty(field(d, "cod")),
                   std::move(boxes), std::move(offsets));
  } catch (const CompositionError& e) {
    throw DecodeError(std::string("ill-typed diagram: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// tensors

namespace {

Json encode_dim(const tensor::Dim& d) {
  Json out = Json::array();
  for (std::size_t n : d.dims()) out.push_back(n);
  return out;
}

tensor::Dim decode_dim(const Json& j) {
  if (!j.is_array()) bad("expected a dimension list", j);
  std::vector<std::size_t> dims;
  for (const auto& d : j) dims.push_back(d.get<std::size_t>());
  return tensor::Dim(std::move(dims));
}

template <typename T>
Json encode_entry(const T& value) {
  return Json(value);
}

Json encode_entry(const std::complex<double>& value) {
  return Json::array({value.real(), value.imag()});
}

template <typename T>
Json encode_tensor_impl(const tensor::Tensor<T>& t) {
  Json array = Json::array();
  for (const T& value : t.array()) array.push_back(encode_entry(value));
  return Json{{"tensor",
               {{"dom", encode_dim(t.dom())},
                {"cod", encode_dim(t.cod())},
                {"semiring", tensor::Semiring<T>::name},
                {"array", std::move(array)}}}};
}

template <typename T>
T decode_entry(const Json& j);

template <>
bool decode_entry<bool>(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number()) return j.get<double>() != 0.0;
  bad("expected a boolean entry", j);
}

template <>
double decode_entry<double>(const Json& j) {
  if (j.is_number()) return j.get<double>();
  bad("expected a real entry", j);
}

template <>
std::complex<double> decode_entry<std::complex<double>>(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
  }
  bad("expected a complex entry [re, im]", j);
}

template <typename T>
tensor::Tensor<T> decode_tensor_impl(const Json& body) {
  std::vector<T> array;
  for (const auto& entry : field(body, "array")) {
    array.push_back(decode_entry<T>(entry));
  }
  try {
    return tensor::Tensor<T>(decode_dim(field(body, "dom")),
                             decode_dim(field(body, "cod")),
                             std::move(array));
  } catch (const ShapeError& e) {
    throw DecodeError(std::string("bad tensor: ") + e.what());
  }
}

}  // namespace

Json encode(const tensor::AnyTensor& t) {
  return std::visit([](const auto& tensor) { return encode_tensor_impl(tensor); },
                    t);
}

tensor::AnyTensor decode_tensor(const Json& j) {
  if (!j.is_object() || !j.contains("tensor")) bad("expected a tensor", j);
  const Json& body = j.at("tensor");
  std::string semiring = field(body, "semiring").get<std::string>();
  if (semiring == "bool") return decode_tensor_impl<bool>(body);
  if (semiring == "real") return decode_tensor_impl<double>(body);
  if (semiring == "complex") {
    return decode_tensor_impl<std::complex<double>>(body);
  }
  bad("unknown semiring \"" + semiring + "\"", j);
}

// ---------------------------------------------------------------------------
// grammars

Json encode(const rigid::PregroupGrammar& grammar) {
  Json dict = Json::array();
  for (const auto& [word, ty] : grammar.dictionary()) {
    Json atoms = Json::array();
    for (const Ob& atom : ty) {
      atoms.push_back(Json::array({atom.name(), atom.z()}));
    }
    dict.push_back(Json::array({word, std::move(atoms)}));
  }
  return Json{{"grammar",
               {{"vocab", grammar.vocabulary()},
                {"basic", grammar.basic_types()},
                {"s", grammar.sentence_type().name()},
                {"dict", std::move(dict)}}}};
}

rigid::PregroupGrammar decode_grammar(const Json& j) {
  if (!j.is_object() || !j.contains("grammar")) bad("expected a grammar", j);
  const Json& g = j.at("grammar");
  std::set<std::string> vocab;
  for (const auto& word : field(g, "vocab")) {
    vocab.insert(word.get<std::string>());
  }
  std::set<std::string> basic;
  for (const auto& name : field(g, "basic")) {
    basic.insert(name.get<std::string>());
  }
  std::vector<std::pair<std::string, Ty>> dict;
  for (const auto& entry : field(g, "dict")) {
    if (!entry.is_array() || entry.size() != 2) bad("bad dictionary entry", entry);
    std::vector<Ob> atoms;
    for (const auto& atom : entry.at(1)) atoms.push_back(decode_atom(atom));
    dict.emplace_back(entry.at(0).get<std::string>(), Ty(std::move(atoms)));
  }
  try {
    return rigid::PregroupGrammar(std::move(vocab), std::move(basic),
                                  Ob(field(g, "s").get<std::string>()),
                                  std::move(dict));
  } catch (const ValidationError& e) {
    throw DecodeError(std::string("bad grammar: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// layouts

namespace {

const char* node_kind_name(drawing::NodeKind kind) {
  switch (kind) {
    case drawing::NodeKind::outer_dom: return "dom";
    case drawing::NodeKind::outer_cod: return "cod";
    case drawing::NodeKind::inner: return "box";
  }
  return "box";
}

drawing::NodeKind decode_node_kind(const Json& j) {
  std::string kind = j.get<std::string>();
  if (kind == "dom") return drawing::NodeKind::outer_dom;
  if (kind == "cod") return drawing::NodeKind::outer_cod;
  if (kind == "box") return drawing::NodeKind::inner;
  bad("unknown node kind", j);
}

}  // namespace

Json encode(const drawing::PlanarLayout& layout) {
  Json nodes = Json::array();
  for (const auto& n : layout.nodes) {
    Json node = {{"id", n.id},
                 {"x", n.x},
                 {"y", n.y},
                 {"kind", node_kind_name(n.kind)},
                 {"label", n.label}};
    if (n.box) node["box"] = encode(*n.box);
    nodes.push_back(std::move(node));
  }
  Json edges = Json::array();
  for (const auto& e : layout.edges) {
    Json path = Json::array();
    for (const auto& p : e.hints) path.push_back(Json::array({p.x, p.y}));
    edges.push_back(Json{{"src", e.src},
                         {"tgt", e.tgt},
                         {"label", e.label},
                         {"path", std::move(path)}});
  }
  return Json{{"layout", {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}}}};
}

drawing::PlanarLayout decode_layout(const Json& j) {
  if (!j.is_object() || !j.contains("layout")) bad("expected a layout", j);
  const Json& l = j.at("layout");
  drawing::PlanarLayout layout;
  for (const auto& n : field(l, "nodes")) {
    drawing::Node node;
    node.id = field(n, "id").get<int>();
    node.x = field(n, "x").get<double>();
    node.y = field(n, "y").get<double>();
    node.kind = decode_node_kind(field(n, "kind"));
    node.label = field(n, "label").get<std::string>();
    if (n.contains("box")) node.box = decode_box(n.at("box"));
    layout.nodes.push_back(std::move(node));
  }
  for (const auto& e : field(l, "edges")) {
    drawing::Edge edge;
    edge.src = field(e, "src").get<int>();
    edge.tgt = field(e, "tgt").get<int>();
    edge.label = field(e, "label").get<std::string>();
    if (e.contains("path")) {
      for (const auto& p : e.at("path")) {
        edge.hints.push_back(
            drawing::Point{p.at(0).get<double>(), p.at(1).get<double>()});
      }
    }
    layout.edges.push_back(std::move(edge));
  }
  return layout;
}

// ---------------------------------------------------------------------------
// functors

namespace {

template <typename T>
tensor::TensorFunctor<T> decode_tensor_functor(const Json& body) {
  std::map<Ob, tensor::Dim> ob;
  for (const auto& [name, dims] : field(body, "ob").items()) {
    ob[Ob(name)] = decode_dim(dims);
  }
  tensor::TensorFunctor<T> functor(std::move(ob), {});
  if (body.contains("ar")) {
    for (const auto& [name, array] : body.at("ar").items()) {
      std::vector<T> values;
      for (const auto& entry : array) values.push_back(decode_entry<T>(entry));
      functor.set_named_array(name, std::move(values));
    }
  }
  return functor;
}

}  // namespace

AnyFunctor decode_functor(const Json& j) {
  if (j.is_object() && j.contains("tensor_functor")) {
    const Json& body = j.at("tensor_functor");
    std::string semiring = body.contains("semiring")
                               ? body.at("semiring").get<std::string>()
                               : "real";
    if (semiring == "bool") return decode_tensor_functor<bool>(body);
    if (semiring == "real") return decode_tensor_functor<double>(body);
    if (semiring == "complex") {
      return decode_tensor_functor<std::complex<double>>(body);
    }
    bad("unknown semiring \"" + semiring + "\"", j);
  }
  if (j.is_object() && j.contains("function_functor")) {
    const Json& body = j.at("function_functor");
    std::map<Ob, std::size_t> ob;
    for (const auto& [name, arity] : field(body, "ob").items()) {
      ob[Ob(name)] = arity.get<std::size_t>();
    }
    cartesian::FunctionFunctor functor(std::move(ob), {});
    if (body.contains("ar")) {
      for (const auto& [name, fn_name] : body.at("ar").items()) {
        auto fn = cartesian::builtin(fn_name.get<std::string>());
        if (!fn) {
          bad("unknown builtin function \"" + fn_name.get<std::string>() +
                  "\"",
              j);
        }
        functor.set_named(name, std::move(*fn));
      }
    }
    return functor;
  }
  bad("expected a functor", j);
}

std::variant<tensor::AnyTensor, cartesian::Fn> apply_any_functor(
    const AnyFunctor& functor, const Diagram& d) {
  using Out = std::variant<tensor::AnyTensor, cartesian::Fn>;
  return std::visit(
      [&](const auto& f) -> Out {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, cartesian::FunctionFunctor>) {
          return Out{f(d)};
        } else {
          return Out{tensor::AnyTensor{f(d)}};
        }
      },
      functor);
}

// ---------------------------------------------------------------------------
// dispatch

const char* to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::diagram: return "diagram";
    case ValueKind::arrow: return "arrow";
    case ValueKind::tensor: return "tensor";
    case ValueKind::grammar: return "grammar";
    case ValueKind::layout: return "layout";
    case ValueKind::functor: return "functor";
  }
  return "value";
}

AnyValue decode_value(const Json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw DecodeError("expected a single-key value object, got " + j.dump());
  }
  const std::string key = j.begin().key();
  if (key == "diagram") return {ValueKind::diagram, decode_diagram(j)};
  if (key == "arrow") return {ValueKind::arrow, decode_arrow(j)};
  if (key == "tensor") return {ValueKind::tensor, decode_tensor(j)};
  if (key == "grammar") return {ValueKind::grammar, decode_grammar(j)};
  if (key == "layout") return {ValueKind::layout, decode_layout(j)};
  if (key == "tensor_functor" || key == "function_functor") {
    return {ValueKind::functor, decode_functor(j)};
  }
  throw DecodeError("unrecognized value kind \"" + key + "\"");
}

Json encode_value(const AnyValue& v) {
  return std::visit(
      [](const auto& value) -> Json {
        using V = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<V, AnyFunctor>) {
          throw DecodeError("functors do not re-encode");
        } else {
          return encode(value);
        }
      },
      v.value);
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw DecodeError("malformed JSON input");
  }
  return j;
}

}  // namespace dk::io
