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

#include "dk/circuit.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dk {

namespace {

std::string bit_string(const std::vector<int>& bits) {
  std::string out;
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw ValidationError("bitstring entries must be 0 or 1, got " +
                            std::to_string(b));
    }
    out += b ? '1' : '0';
  }
  return out;
}

std::string complex_str(std::complex<double> v) {
  std::ostringstream out;
  if (v.imag() == 0.0) {
    out << v.real();
  } else if (v.real() == 0.0) {
    out << v.imag() << "i";
  } else {
    out << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
  }
  return out.str();
}

Json matrix_json(const std::vector<std::complex<double>>& matrix) {
  Json out = Json::array();
  for (const auto& entry : matrix) {
    out.push_back(Json::array({entry.real(), entry.imag()}));
  }
  return out;
}

}  // namespace

Box Box::gate(const std::string& name, std::size_t n_qubits) {
  Json data = {{"qubits", n_qubits}};
  if (!circuit::builtin_gate(name, n_qubits, data)) {
    throw ValidationError("unknown built-in gate \"" + name + "\" on " +
                          std::to_string(n_qubits) + " qubits");
  }
  return Box::raw(name, PRO(n_qubits), PRO(n_qubits), std::move(data), false,
                  BoxKind::gate);
}

Box Box::gate(const std::string& name, std::size_t n_qubits,
              const std::vector<std::complex<double>>& matrix) {
  std::size_t dim = std::size_t{1} << n_qubits;
  if (matrix.size() != dim * dim) {
    throw ShapeError("gate \"" + name + "\" on " + std::to_string(n_qubits) +
                     " qubits needs a " + std::to_string(dim) + "x" +
                     std::to_string(dim) + " matrix");
  }
  double defect = circuit::unitarity_defect(matrix, dim);
  if (defect > 1e-9) {
    throw ValidationError("gate \"" + name + "\" is not unitary (defect " +
                          std::to_string(defect) + ")");
  }
  Json data = {{"qubits", n_qubits}, {"matrix", matrix_json(matrix)}};
  return Box::raw(name, PRO(n_qubits), PRO(n_qubits), std::move(data), false,
                  BoxKind::gate);
}

Box Box::rotation(char axis, double phase) {
  if (axis != 'x' && axis != 'z') {
    throw ValidationError("rotation axis must be 'x' or 'z'");
  }
  std::string name = axis == 'x' ? "Rx" : "Rz";
  Json data = {{"qubits", 1}, {"phase", phase}};
  return Box::raw(std::move(name), PRO(1), PRO(1), std::move(data), false,
                  BoxKind::gate);
}

Box Box::ket(const std::vector<int>& bits) {
  std::string bs = bit_string(bits);
  Json data = {{"bits", bits}};
  return Box::raw("|" + bs + ">", Ty(), PRO(bits.size()), std::move(data),
                  false, BoxKind::ket);
}

Box Box::bra(const std::vector<int>& bits) {
  std::string bs = bit_string(bits);
  Json data = {{"bits", bits}};
  return Box::raw("<" + bs + "|", PRO(bits.size()), Ty(), std::move(data),
                  false, BoxKind::bra);
}

Box Box::scalar(std::complex<double> value) {
  Json data = {{"value", Json::array({value.real(), value.imag()})}};
  return Box::raw(complex_str(value), Ty(), Ty(), std::move(data), false,
                  BoxKind::scalar);
}

}  // namespace dk

namespace dk::circuit {

namespace {

constexpr Complex I{0.0, 1.0};

const std::map<std::string, std::vector<Complex>>& fixed_gates() {
  static const auto* table = [] {
    const double s = std::sqrt(0.5);
    auto* t = new std::map<std::string, std::vector<Complex>>{
        {"H", {s, s, s, -s}},
        {"X", {0, 1, 1, 0}},
        {"Y", {0, -I, I, 0}},
        {"Z", {1, 0, 0, -1}},
        {"S", {1, 0, 0, I}},
        {"T", {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)}},
        {"CX",
         {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}},
        {"CZ",
         {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1}},
        {"SWAP",
         {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}},
    };
    return t;
  }();
  return *table;
}

std::size_t gate_qubits(const std::string& name) {
  return name == "CX" || name == "CZ" || name == "SWAP" ? 2 : 1;
}

}  // namespace

const std::vector<std::string>& builtin_gate_names() {
  static const auto* names = [] {
    auto* out = new std::vector<std::string>();
    for (const auto& [name, matrix] : fixed_gates()) out->push_back(name);
    return out;
  }();
  return *names;
}

std::optional<std::vector<Complex>> builtin_gate(const std::string& name,
                                                 std::size_t n_qubits,
                                                 const Json& data) {
  if (auto it = fixed_gates().find(name); it != fixed_gates().end()) {
    if (n_qubits != gate_qubits(name)) return std::nullopt;
    return it->second;
  }
  if ((name == "Rx" || name == "Rz") && n_qubits == 1) {
    if (!data.is_object() || !data.contains("phase")) return std::nullopt;
    double a = data.at("phase").get<double>();
    double half_theta = std::numbers::pi * a;
    if (name == "Rx") {
      Complex c = std::cos(half_theta);
      Complex s = -I * std::sin(half_theta);
      return std::vector<Complex>{c, s, s, c};
    }
    return std::vector<Complex>{std::polar(1.0, -half_theta), 0, 0,
                                std::polar(1.0, half_theta)};
  }
  return std::nullopt;
}

double unitarity_defect(const std::vector<Complex>& matrix, std::size_t n) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += std::conj(matrix[k * n + i]) * matrix[k * n + j];
      }
      if (i == j) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

std::vector<Complex> gate_matrix(const Box& box) {
  if (box.kind() != BoxKind::gate) {
    throw ValidationError("box \"" + box.name() + "\" is not a gate");
  }
  std::size_t n_qubits = box.data().at("qubits").get<std::size_t>();
  std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<Complex> matrix;
  if (box.data().is_object() && box.data().contains("matrix")) {
    for (const auto& entry : box.data().at("matrix")) {
      matrix.emplace_back(entry.at(0).get<double>(),
                          entry.at(1).get<double>());
    }
    if (matrix.size() != dim * dim) {
      throw ShapeError("gate \"" + box.name() + "\" matrix has wrong size");
    }
  } else if (auto m = builtin_gate(box.name(), n_qubits, box.data())) {
    matrix = *m;
  } else {
    throw MappingError("unknown gate \"" + box.name() + "\"");
  }
  if (box.is_dagger()) {
    std::vector<Complex> adj(matrix.size());
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        adj[j * dim + i] = std::conj(matrix[i * dim + j]);
      }
    }
    matrix = std::move(adj);
  }
  return matrix;
}

bool is_circuit(const Diagram& d) {
  for (const Ob& atom : d.dom()) {
    if (atom != PRO::generator()) return false;
  }
  for (const Ob& atom : d.cod()) {
    if (atom != PRO::generator()) return false;
  }
  for (const Box& box : d.boxes()) {
    switch (box.kind()) {
      case BoxKind::gate:
      case BoxKind::ket:
      case BoxKind::bra:
      case BoxKind::scalar:
        break;
      default:
        return false;
    }
  }
  return true;
}

Diagram bell_state() {
  Diagram state = Diagram::from_box(Box::scalar(std::sqrt(2.0)))
                      .tensor(Diagram::from_box(Box::ket({0, 0})));
  Diagram h = Diagram::from_box(Box::gate("H", 1)).tensor(Diagram::id(PRO(1)));
  Diagram cx = Diagram::from_box(Box::gate("CX", 2));
  return state.then(h).then(cx);
}

Diagram bell_effect() { return bell_state().dagger(); }

Diagram cups(std::size_t n) {
  Diagram d = Diagram::id(PRO(2 * n));
  for (std::size_t i = n; i-- > 0;) {
    Diagram layer = Diagram::id(PRO(i)).tensor(bell_effect()).tensor(
        Diagram::id(PRO(i)));
    d = d.then(layer);
  }
  return d;
}

Diagram caps(std::size_t n) {
  Diagram d = Diagram::id(PRO(0));
  for (std::size_t i = 0; i < n; ++i) {
    Diagram layer = Diagram::id(PRO(i)).tensor(bell_state()).tensor(
        Diagram::id(PRO(i)));
    d = d.then(layer);
  }
  return d;
}

namespace {

tensor::TensorComplex box_tensor(const Box& box) {
  using TC = tensor::TensorComplex;
  switch (box.kind()) {
    case BoxKind::gate: {
      std::size_t n_qubits = box.data().at("qubits").get<std::size_t>();
      std::vector<std::size_t> twos(n_qubits, 2);
      tensor::Dim legs{std::vector<std::size_t>(twos)};
      return TC(legs, legs, gate_matrix(box));
    }
    case BoxKind::ket:
    case BoxKind::bra: {
      const auto& bits = box.data().at("bits");
      std::size_t n = bits.size();
      std::size_t index = 0;
      for (const auto& b : bits) index = index * 2 + b.get<std::size_t>();
      std::vector<Complex> data(std::size_t{1} << n, 0.0);
      data[index] = 1.0;
      tensor::Dim legs{std::vector<std::size_t>(n, 2)};
      return box.kind() == BoxKind::ket
                 ? TC(tensor::Dim(), legs, std::move(data))
                 : TC(legs, tensor::Dim(), std::move(data));
    }
    case BoxKind::scalar: {
      double re = box.data().at("value").at(0).get<double>();
      double im = box.data().at("value").at(1).get<double>();
      return TC::scalar(Complex(re, im));
    }
    default:
      throw ValidationError("box \"" + box.name() +
                            "\" has no statevector semantics");
  }
}

}  // namespace

tensor::TensorComplex eval(const Diagram& circuit) {
  tensor::TensorFunctor<Complex> functor({{PRO::generator(), {2}}}, {});
  functor.set_fallback([](const Box& box) -> std::optional<tensor::TensorComplex> {
    return box_tensor(box);
  });
  return functor(circuit);
}

tensor::TensorReal measure(const Diagram& circuit) {
  if (!circuit.dom().empty()) {
    throw ValidationError(
        "measurement requires a state; the circuit has nonempty domain " +
        circuit.dom().str());
  }
  tensor::TensorComplex amplitudes = eval(circuit);
  std::vector<double> probabilities;
  probabilities.reserve(amplitudes.array().size());
  for (const Complex& a : amplitudes.array()) {
    probabilities.push_back(std::norm(a));
  }
  return tensor::TensorReal(tensor::Dim(), amplitudes.cod(),
                            std::move(probabilities));
}

// ---------------------------------------------------------------------------
// CircuitFunctor

CircuitFunctor::CircuitFunctor(std::map<Ob, std::size_t> ob,
                               std::map<Box, Diagram> ar)
    : ob_(std::move(ob)), ar_(std::move(ar)) {
  for (const auto& [atom, width] : ob_) {
    if (atom.z() != 0) {
      throw ValidationError(
          "object map must be given on winding-zero atoms, got " +
          atom.token());
    }
    (void)width;
  }
}

std::size_t CircuitFunctor::map_atom(const Ob& atom) const {
  // qubit widths are self-dual, so the winding is immaterial
  auto it = ob_.find(Ob(atom.name()));
  if (it == ob_.end()) {
    throw MappingError("no qubit width for atom " + atom.token());
  }
  return it->second;
}

Diagram CircuitFunctor::box_image(const Box& box) const {
  switch (box.kind()) {
    case BoxKind::cup:
      return cups(map_atom(box.dom()[0]));
    case BoxKind::cap:
      return caps(map_atom(box.cod()[0]));
    default:
      break;
  }
  Diagram image = [&] {
    if (auto it = ar_.find(box); it != ar_.end()) return it->second;
    if (box.is_dagger()) {
      Box base = box.dagger();
      if (auto it = ar_.find(base); it != ar_.end()) {
        return it->second.dagger();
      }
    }
    if (box.kind() != BoxKind::plain) return Diagram::from_box(box);
    throw MappingError("no circuit for box \"" + box.name() + "\" : " +
                       box.dom().str() + " -> " + box.cod().str());
  }();
  std::size_t want_dom = 0;
  for (const Ob& atom : box.dom()) want_dom += map_atom(atom);
  std::size_t want_cod = 0;
  for (const Ob& atom : box.cod()) want_cod += map_atom(atom);
  if (image.dom().size() != want_dom || image.cod().size() != want_cod) {
    throw ShapeError("circuit for box \"" + box.name() + "\" has width " +
                     std::to_string(image.dom().size()) + " -> " +
                     std::to_string(image.cod().size()) + ", expected " +
                     std::to_string(want_dom) + " -> " +
                     std::to_string(want_cod));
  }
  return image;
}

Diagram CircuitFunctor::operator()(const Diagram& d) const {
  return apply_functor(*this, d);
}

}  // namespace dk::circuit
