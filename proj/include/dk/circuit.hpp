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

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dk/monoidal.hpp"
#include "dk/tensor.hpp"

namespace dk::circuit {

using Complex = std::complex<double>;

/// Computational-basis matrix of a built-in gate, row-major over 2^n inputs.
/// Rotations take the phase in half-turns: Rx(a) = exp(-i pi a X) and
/// Rz(a) = exp(-i pi a Z), a full turn at a = 1.
std::optional<std::vector<Complex>> builtin_gate(const std::string& name,
                                                 std::size_t n_qubits,
                                                 const Json& data);

/// Names of all fixed built-in gates (no rotations).
const std::vector<std::string>& builtin_gate_names();

/// Matrix of any gate box: built-in, rotation, or custom; applies the dagger.
std::vector<Complex> gate_matrix(const Box& box);

/// max |(U* U - I)_ij| over all entries.
double unitarity_defect(const std::vector<Complex>& matrix, std::size_t n);

/// True when dom/cod are widths of the qubit generator and every box is a
/// gate, ket, bra or scalar.
bool is_circuit(const Diagram& d);

/// Unnormalized Bell state () -> 2 qubits, built from kets, H and CX with a
/// sqrt(2) scalar; evaluates to the reshaped identity.
Diagram bell_state();
/// Its dagger, the unnormalized Bell effect.
Diagram bell_effect();

/// Nested Bell effects pairing qubit i with qubit 2n-1-i.
Diagram cups(std::size_t n);
Diagram caps(std::size_t n);

/// Statevector semantics: the tensor functor sending each qubit to a
/// two-dimensional leg and each box to its matrix.
tensor::TensorComplex eval(const Diagram& circuit);

/// Born rule: entrywise squared modulus of eval. Requires an empty domain;
/// not necessarily normalized when the circuit holds scalars or bras.
tensor::TensorReal measure(const Diagram& circuit);

/// Functor from rigid diagrams into circuits: atoms to qubit counts, cups
/// and caps to Bell effects and states, boxes to circuits.
class CircuitFunctor {
 public:
  using ObT = std::size_t;
  using ArrT = Diagram;

  CircuitFunctor(std::map<Ob, std::size_t> ob, std::map<Box, Diagram> ar);

  std::size_t unit() const { return 0; }
  std::size_t tensor_ob(std::size_t a, std::size_t b) const { return a + b; }
  std::size_t map_atom(const Ob& atom) const;
  Diagram id(std::size_t n) const { return Diagram::id(PRO(n)); }
  Diagram then(Diagram a, Diagram b) const { return a.then(b); }
  Diagram tensor(Diagram a, Diagram b) const { return a.tensor(b); }
  Diagram box_image(const Box& box) const;

  Diagram operator()(const Diagram& d) const;

 private:
  std::map<Ob, std::size_t> ob_;
  std::map<Box, Diagram> ar_;
};

}  // namespace dk::circuit
