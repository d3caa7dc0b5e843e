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
#include <functional>
#include <map>
#include <variant>
#include <vector>

#include "dk/functor.hpp"
#include "dk/monoidal.hpp"

namespace dk::tensor {

/// Shape of a tensor leg: a word of dimensions. Unit entries are dropped at
/// construction so the empty shape is the only monoidal unit; adjoints are
/// list reversal on both sides, making shapes self-dual.
class Dim {
 public:
  Dim() = default;
  Dim(std::initializer_list<std::size_t> dims)
      : Dim(std::vector<std::size_t>(dims)) {}
  explicit Dim(std::vector<std::size_t> dims) {
    for (std::size_t d : dims) {
      if (d == 0) throw ShapeError("zero dimension");
      if (d > 1) dims_.push_back(d);
    }
  }

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t order() const { return dims_.size(); }
  bool empty() const { return dims_.empty(); }
  std::size_t operator[](std::size_t i) const { return dims_[i]; }

  std::size_t total() const {
    std::size_t n = 1;
    for (std::size_t d : dims_) n *= d;
    return n;
  }

  Dim tensor(const Dim& other) const {
    std::vector<std::size_t> dims = dims_;
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    Dim out;
    out.dims_ = std::move(dims);
    return out;
  }

  Dim reversed() const {
    Dim out;
    out.dims_.assign(dims_.rbegin(), dims_.rend());
    return out;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(dims_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const Dim&, const Dim&) = default;
  friend auto operator<=>(const Dim&, const Dim&) = default;

 private:
  std::vector<std::size_t> dims_;
};

/// Commutative semiring operations per scalar type.
template <typename T>
struct Semiring;

template <>
struct Semiring<bool> {
  static constexpr const char* name = "bool";
  static bool zero() { return false; }
  static bool one() { return true; }
  static bool add(bool a, bool b) { return a || b; }
  static bool mul(bool a, bool b) { return a && b; }
  static bool conj(bool a) { return a; }
  static bool close(bool a, bool b, double) { return a == b; }
};

template <>
struct Semiring<double> {
  static constexpr const char* name = "real";
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double add(double a, double b) { return a + b; }
  static double mul(double a, double b) { return a * b; }
  static double conj(double a) { return a; }
  static bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
  }
};

template <>
struct Semiring<std::complex<double>> {
  static constexpr const char* name = "complex";
  using C = std::complex<double>;
  static C zero() { return {0.0, 0.0}; }
  static C one() { return {1.0, 0.0}; }
  static C add(C a, C b) { return a + b; }
  static C mul(C a, C b) { return a * b; }
  static C conj(C a) { return std::conj(a); }
  static bool close(C a, C b, double tol) { return std::abs(a - b) <= tol; }
};

/// Dense tensor between two shapes, stored flat row-major with the domain
/// multi-index outermost. All reshapes are index arithmetic.
template <typename T>
class Tensor {
 public:
  using S = Semiring<T>;

  Tensor(Dim dom, Dim cod, std::vector<T> array)
      : dom_(std::move(dom)), cod_(std::move(cod)), array_(std::move(array)) {
    if (array_.size() != dom_.total() * cod_.total()) {
      throw ShapeError("array of length " + std::to_string(array_.size()) +
                       " does not fit shape " + dom_.str() + " -> " +
                       cod_.str());
    }
  }

  static Tensor zeros(Dim dom, Dim cod) {
    std::size_t n = dom.total() * cod.total();
    return Tensor(std::move(dom), std::move(cod),
                  std::vector<T>(n, S::zero()));
  }

  static Tensor identity(const Dim& d) {
    Tensor out = zeros(d, d);
    std::size_t n = d.total();
    for (std::size_t i = 0; i < n; ++i) out.array_[i * n + i] = S::one();
    return out;
  }

  static Tensor scalar(T value) { return Tensor(Dim(), Dim(), {value}); }

  /// Evaluation d @ reversed(d) -> (): one exactly when the second
  /// multi-index, read back to front, equals the first.
  static Tensor cups(const Dim& d) {
    Tensor out = zeros(d.tensor(d.reversed()), Dim());
    fill_pairing(out.array_, d);
    return out;
  }

  static Tensor caps(const Dim& d) {
    Tensor out = zeros(Dim(), d.tensor(d.reversed()));
    fill_pairing(out.array_, d);
    return out;
  }

  const Dim& dom() const { return dom_; }
  const Dim& cod() const { return cod_; }
  const std::vector<T>& array() const { return array_; }

  T at(std::size_t dom_index, std::size_t cod_index) const {
    return array_[dom_index * cod_.total() + cod_index];
  }

  /// Contraction over the shared boundary.
  Tensor then(const Tensor& other) const {
    if (cod_ != other.dom_) {
      throw ShapeError("cannot contract " + cod_.str() + " with " +
                       other.dom_.str());
    }
    const std::size_t a = dom_.total();
    const std::size_t b = cod_.total();
    const std::size_t c = other.cod_.total();
    Tensor out = zeros(dom_, other.cod_);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t k = 0; k < b; ++k) {
        T left = array_[i * b + k];
        for (std::size_t j = 0; j < c; ++j) {
          out.array_[i * c + j] = S::add(
              out.array_[i * c + j], S::mul(left, other.array_[k * c + j]));
        }
      }
    }
    return out;
  }

  /// Kronecker product with concatenated legs.
  Tensor tensor(const Tensor& other) const {
    const std::size_t a = dom_.total();
    const std::size_t b = cod_.total();
    const std::size_t c = other.dom_.total();
    const std::size_t d = other.cod_.total();
    Tensor out = zeros(dom_.tensor(other.dom_), cod_.tensor(other.cod_));
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        for (std::size_t k = 0; k < b; ++k) {
          T left = array_[i * b + k];
          for (std::size_t l = 0; l < d; ++l) {
            out.array_[((i * c + j) * b + k) * d + l] =
                S::mul(left, other.array_[j * d + l]);
          }
        }
      }
    }
    return out;
  }

  /// Conjugate transpose (plain transpose for semirings without conjugation).
  Tensor dagger() const {
    const std::size_t a = dom_.total();
    const std::size_t b = cod_.total();
    Tensor out = zeros(cod_, dom_);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t k = 0; k < b; ++k) {
        out.array_[k * a + i] = S::conj(array_[i * b + k]);
      }
    }
    return out;
  }

  bool approx_equal(const Tensor& other, double tol) const {
    if (dom_ != other.dom_ || cod_ != other.cod_) return false;
    for (std::size_t i = 0; i < array_.size(); ++i) {
      if (!S::close(array_[i], other.array_[i], tol)) return false;
    }
    return true;
  }

  friend bool operator==(const Tensor& x, const Tensor& y) {
    return x.dom_ == y.dom_ && x.cod_ == y.cod_ && x.array_ == y.array_;
  }

 private:
  static void fill_pairing(std::vector<T>& data, const Dim& d) {
    const std::size_t n = d.total();
    const std::size_t k = d.order();
    std::vector<std::size_t> multi(k, 0);
    for (std::size_t flat = 0; flat < n; ++flat) {
      std::size_t rev = 0;
      for (std::size_t i = 0; i < k; ++i) {
        rev = rev * d[k - 1 - i] + multi[k - 1 - i];
      }
      data[flat * n + rev] = S::one();
      for (std::size_t i = k; i-- > 0;) {
        if (++multi[i] < d[i]) break;
        multi[i] = 0;
      }
    }
  }

  Dim dom_;
  Dim cod_;
  std::vector<T> array_;
};

using TensorBool = Tensor<bool>;
using TensorReal = Tensor<double>;
using TensorComplex = Tensor<std::complex<double>>;
using AnyTensor = std::variant<TensorBool, TensorReal, TensorComplex>;

const char* semiring_name(const AnyTensor& t);

/// Category operations of tensors, for functors out of plain free
/// categories.
template <typename T>
struct MatTarget {
  using ObT = Dim;
  using ArrT = Tensor<T>;
  Tensor<T> id(const Dim& d) const { return Tensor<T>::identity(d); }
  Tensor<T> then(Tensor<T> a, Tensor<T> b) const { return a.then(b); }
  Tensor<T> dagger(Tensor<T> a) const { return a.dagger(); }
};

/// Structure-preserving valuation of diagrams in tensors: atoms to shapes
/// (reversal on odd windings), boxes to tensors, cups and caps to pairings.
template <typename T>
class TensorFunctor {
 public:
  using ObT = Dim;
  using ArrT = Tensor<T>;
  using Hook = std::function<std::optional<Tensor<T>>(const Box&)>;

  TensorFunctor() = default;
  TensorFunctor(std::map<Ob, Dim> ob, std::map<Box, Tensor<T>> ar)
      : ob_(std::move(ob)), ar_(std::move(ar)) {
    for (const auto& [atom, dim] : ob_) {
      if (atom.z() != 0) {
        throw ValidationError("object map must be given on winding-zero "
                              "atoms, got " + atom.token());
      }
    }
    for (const auto& [box, image] : ar_) {
      try {
        if (map_ty(*this, box.dom()) != image.dom() ||
            map_ty(*this, box.cod()) != image.cod()) {
          throw ShapeError("tensor for box \"" + box.name() +
                           "\" has shape " + image.dom().str() + " -> " +
                           image.cod().str() +
                           ", inconsistent with the object map");
        }
      } catch (const MappingError&) {
        // unmapped atoms are reported at application time
      }
    }
  }

  void set_named_array(const std::string& box_name, std::vector<T> array) {
    named_[box_name] = std::move(array);
  }
  void set_fallback(Hook hook) { fallback_ = std::move(hook); }

  Dim unit() const { return Dim(); }
  Dim tensor_ob(Dim a, Dim b) const { return a.tensor(b); }

  Dim map_atom(const Ob& atom) const {
    auto it = ob_.find(Ob(atom.name()));
    if (it == ob_.end()) {
      throw MappingError("no dimension for atom " + atom.token());
    }
    // adjoints of shapes are list reversal, so only parity matters
    return atom.z() % 2 == 0 ? it->second : it->second.reversed();
  }

  Tensor<T> id(const Dim& d) const { return Tensor<T>::identity(d); }
  Tensor<T> then(Tensor<T> a, Tensor<T> b) const { return a.then(b); }
  Tensor<T> tensor(Tensor<T> a, Tensor<T> b) const { return a.tensor(b); }

  Tensor<T> box_image(const Box& box) const {
    switch (box.kind()) {
      case BoxKind::cup:
        return Tensor<T>::cups(map_atom(box.dom()[0]));
      case BoxKind::cap:
        return Tensor<T>::caps(map_atom(box.cod()[0]));
      case BoxKind::swap_wires: {
        Dim a = map_atom(box.dom()[0]);
        Dim b = map_atom(box.dom()[1]);
        const std::size_t an = a.total();
        const std::size_t bn = b.total();
        std::vector<T> data(an * bn * bn * an, Semiring<T>::zero());
        for (std::size_t i = 0; i < an; ++i) {
          for (std::size_t j = 0; j < bn; ++j) {
            data[(i * bn + j) * (bn * an) + (j * an + i)] = Semiring<T>::one();
          }
        }
        return Tensor<T>(a.tensor(b), b.tensor(a), std::move(data));
      }
      case BoxKind::copy_wires: {
        Dim d = box.is_dagger() ? map_atom(box.cod()[0])
                                : map_atom(box.dom()[0]);
        const std::size_t n = d.total();
        std::vector<T> data(n * n * n, Semiring<T>::zero());
        for (std::size_t i = 0; i < n; ++i) {
          data[i * (n * n) + i * n + i] = Semiring<T>::one();
        }
        // the merge spider (daggered copy) has the same flat entries
        return box.is_dagger()
                   ? Tensor<T>(d.tensor(d), d, std::move(data))
                   : Tensor<T>(d, d.tensor(d), std::move(data));
      }
      case BoxKind::delete_wires: {
        Dim d = box.is_dagger() ? map_atom(box.cod()[0])
                                : map_atom(box.dom()[0]);
        std::size_t n = d.total();
        std::vector<T> ones(n, Semiring<T>::one());
        return box.is_dagger() ? Tensor<T>(Dim(), d, std::move(ones))
                               : Tensor<T>(d, Dim(), std::move(ones));
      }
      default:
        break;
    }
    if (auto it = ar_.find(box); it != ar_.end()) return it->second;
    if (box.is_dagger()) {
      Box base = box.dagger();
      if (auto it = ar_.find(base); it != ar_.end()) {
        return it->second.dagger();
      }
      if (auto named = named_image(base)) return named->dagger();
    }
    if (auto named = named_image(box)) return *named;
    if (fallback_) {
      if (auto image = fallback_(box)) return *image;
    }
    throw MappingError("no tensor for box \"" + box.name() + "\" : " +
                       box.dom().str() + " -> " + box.cod().str());
  }

  Tensor<T> operator()(const Diagram& d) const {
    return apply_functor(*this, d);
  }

  const std::map<Ob, Dim>& ob() const { return ob_; }
  const std::map<Box, Tensor<T>>& ar() const { return ar_; }

 private:
  std::optional<Tensor<T>> named_image(const Box& box) const {
    auto it = named_.find(box.name());
    if (it == named_.end()) return std::nullopt;
    Dim dom = map_ty(*this, box.dom());
    Dim cod = map_ty(*this, box.cod());
    if (it->second.size() != dom.total() * cod.total()) {
      throw ShapeError("array for box \"" + box.name() + "\" has length " +
                       std::to_string(it->second.size()) +
                       ", expected shape " + dom.str() + " -> " + cod.str());
    }
    return Tensor<T>(std::move(dom), std::move(cod), it->second);
  }

  std::map<Ob, Dim> ob_;
  std::map<Box, Tensor<T>> ar_;
  std::map<std::string, std::vector<T>> named_;
  Hook fallback_;
};

}  // namespace dk::tensor
