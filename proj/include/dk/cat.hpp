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

#include <concepts>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dk/errors.hpp"

namespace dk::cat {

using Json = nlohmann::json;

/// Object of a free category; equality is equality of names. Names are
/// arbitrary JSON values so structured labels work.
class Ob {
 public:
  Ob() = default;
  explicit Ob(Json name) : name_(std::move(name)) {}
  explicit Ob(const char* name) : name_(name) {}
  explicit Ob(const std::string& name) : name_(name) {}

  const Json& name() const { return name_; }
  std::string str() const { return name_.is_string() ? name_.get<std::string>() : name_.dump(); }

  friend bool operator==(const Ob& a, const Ob& b) { return a.name_ == b.name_; }
  friend bool operator!=(const Ob& a, const Ob& b) { return !(a == b); }
  friend bool operator<(const Ob& a, const Ob& b) { return a.name_ < b.name_; }

 private:
  Json name_;
};

/// Generating arrow: named, typed, optionally daggered, with an opaque
/// payload that participates in equality but is never interpreted here.
class Box {
 public:
  Box(std::string name, Ob dom, Ob cod, Json data = nullptr,
      bool dagger = false)
      : name_(std::move(name)),
        dom_(std::move(dom)),
        cod_(std::move(cod)),
        data_(std::move(data)),
        dagger_(dagger) {}

  const std::string& name() const { return name_; }
  const Ob& dom() const { return dom_; }
  const Ob& cod() const { return cod_; }
  const Json& data() const { return data_; }
  bool is_dagger() const { return dagger_; }

  Box dagger() const { return Box(name_, cod_, dom_, data_, !dagger_); }

  friend bool operator==(const Box& a, const Box& b) {
    return a.name_ == b.name_ && a.dom_ == b.dom_ && a.cod_ == b.cod_ &&
           a.data_ == b.data_ && a.dagger_ == b.dagger_;
  }
  friend bool operator!=(const Box& a, const Box& b) { return !(a == b); }
  friend bool operator<(const Box& a, const Box& b) {
    if (a.name_ != b.name_) return a.name_ < b.name_;
    if (a.dom_ != b.dom_) return a.dom_ < b.dom_;
    if (a.cod_ != b.cod_) return a.cod_ < b.cod_;
    if (a.dagger_ != b.dagger_) return a.dagger_ < b.dagger_;
    return a.data_ < b.data_;
  }

 private:
  std::string name_;
  Ob dom_;
  Ob cod_;
  Json data_;
  bool dagger_ = false;
};

/// Arrow of the free category: a composable list of boxes. The empty list is
/// the identity; composition is concatenation, checked at construction.
class Arrow {
 public:
  static Arrow id(Ob x) {
    Ob cod = x;
    return Arrow(std::move(x), std::move(cod), {});
  }

  static Arrow from_box(Box b) {
    Ob dom = b.dom();
    Ob cod = b.cod();
    return Arrow(std::move(dom), std::move(cod), {std::move(b)});
  }

  Arrow(Ob dom, Ob cod, std::vector<Box> boxes)
      : dom_(std::move(dom)), cod_(std::move(cod)), boxes_(std::move(boxes)) {
    const Ob* at = &dom_;
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
      if (boxes_[i].dom() != *at) {
        throw CompositionError("box " + std::to_string(i) + " (" +
                               boxes_[i].name() + ") expects domain " +
                               boxes_[i].dom().str() + ", found " + at->str());
      }
      at = &boxes_[i].cod();
    }
    if (*at != cod_) {
      throw CompositionError("arrow declares codomain " + cod_.str() +
                             ", boxes end at " + at->str());
    }
  }

  const Ob& dom() const { return dom_; }
  const Ob& cod() const { return cod_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  std::size_t size() const { return boxes_.size(); }
  const Box& operator[](std::size_t i) const { return boxes_[i]; }

  Arrow then(const Arrow& other) const {
    if (cod_ != other.dom_) {
      throw CompositionError("cannot compose: codomain " + cod_.str() +
                             " does not match domain " + other.dom_.str());
    }
    std::vector<Box> boxes = boxes_;
    boxes.insert(boxes.end(), other.boxes_.begin(), other.boxes_.end());
    return Arrow(dom_, other.cod_, std::move(boxes));
  }

  Arrow dagger() const {
    std::vector<Box> boxes;
    boxes.reserve(boxes_.size());
    for (std::size_t i = boxes_.size(); i-- > 0;) {
      boxes.push_back(boxes_[i].dagger());
    }
    return Arrow(cod_, dom_, std::move(boxes));
  }

  /// Composite of boxes [i, j) with inferred endpoints.
  Arrow slice(std::size_t i, std::size_t j) const {
    if (i > j || j > boxes_.size()) {
      throw CompositionError("slice [" + std::to_string(i) + ", " +
                             std::to_string(j) + ") out of range for " +
                             std::to_string(boxes_.size()) + " boxes");
    }
    Ob dom = i < boxes_.size() ? boxes_[i].dom() : cod_;
    Ob cod = j > i ? boxes_[j - 1].cod() : dom;
    return Arrow(std::move(dom), std::move(cod),
                 std::vector<Box>(boxes_.begin() + static_cast<long>(i),
                                  boxes_.begin() + static_cast<long>(j)));
  }

  friend bool operator==(const Arrow& a, const Arrow& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.boxes_ == b.boxes_;
  }
  friend bool operator!=(const Arrow& a, const Arrow& b) { return !(a == b); }

 private:
  Ob dom_;
  Ob cod_;
  std::vector<Box> boxes_;
};

/// Free functor: a finite image of the signature, with any codomain category
/// that provides identities and composition through `Target`:
///
///   using ObT  = ...;
///   using ArrT = ...;
///   ArrT id(const ObT&) const;
///   ArrT then(ArrT, ArrT) const;
///   ArrT dagger(ArrT) const;       // optional
template <typename Target>
class Functor {
 public:
  Functor(std::map<Ob, typename Target::ObT> ob,
          std::map<Box, typename Target::ArrT> ar, Target target = {})
      : ob_(std::move(ob)), ar_(std::move(ar)), target_(std::move(target)) {
    // box images must sit over the object images, when both are known and
    // the target exposes its endpoints
    if constexpr (requires(const typename Target::ArrT& a,
                           const typename Target::ObT& o) {
                    { a.dom() == o } -> std::convertible_to<bool>;
                    { a.cod() == o } -> std::convertible_to<bool>;
                  }) {
      for (const auto& [box, image] : ar_) {
        auto dom_it = ob_.find(box.dom());
        if (dom_it != ob_.end() && !(image.dom() == dom_it->second)) {
          throw CompositionError("image of \"" + box.name() +
                                 "\" does not start at the image of its "
                                 "domain");
        }
        auto cod_it = ob_.find(box.cod());
        if (cod_it != ob_.end() && !(image.cod() == cod_it->second)) {
          throw CompositionError("image of \"" + box.name() +
                                 "\" does not end at the image of its "
                                 "codomain");
        }
      }
    }
  }

  typename Target::ObT map_ob(const Ob& x) const {
    auto it = ob_.find(x);
    if (it == ob_.end()) {
      throw MappingError("no image for object " + x.str());
    }
    return it->second;
  }

  typename Target::ArrT map_box(const Box& box) const {
    if (auto it = ar_.find(box); it != ar_.end()) return it->second;
    if constexpr (requires(Target t, typename Target::ArrT a) {
                    t.dagger(std::move(a));
                  }) {
      if (box.is_dagger()) {
        if (auto it = ar_.find(box.dagger()); it != ar_.end()) {
          return target_.dagger(it->second);
        }
      }
    }
    throw MappingError("no image for box \"" + box.name() + "\" : " +
                       box.dom().str() + " -> " + box.cod().str());
  }

  typename Target::ArrT operator()(const Arrow& f) const {
    auto acc = target_.id(map_ob(f.dom()));
    for (const Box& box : f.boxes()) {
      acc = target_.then(std::move(acc), map_box(box));
    }
    return acc;
  }

 private:
  std::map<Ob, typename Target::ObT> ob_;
  std::map<Box, typename Target::ArrT> ar_;
  Target target_;
};

/// The free category as its own functor target.
struct ArrowTarget {
  using ObT = Ob;
  using ArrT = Arrow;
  Arrow id(const Ob& x) const { return Arrow::id(x); }
  Arrow then(Arrow a, Arrow b) const { return a.then(b); }
  Arrow dagger(Arrow a) const { return a.dagger(); }
};

using ArrowFunctor = Functor<ArrowTarget>;

}  // namespace dk::cat
