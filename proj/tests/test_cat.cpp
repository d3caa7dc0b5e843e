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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dk/cartesian.hpp"
#include "dk/cat.hpp"
#include "dk/tensor.hpp"
#include "gen.hpp"

using namespace dk::cat;

namespace {

struct Sig {
  Ob x{"x"}, y{"y"}, z{"z"};
  Box f{"f", x, y};
  Box g{"g", y, z};
  Box h{"h", z, x};
};

}  // namespace

TEST_CASE("identity arrows are empty and typed") {
  Sig s;
  CHECK(Arrow::id(s.x).boxes().empty());
  CHECK(Arrow::id(s.x).dom() == s.x);
  CHECK(Arrow::id(s.x).cod() == s.x);
}

TEST_CASE("composition concatenates and checks endpoints") {
  Sig s;
  Arrow fg = Arrow::from_box(s.f).then(Arrow::from_box(s.g));
  CHECK(fg.dom() == s.x);
  CHECK(fg.cod() == s.z);
  CHECK(fg.size() == 2);
  CHECK(fg[0] == s.f);
  CHECK(fg[1] == s.g);

  CHECK_THROWS_AS(Arrow::from_box(s.f).then(Arrow::from_box(s.h)),
                  dk::CompositionError);
  CHECK_THROWS_AS(Arrow(s.x, s.z, {s.f, s.h}), dk::CompositionError);
}

TEST_CASE("unitality and associativity on random composable chains") {
  dktest::Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Arrow a = dktest::random_arrow(rng, 3);
    CHECK(Arrow::id(a.dom()).then(a) == a);
    CHECK(a.then(Arrow::id(a.cod())) == a);

    // extend with two more composable pieces for associativity
    int counter = 1000 + trial * 10;
    Arrow b = [&] {
      dk::cat::Ob mid = a.cod();
      std::vector<Box> boxes = {Box("g" + std::to_string(counter), mid, mid)};
      return Arrow(mid, mid, std::move(boxes));
    }();
    Arrow c = b;
    CHECK(a.then(b).then(c) == a.then(b.then(c)));
  }
}

TEST_CASE("dagger is involutive, contravariant and identity-on-objects") {
  dktest::Rng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    Arrow a = dktest::random_arrow(rng, 4);
    CHECK(a.dagger().dagger() == a);
    CHECK(a.dagger().dom() == a.cod());
    CHECK(a.dagger().cod() == a.dom());

    Arrow b = [&] {
      dk::cat::Ob mid = a.cod();
      std::vector<Box> boxes = {
          Box("k" + std::to_string(trial), mid, dk::cat::Ob("a"))};
      return Arrow(mid, dk::cat::Ob("a"), std::move(boxes));
    }();
    CHECK(a.then(b).dagger() == b.dagger().then(a.dagger()));
  }
  Sig s;
  CHECK(Arrow::id(s.x).dagger() == Arrow::id(s.x));
}

TEST_CASE("slices recompose") {
  dktest::Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Arrow a = dktest::random_arrow(rng, 5);
    CHECK(a.slice(0, a.size()) == a);
    if (a.size() > 0) {
      CHECK(a.slice(0, 1).then(a.slice(1, a.size())) == a);
      std::size_t i = rng.below(a.size() + 1);
      Arrow at = a.slice(i, i);
      CHECK(at.boxes().empty());
      CHECK(at.dom() == (i < a.size() ? a[i].dom() : a.cod()));
    }
  }
  Sig s;
  CHECK_THROWS_AS(Arrow::from_box(s.f).slice(0, 2), dk::CompositionError);
}

TEST_CASE("free functors act by substitution") {
  // the image of f >> g under ob = {x: y, y: z, z: x}, ar = {f: g, g: h}
  Sig s;
  Functor<ArrowTarget> functor(
      {{s.x, s.y}, {s.y, s.z}, {s.z, s.x}},
      {{s.f, Arrow::from_box(s.g)}, {s.g, Arrow::from_box(s.h)}});
  Arrow fg = Arrow::from_box(s.f).then(Arrow::from_box(s.g));
  Arrow image = functor(fg);
  CHECK(image == Arrow::from_box(s.g).then(Arrow::from_box(s.h)));
  CHECK(functor(Arrow::from_box(s.f)).then(functor(Arrow::from_box(s.g))) ==
        image);

  CHECK(functor(Arrow::id(s.x)) == Arrow::id(s.y));
  CHECK_THROWS_AS(functor(Arrow::from_box(s.h)), dk::MappingError);
}

TEST_CASE("functors into tuple functions") {
  Sig s;
  using dk::cartesian::Fn;
  using dk::cartesian::Value;
  Fn forty_two{0, 1, [](const std::vector<Value>&) {
                 return std::vector<Value>{std::int64_t{42}};
               }};
  Fn succ_pair{1, 2, [](const std::vector<Value>& args) {
                 auto n = std::get<std::int64_t>(args[0]);
                 return std::vector<Value>{n, n + 1};
               }};
  Functor<dk::cartesian::FnTarget> functor(
      {{s.x, 0}, {s.y, 1}, {s.z, 2}},
      {{s.f, forty_two}, {s.g, succ_pair}});
  auto out = functor(Arrow::from_box(s.f).then(Arrow::from_box(s.g)))({});
  REQUIRE(out.size() == 2);
  CHECK(out[0] == Value{std::int64_t{42}});
  CHECK(out[1] == Value{std::int64_t{43}});
}

TEST_CASE("functors into tensors") {
  Sig s;
  using dk::tensor::Dim;
  using dk::tensor::TensorReal;
  Functor<dk::tensor::MatTarget<double>> functor(
      {{s.x, Dim{1}}, {s.y, Dim{2}}, {s.z, Dim{2}}},
      {{s.f, TensorReal(Dim{1}, Dim{2}, {0, 1})},
       {s.g, TensorReal(Dim{2}, Dim{2}, {0, 1, 1, 0})}});
  TensorReal image = functor(Arrow::from_box(s.f).then(Arrow::from_box(s.g)));
  CHECK(image == TensorReal(Dim(), Dim{2}, {1, 0}));
}

TEST_CASE("daggered boxes fall back to the daggered image") {
  Sig s;
  using dk::tensor::Dim;
  using dk::tensor::TensorReal;
  Functor<dk::tensor::MatTarget<double>> functor(
      {{s.x, Dim{2}}, {s.y, Dim{2}}},
      {{s.f, TensorReal(Dim{2}, Dim{2}, {1, 2, 3, 4})}});
  TensorReal image = functor(Arrow::from_box(s.f.dagger()));
  CHECK(image == TensorReal(Dim{2}, Dim{2}, {1, 3, 2, 4}));
}

TEST_CASE("functor images must sit over the object images") {
  Sig s;
  using dk::tensor::Dim;
  using dk::tensor::TensorReal;
  CHECK_THROWS_AS(
      (Functor<dk::tensor::MatTarget<double>>(
          {{s.x, Dim{2}}, {s.y, Dim{2}}},
          {{s.f, TensorReal(Dim{3}, Dim{2}, std::vector<double>(6, 0.0))}})),
      dk::CompositionError);
}

TEST_CASE("object names may be structured labels") {
  Ob tagged(dk::Json{{"kind", "pair"}, {"items", {1, 2}}});
  Ob same(dk::Json{{"items", {1, 2}}, {"kind", "pair"}});
  CHECK(tagged == same);
  CHECK(Ob("x") != Ob("y"));
}
