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

#include "dk/circuit.hpp"
#include "dk/drawing.hpp"
#include "dk/json_io.hpp"
#include "gen.hpp"

using namespace dk;
namespace io = dk::io;

TEST_CASE("atoms and types round-trip, with bare names at winding zero") {
  CHECK(io::encode_atom(Ob("x")) == Json("x"));
  CHECK(io::encode_atom(Ob("n", -1)) == Json::array({"n", -1}));
  CHECK(io::decode_atom(Json("x")) == Ob("x"));
  CHECK(io::decode_atom(Json::array({"n", 2})) == Ob("n", 2));

  Ty t{Ob("x"), Ob("n", 1)};
  CHECK(io::decode_ty(io::encode(t)) == t);
  CHECK(io::encode(Ty{Ob("x"), Ob("y")}) ==
        Json{{"ty", Json::array({"x", "y"})}});
  CHECK(io::decode_ty(Json{{"ty", 3}}) == Ty(PRO(3)));
}

TEST_CASE("the arrow schema follows the documented field names") {
  cat::Ob x("x"), y("y");
  cat::Box f("f", x, y, Json{{"note", 1}}, false);
  cat::Arrow arrow = cat::Arrow::from_box(f);
  Json j = io::encode(arrow);
  REQUIRE(j.contains("arrow"));
  CHECK(j["arrow"].contains("dom"));
  CHECK(j["arrow"].contains("cod"));
  CHECK(j["arrow"].contains("boxes"));
  CHECK(j["arrow"]["boxes"][0]["box"].contains("name"));
  CHECK(j["arrow"]["boxes"][0]["box"].contains("data"));
  CHECK(j["arrow"]["boxes"][0]["box"].contains("dagger"));
  CHECK(io::decode_arrow(j) == arrow);
}

TEST_CASE("random arrows round-trip") {
  dktest::Rng rng(81);
  for (int trial = 0; trial < 300; ++trial) {
    cat::Arrow arrow = dktest::random_arrow(rng, 5);
    CHECK(io::decode_arrow(io::encode(arrow)) == arrow);
  }
}

TEST_CASE("random diagrams round-trip, layers recomputed") {
  dktest::Rng rng(82);
  for (int trial = 0; trial < 300; ++trial) {
    dktest::DiagramOpts opts;
    opts.rigid = trial % 2 == 1;
    Diagram d = dktest::random_diagram(rng, opts);
    Json j = io::encode(d);
    CHECK_FALSE(j["diagram"].contains("layers"));
    CHECK(io::decode_diagram(j) == d);
  }
}

TEST_CASE("circuit boxes round-trip through their kind keys") {
  std::vector<Box> boxes = {
      Box::gate("H", 1),
      Box::gate("CX", 2),
      Box::gate("CX", 2).dagger(),
      Box::rotation('x', 0.25),
      Box::rotation('z', -1.5),
      Box::gate("u", 1, {1, 0, 0, std::complex<double>(0, 1)}),
      Box::ket({0, 1}),
      Box::bra({1}),
      Box::scalar({0.5, -0.25}),
      Box::cup(Ob("x"), Ob("x", 1)),
      Box::cap(Ob("x"), Ob("x", -1)),
      Box::swap(Ob("x"), Ob("y")),
      Box::copy(Ob("x")),
      Box::copy(Ob("x")).dagger(),
      Box::discard(Ob("x")),
      Box::discard(Ob("x")).dagger(),
      Box("f", Ty{Ob("x")}, Ty{Ob("y")}, Json{{"weight", 0.5}}, true),
  };
  for (const Box& box : boxes) {
    CAPTURE(box.name());
    CHECK(io::decode_box(io::encode(box)) == box);
  }
  CHECK(io::encode(Box::ket({0, 1})) == Json{{"ket", {0, 1}}});
  CHECK(io::encode(Box::scalar({1, 0}))["scalar"] == Json::array({1.0, 0.0}));
}

TEST_CASE("tensors of every semiring round-trip") {
  dktest::Rng rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    tensor::Dim dom = dktest::random_dim(rng, 2, 8);
    tensor::Dim cod = dktest::random_dim(rng, 2, 8);
    tensor::AnyTensor values[3] = {
        dktest::random_tensor<bool>(rng, dom, cod),
        dktest::random_tensor<double>(rng, dom, cod),
        dktest::random_tensor<std::complex<double>>(rng, dom, cod)};
    for (const auto& t : values) {
      Json j = io::encode(t);
      CHECK(io::decode_tensor(j) == t);
      CHECK(j["tensor"]["semiring"].get<std::string>() ==
            tensor::semiring_name(t));
    }
  }
}

TEST_CASE("grammars round-trip with explicit winding integers") {
  rigid::PregroupGrammar grammar(
      {"one", "plus"}, {"n", "s"}, Ob("s"),
      {{"one", Ty{Ob("n")}},
       {"plus", Ty{Ob("n", 1), Ob("n"), Ob("n", -1)}}});
  Json j = io::encode(grammar);
  CHECK(j["grammar"]["dict"][1][1][0] == Json::array({"n", 1}));
  CHECK(j["grammar"]["dict"][0][1][0] == Json::array({"n", 0}));
  CHECK(io::decode_grammar(j) == grammar);
}

TEST_CASE("layouts round-trip") {
  dktest::Rng rng(84);
  for (int trial = 0; trial < 100; ++trial) {
    dktest::DiagramOpts opts;
    opts.rigid = trial % 3 == 0;
    Diagram d = dktest::random_diagram(rng, opts);
    drawing::PlanarLayout layout = drawing::draw(d);
    CHECK(io::decode_layout(io::encode(layout)) == layout);
  }
}

TEST_CASE("tensor functor JSON evaluates a two-box chain") {
  Json j = {
      {"tensor_functor",
       {{"semiring", "real"},
        {"ob", {{"x", Json::array()}, {"y", {2}}, {"z", {2}}}},
        {"ar", {{"f", {0, 1}}, {"g", {0, 1, 1, 0}}}}}}};
  auto functor = io::decode_functor(j);
  Box f("f", Ty{Ob("x")}, Ty{Ob("y")});
  Box g("g", Ty{Ob("y")}, Ty{Ob("z")});
  Diagram d = Diagram::from_box(f).then(Diagram::from_box(g));
  auto result = io::apply_any_functor(functor, d);
  auto tensor_result =
      std::get<tensor::TensorReal>(std::get<tensor::AnyTensor>(result));
  CHECK(tensor_result ==
        tensor::TensorReal(tensor::Dim(), tensor::Dim{2}, {1, 0}));
}

TEST_CASE("function functor JSON resolves builtins") {
  Json j = {{"function_functor",
             {{"ob", {{"n", 1}, {"one", 0}, {"plus", 0}, {"two", 0}}},
              {"ar", {{"one", "const:1"}, {"two", "const:2"},
                      {"plus", "add"}}}}}};
  auto functor = io::decode_functor(j);
  const auto& ff = std::get<cartesian::FunctionFunctor>(functor);
  Box one("one", Ty(), Ty{Ob("n")});
  auto out = ff(Diagram::from_box(one))({});
  CHECK(out == std::vector<cartesian::Value>{
                   cartesian::Value{std::int64_t{1}}});
}

TEST_CASE("malformed inputs raise decode errors") {
  CHECK_THROWS_AS(io::parse_json("{oops"), DecodeError);
  CHECK_THROWS_AS(io::decode_value(Json{{"mystery", 1}}), DecodeError);
  CHECK_THROWS_AS(io::decode_value(Json(3)), DecodeError);
  CHECK_THROWS_AS(io::decode_diagram(Json{{"diagram", {{"dom", ""}}}}),
                  DecodeError);
  // ill-typed diagram: box expects x, domain has y
  Json bad = {{"diagram",
               {{"dom", {{"ty", {"y"}}}},
                {"cod", {{"ty", {"y"}}}},
                {"boxes", {Json{{"box",
                                 {{"name", "f"},
                                  {"dom", {{"ty", {"x"}}}},
                                  {"cod", {{"ty", {"y"}}}},
                                  {"data", nullptr},
                                  {"dagger", false}}}}}},
                {"offsets", {0}}}}};
  CHECK_THROWS_AS(io::decode_diagram(bad), DecodeError);
  CHECK_THROWS_AS(
      io::decode_tensor(Json{{"tensor",
                              {{"dom", {2}},
                               {"cod", Json::array()},
                               {"semiring", "real"},
                               {"array", {1.0}}}}}),
      DecodeError);
}

TEST_CASE("decode_value dispatches on the single top-level key") {
  CHECK(io::decode_value(io::encode(Diagram::id(Ty{Ob("x")}))).kind ==
        io::ValueKind::diagram);
  CHECK(io::decode_value(io::encode(tensor::AnyTensor{
                             tensor::TensorReal::scalar(1.0)}))
            .kind == io::ValueKind::tensor);
}
