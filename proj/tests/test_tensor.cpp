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

#include <complex>

#include "dk/functor.hpp"
#include "dk/tensor.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace dk;
using namespace dk::tensor;
using C = std::complex<double>;

TEST_CASE("unit entries vanish from shapes") {
  CHECK(Dim{1} == Dim());
  CHECK(Dim{1, 2, 1, 3} == Dim{2, 3});
  CHECK(Dim().total() == 1);
  CHECK(Dim{2, 3}.total() == 6);
  CHECK(Dim{2, 3}.tensor(Dim{4}) == Dim{2, 3, 4});
  CHECK(Dim{2, 3}.reversed() == Dim{3, 2});
  CHECK_THROWS_AS(Dim{0}, ShapeError);
}

TEST_CASE("scalars and identities") {
  auto s = TensorReal::scalar(2.5);
  CHECK(s.dom() == Dim());
  CHECK(s.cod() == Dim());
  CHECK(s.array().size() == 1);
  auto id = TensorReal::identity(Dim{3});
  CHECK(id.at(1, 1) == 1.0);
  CHECK(id.at(1, 2) == 0.0);
  CHECK_THROWS_AS(TensorReal(Dim{2}, Dim{2}, {1.0}), ShapeError);
}

TEST_CASE("contraction agrees with the naive triple loop") {
  dktest::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    Dim a = dktest::random_dim(rng, 2, 8);
    Dim b = dktest::random_dim(rng, 2, 8);
    Dim c = dktest::random_dim(rng, 2, 8);
    auto lhs = dktest::random_tensor<double>(rng, a, b);
    auto rhs = dktest::random_tensor<double>(rng, b, c);
    auto expected = dktest::naive_matmul(lhs.array(), rhs.array(), a.total(),
                                         b.total(), c.total());
    auto got = lhs.then(rhs);
    CHECK(got.dom() == a);
    CHECK(got.cod() == c);
    CHECK(got.approx_equal(TensorReal(a, c, expected), 1e-9));
  }
}

TEST_CASE("boolean contraction is exact relational composition") {
  dktest::Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    Dim a = dktest::random_dim(rng, 1, 5);
    Dim b = dktest::random_dim(rng, 1, 5);
    Dim c = dktest::random_dim(rng, 1, 5);
    auto lhs = dktest::random_tensor<bool>(rng, a, b);
    auto rhs = dktest::random_tensor<bool>(rng, b, c);
    auto expected = dktest::naive_matmul(lhs.array(), rhs.array(), a.total(),
                                         b.total(), c.total());
    CHECK(lhs.then(rhs).array() == expected);
  }
}

TEST_CASE("contraction rejects mismatched boundaries") {
  auto lhs = TensorReal::identity(Dim{2});
  auto rhs = TensorReal::identity(Dim{3});
  CHECK_THROWS_AS(lhs.then(rhs), ShapeError);
}

TEST_CASE("unitality: composing with identity preserves the tensor") {
  dktest::Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    Dim a = dktest::random_dim(rng, 2, 8);
    Dim b = dktest::random_dim(rng, 2, 8);
    auto t = dktest::random_tensor<double>(rng, a, b);
    CHECK(t.then(TensorReal::identity(b)) == t);
    CHECK(TensorReal::identity(a).then(t) == t);
  }
}

TEST_CASE("kronecker product agrees with the flattened-matrix oracle") {
  dktest::Rng rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    Dim a = dktest::random_dim(rng, 2, 6);
    Dim b = dktest::random_dim(rng, 2, 6);
    Dim c = dktest::random_dim(rng, 2, 6);
    Dim d = dktest::random_dim(rng, 2, 6);
    auto lhs = dktest::random_tensor<double>(rng, a, b);
    auto rhs = dktest::random_tensor<double>(rng, c, d);
    auto expected = dktest::naive_kron(lhs.array(), rhs.array(), a.total(),
                                       b.total(), c.total(), d.total());
    auto got = lhs.tensor(rhs);
    CHECK(got.dom() == a.tensor(c));
    CHECK(got.cod() == b.tensor(d));
    CHECK(got.array() == expected);
  }
}

TEST_CASE("kronecker of identities is the reshaped identity") {
  auto got = TensorReal::identity(Dim{2}).tensor(TensorReal::identity(Dim{2}));
  CHECK(got.approx_equal(TensorReal::identity(Dim{2, 2}), 0.0));

  auto scaled = TensorReal::scalar(2.0).tensor(TensorReal::identity(Dim{3}));
  std::vector<double> twice(9, 0.0);
  for (int i = 0; i < 3; ++i) twice[static_cast<std::size_t>(i * 3 + i)] = 2.0;
  CHECK(scaled == TensorReal(Dim{3}, Dim{3}, twice));
}

TEST_CASE("cups flatten to the reshaped identity") {
  auto cups2 = TensorReal::cups(Dim{2});
  CHECK(cups2.dom() == Dim{2, 2});
  CHECK(cups2.cod() == Dim());
  CHECK(cups2.array() == std::vector<double>{1, 0, 0, 1});

  auto caps0 = TensorReal::caps(Dim());
  CHECK(caps0 == TensorReal::scalar(1.0));
}

TEST_CASE("snake contractions collapse to identities, exactly") {
  for (Dim d : {Dim{3}, Dim{2, 2}, Dim{4, 2, 2}, Dim{8, 8}, Dim{2, 2, 2, 2}}) {
    // (caps @ id) then (id @ cups) == id
    auto caps_side = TensorReal::caps(d).tensor(TensorReal::identity(d));
    auto cups_side = TensorReal::identity(d).tensor(TensorReal::cups(d.reversed()));
    CHECK(caps_side.then(cups_side) == TensorReal::identity(d));
  }
}

TEST_CASE("dagger is the conjugate transpose") {
  dktest::Rng rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = dktest::random_tensor<C>(rng, dktest::random_dim(rng, 2, 6),
                                      dktest::random_dim(rng, 2, 6));
    CHECK(t.dagger().dagger() == t);
  }

  auto real = TensorReal(Dim{2}, Dim{3}, {1, 2, 3, 4, 5, 6});
  CHECK(real.dagger() == TensorReal(Dim{3}, Dim{2}, {1, 4, 2, 5, 3, 6}));

  TensorComplex m(Dim{2}, Dim{2}, {C(0, 1), C(0, 0), C(0, 0), C(1, 0)});
  TensorComplex expected(Dim{2}, Dim{2},
                         {C(0, -1), C(0, 0), C(0, 0), C(1, 0)});
  CHECK(m.dagger() == expected);
}

TEST_CASE("the interchange law holds numerically") {
  dktest::Rng rng(46);
  for (int trial = 0; trial < 50; ++trial) {
    Dim a = dktest::random_dim(rng, 1, 4);
    Dim b = dktest::random_dim(rng, 1, 4);
    Dim c = dktest::random_dim(rng, 1, 4);
    Dim d = dktest::random_dim(rng, 1, 4);
    auto f = dktest::random_tensor<double>(rng, a, b);
    auto g = dktest::random_tensor<double>(rng, c, d);
    auto route_one =
        f.tensor(TensorReal::identity(c)).then(TensorReal::identity(b) .tensor(g));
    auto route_two =
        TensorReal::identity(a).tensor(g).then(f.tensor(TensorReal::identity(d)));
    auto direct = f.tensor(g);
    CHECK(route_one.approx_equal(direct, 1e-9));
    CHECK(route_two.approx_equal(direct, 1e-9));
  }
}

TEST_CASE("contraction is associative within tolerance") {
  dktest::Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    Dim a = dktest::random_dim(rng, 1, 5);
    Dim b = dktest::random_dim(rng, 1, 5);
    Dim c = dktest::random_dim(rng, 1, 5);
    Dim d = dktest::random_dim(rng, 1, 5);
    auto f = dktest::random_tensor<double>(rng, a, b);
    auto g = dktest::random_tensor<double>(rng, b, c);
    auto h = dktest::random_tensor<double>(rng, c, d);
    CHECK(f.then(g).then(h).approx_equal(f.then(g.then(h)), 1e-9));
  }
}

TEST_CASE("semiring laws on sampled elements") {
  dktest::Rng rng(48);
  auto check_laws = [&](auto tag) {
    using T = decltype(tag);
    using S = Semiring<T>;
    for (int trial = 0; trial < 100; ++trial) {
      T a, b, c;
      if constexpr (std::is_same_v<T, bool>) {
        a = rng.chance(0.5); b = rng.chance(0.5); c = rng.chance(0.5);
      } else if constexpr (std::is_same_v<T, double>) {
        a = rng.real(); b = rng.real(); c = rng.real();
      } else {
        a = T(rng.real(), rng.real());
        b = T(rng.real(), rng.real());
        c = T(rng.real(), rng.real());
      }
      CHECK(S::close(S::add(a, b), S::add(b, a), 1e-12));
      CHECK(S::close(S::mul(a, b), S::mul(b, a), 1e-12));
      CHECK(S::close(S::add(S::add(a, b), c), S::add(a, S::add(b, c)), 1e-9));
      CHECK(S::close(S::mul(S::mul(a, b), c), S::mul(a, S::mul(b, c)), 1e-9));
      CHECK(S::close(S::mul(a, S::add(b, c)),
                     S::add(S::mul(a, b), S::mul(a, c)), 1e-9));
      CHECK(S::close(S::mul(a, S::zero()), S::zero(), 0.0));
      CHECK(S::close(S::add(a, S::zero()), a, 0.0));
      CHECK(S::close(S::mul(a, S::one()), a, 0.0));
    }
  };
  check_laws(false);
  check_laws(0.0);
  check_laws(C{});
}

TEST_CASE("tensor functors map identities to reshaped identities") {
  Ob x{"x"}, y{"y"};
  TensorFunctor<double> functor({{x, Dim{2}}, {y, Dim{3}}}, {});
  auto image = functor(Diagram::id(Ty{x, y}));
  CHECK(image == TensorReal::identity(Dim{2, 3}));
  CHECK_THROWS_AS(functor(Diagram::id(Ty{Ob("v")})), MappingError);
}

TEST_CASE("adjoint atoms map to reversed shapes") {
  Ob x{"x"};
  TensorFunctor<double> functor({{x, Dim{2, 3}}}, {});
  CHECK(functor.map_atom(rigid::left(x)) == Dim{3, 2});
  CHECK(functor.map_atom(rigid::right(x)) == Dim{3, 2});
  CHECK(functor.map_atom(Ob("x", 2)) == Dim{2, 3});
  auto snake = functor(Diagram::id(Ty{rigid::left(x)}));
  CHECK(snake == TensorReal::identity(Dim{3, 2}));
}

TEST_CASE("boolean functors evaluate conjunctive queries by join") {
  // tables R : () -> (A, B) and S : () -> (B, C); the query joins on B and
  // projects it away, which is exactly relational composition
  dktest::Rng rng(49);
  const std::size_t da = 3, db = 4, dc = 3;
  for (int trial = 0; trial < 25; ++trial) {
    std::set<std::pair<std::size_t, std::size_t>> r_set, s_set;
    std::vector<bool> r_data(da * db), s_data(db * dc);
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t k = 0; k < db; ++k) {
        if (rng.chance(0.4)) {
          r_set.insert({i, k});
          r_data[i * db + k] = true;
        }
      }
    }
    for (std::size_t k = 0; k < db; ++k) {
      for (std::size_t j = 0; j < dc; ++j) {
        if (rng.chance(0.4)) {
          s_set.insert({k, j});
          s_data[k * dc + j] = true;
        }
      }
    }

    Ob a{"x"}, b{"y"}, c{"z"};
    Box r_table("R", Ty(), Ty{a, b});
    Box s_table("S", Ty(), Ty{b, c});
    std::map<Ob, Dim> ob{{a, Dim{da}}, {b, Dim{db}}, {c, Dim{dc}}};
    std::map<Box, TensorBool> ar;
    ar.emplace(r_table, TensorBool(Dim(), Dim{da, db}, r_data));
    ar.emplace(s_table, TensorBool(Dim(), Dim{db, dc}, s_data));
    TensorFunctor<bool> functor(std::move(ob), std::move(ar));

    // R @ S then (id_A @ cup_B @ id_C): the middle wires carry B and B^r
    Diagram tables =
        Diagram::from_box(r_table).tensor(Diagram::from_box(s_table));
    // rename the middle pair with a cup: adjust S to produce b^r instead
    Box s_adj("S'", Ty(), Ty{rigid::right(b), c});
    TensorFunctor<bool> functor2(
        {{a, Dim{da}}, {b, Dim{db}}, {c, Dim{dc}}},
        [&] {
          std::map<Box, TensorBool> m;
          m.emplace(r_table, TensorBool(Dim(), Dim{da, db}, r_data));
          m.emplace(s_adj, TensorBool(Dim(), Dim{db, dc}, s_data));
          return m;
        }());
    Diagram query =
        Diagram::from_box(r_table)
            .tensor(Diagram::from_box(s_adj))
            .then(Diagram::id(Ty{a})
                      .tensor(Diagram::from_box(Box::cup(b, rigid::right(b))))
                      .tensor(Diagram::id(Ty{c})));
    auto evaluated = functor2(query);
    REQUIRE(evaluated.cod() == Dim{da, dc});

    auto joined = dktest::naive_join(r_set, s_set);
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t j = 0; j < dc; ++j) {
        CHECK(evaluated.at(0, i * dc + j) == (joined.count({i, j}) > 0));
      }
    }
  }
}

TEST_CASE("tensor functors validate arrow shapes against the object map") {
  Ob x{"x"}, y{"y"};
  Box f("f", Ty{x}, Ty{y});
  std::map<Box, TensorReal> ar;
  ar.emplace(f, TensorReal(Dim{3}, Dim{3}, std::vector<double>(9, 0.0)));
  CHECK_THROWS_AS(
      (TensorFunctor<double>({{x, Dim{2}}, {y, Dim{3}}}, std::move(ar))),
      ShapeError);
}

TEST_CASE("named arrays resolve by box name against the object map") {
  Ob x{"x"}, y{"y"};
  TensorFunctor<double> functor({{x, Dim()}, {y, Dim{2}}}, {});
  functor.set_named_array("f", {0.0, 1.0});
  Box f("f", Ty{x}, Ty{y});
  auto image = functor(Diagram::from_box(f));
  CHECK(image == TensorReal(Dim(), Dim{2}, {0, 1}));
  functor.set_named_array("g", {1.0});
  Box g("g", Ty{x}, Ty{y});
  CHECK_THROWS_AS(functor(Diagram::from_box(g)), ShapeError);
}
