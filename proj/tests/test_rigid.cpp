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

#include "dk/functor.hpp"
#include "dk/rigid.hpp"
#include "dk/tensor.hpp"
#include "gen.hpp"

using namespace dk;
using rigid::caps;
using rigid::cups;
using rigid::left;
using rigid::right;

namespace {

const Ob x{"x"}, y{"y"}, n{"n"};

rigid::PregroupGrammar arithmetic_grammar() {
  Ty noun{n};
  Ty op{right(n), n, left(n)};
  Ty verb{right(n), Ob("s"), left(n)};
  return rigid::PregroupGrammar(
      {"one", "two", "three", "plus", "equals"}, {"n", "s"}, Ob("s"),
      {{"one", noun},
       {"two", noun},
       {"three", noun},
       {"plus", op},
       {"equals", verb}});
}

}  // namespace

TEST_CASE("adjoints shift windings and reverse words") {
  CHECK(left(Ob("x", 3)) == Ob("x", 2));
  CHECK(right(Ob("x", -2)) == Ob("x", -1));
  CHECK(left(right(x)) == x);
  CHECK(right(left(x)) == x);

  dktest::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Ob> atoms;
    for (std::size_t i = 0; i < rng.below(5); ++i) {
      atoms.emplace_back(dktest::atom_pool()[rng.below(4)], rng.range(-2, 2));
    }
    Ty t(atoms);
    CHECK(left(right(t)) == t);
    CHECK(right(left(t)) == t);
    Ty u = dktest::random_ty(rng, 3);
    CHECK(left(t.tensor(u)) == left(u).tensor(left(t)));
    CHECK(right(t.tensor(u)) == right(u).tensor(right(t)));
  }
  CHECK(left(Ty()) == Ty());
  CHECK(right(Ty()) == Ty());
}

TEST_CASE("cup and cap boxes pair an atom with its adjoint only") {
  CHECK(Box::cup(x, right(x)).dom() == Ty{x, right(x)});
  CHECK(Box::cup(x, right(x)).cod() == Ty());
  CHECK(Box::cap(x, left(x)).cod() == Ty{x, left(x)});
  CHECK_THROWS_AS(Box::cup(x, y), ValidationError);
  CHECK_THROWS_AS(Box::cup(x, Ob("x", 2)), ValidationError);
  CHECK_THROWS_AS(Box::cap(x, x), ValidationError);
}

TEST_CASE("dagger swaps cups and caps") {
  Box cup = Box::cup(x, right(x));
  Box flipped = cup.dagger();
  CHECK(flipped.kind() == BoxKind::cap);
  CHECK(flipped.cod() == Ty{x, right(x)});
  CHECK(flipped.dagger() == cup);
}

TEST_CASE("cups nest innermost-first") {
  CHECK(cups(Ty()) == Diagram::id(Ty()));
  Diagram single = cups(Ty{x});
  CHECK(single.boxes() == std::vector<Box>{Box::cup(x, right(x))});

  Diagram nested = cups(Ty{x, y});
  CHECK(nested.dom() == Ty{x, y, right(y), right(x)});
  CHECK(nested.cod() == Ty());
  CHECK(nested.boxes() ==
        std::vector<Box>{Box::cup(y, right(y)), Box::cup(x, right(x))});
  CHECK(nested.offsets() == std::vector<std::size_t>{1, 0});

  Diagram capped = caps(Ty{x, y});
  CHECK(capped.cod() == Ty{x, y, left(y), left(x)});
  CHECK(capped.offsets() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("cups evaluate to the reshaped identity") {
  tensor::TensorFunctor<double> functor(
      {{x, tensor::Dim{2}}, {y, tensor::Dim{3}}}, {});
  auto evaluated = functor(cups(Ty{x, y}));
  auto expected = tensor::TensorReal::cups(tensor::Dim{2, 3});
  CHECK(evaluated == expected);
  CHECK(evaluated.dom().total() == 36);
}

TEST_CASE("yanking reduces both snake orientations to the identity") {
  // wire x, cap (x^r, x) on its right, cup (x, x^r) below-left
  Diagram right_leg =
      Diagram::id(Ty{x}).tensor(Diagram::from_box(Box::cap(right(x), x)));
  Diagram snake_a = right_leg.then(
      Diagram::from_box(Box::cup(x, right(x))).tensor(Diagram::id(Ty{x})));
  CHECK(rigid::snake_normal_form(snake_a) == Diagram::id(Ty{x}));

  // mirrored: cap (x, x^l) on the left, cup (x^l, x) below-right
  Diagram left_leg =
      Diagram::from_box(Box::cap(x, left(x))).tensor(Diagram::id(Ty{x}));
  Diagram snake_b = left_leg.then(
      Diagram::id(Ty{x}).tensor(Diagram::from_box(Box::cup(left(x), x))));
  CHECK(rigid::snake_normal_form(snake_b) == Diagram::id(Ty{x}));
}

TEST_CASE("snake removal leaves cupless diagrams to the interchangers") {
  dktest::Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    Diagram d = dktest::random_connected_diagram(rng, {});
    CHECK(rigid::snake_normal_form(d) == normal_form(d));
  }
}

TEST_CASE("circles are scalars, not snakes") {
  Diagram circle = Diagram::from_box(Box::cap(right(x), x))
                       .then(Diagram::from_box(Box::cup(right(x), x)));
  auto result = rigid::remove_snakes(circle);
  CHECK(result.snakes_removed == 0);
  CHECK(result.diagram == circle);
}

TEST_CASE("snake removal is invariant under tensor semantics") {
  dktest::Rng rng(33);
  int with_snakes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    dktest::DiagramOpts opts;
    opts.rigid = true;
    opts.max_boxes = 5;
    opts.max_width = 4;
    Diagram d = dktest::random_diagram(rng, opts);
    auto removed = rigid::remove_snakes(d);
    if (removed.snakes_removed > 0) ++with_snakes;
    auto functor = dktest::random_tensor_functor(rng, d, 2);
    CHECK(functor(removed.diagram).approx_equal(functor(d), 1e-9));
  }
  CHECK(with_snakes > 0);  // the generator must actually exercise snakes
}

TEST_CASE("obstructed snakes interchange out of the way") {
  // a box sits between the cap and the cup, to the right of the snake wire
  Box g("g", Ty{x}, Ty{y});
  Diagram d = Diagram::id(Ty{x})
                  .tensor(Diagram::from_box(Box::cap(right(x), x)))
                  .then(Diagram::id(Ty{x, right(x)})
                            .tensor(Diagram::from_box(g)))
                  .then(Diagram::from_box(Box::cup(x, right(x)))
                            .tensor(Diagram::id(Ty{y})));
  auto removed = rigid::remove_snakes(d);
  CHECK(removed.snakes_removed == 1);
  CHECK(removed.diagram.boxes() == std::vector<Box>{g});
  CHECK(rigid::snake_normal_form(d) == Diagram::from_box(g));
}

TEST_CASE("free diagram functors expand atoms into words") {
  // x maps to a two-atom word; cups follow along as nested cups
  Ob a{"a"}, b{"b"};
  Box f("f", Ty{x}, Ty{x});
  Box f_image("F", Ty{a, b}, Ty{a, b});
  DiagramTarget functor({{x, Ty{a, b}}}, {{f, Diagram::from_box(f_image)}});

  Diagram image = apply_functor(functor, Diagram::from_box(f));
  CHECK(image == Diagram::from_box(f_image));

  Diagram cup_image = apply_functor(
      functor, Diagram::from_box(Box::cup(x, right(x))));
  CHECK(cup_image == cups(Ty{a, b}));
  CHECK(cup_image.dom() == Ty{a, b, right(b), right(a)});

  // functoriality over composition
  Diagram chained = Diagram::from_box(f).then(Diagram::from_box(f));
  CHECK(apply_functor(functor, chained) ==
        Diagram::from_box(f_image).then(Diagram::from_box(f_image)));

  // daggered boxes fall back to the daggered image
  Diagram dagger_image =
      apply_functor(functor, Diagram::from_box(f.dagger()));
  CHECK(dagger_image == Diagram::from_box(f_image).dagger());

  CHECK_THROWS_AS(
      apply_functor(functor, Diagram::from_box(Box("g", Ty{x}, Ty{x}))),
      MappingError);
}

TEST_CASE("grammar invariants are validated") {
  CHECK_THROWS_AS(
      rigid::PregroupGrammar({"w"}, {"n"}, Ob("s"), {{"w", Ty{n}}}),
      ValidationError);
  CHECK_THROWS_AS(
      rigid::PregroupGrammar({"w"}, {"n", "s"}, Ob("s"), {{"v", Ty{n}}}),
      ValidationError);
  CHECK_THROWS_AS(
      rigid::PregroupGrammar({"w"}, {"n", "s"}, Ob("s"), {{"w", Ty{x}}}),
      ValidationError);
}

TEST_CASE("the arithmetic sentence parses to the sentence type") {
  auto grammar = arithmetic_grammar();
  auto words = rigid::split_words("one plus two equals three");
  auto parsed = rigid::parse_sentence(grammar, words);
  REQUIRE(parsed.has_value());
  CHECK(parsed->cod() == Ty{Ob("s")});
  CHECK(parsed->dom() ==
        Ty{Ob("one"), Ob("plus"), Ob("two"), Ob("equals"), Ob("three")});

  // soundness: word boxes then cups only
  for (std::size_t i = 0; i < parsed->size(); ++i) {
    const Box& box = parsed->boxes()[i];
    bool is_word = box.kind() == BoxKind::plain &&
                   grammar.vocabulary().count(box.name()) > 0;
    bool is_cup = box.kind() == BoxKind::cup;
    CHECK((is_word || is_cup));
  }
}

TEST_CASE("ungrammatical word lists fail to parse") {
  auto grammar = arithmetic_grammar();
  CHECK_FALSE(rigid::parse_sentence(grammar, {"one"}).has_value());
  CHECK_FALSE(
      rigid::parse_sentence(grammar, {"one", "three", "plus"}).has_value());
  CHECK_FALSE(rigid::parse_sentence(grammar, {"one", "plus"}).has_value());
  CHECK_THROWS_AS(rigid::parse_sentence(grammar, {"one", "xyzzy"}),
                  UnknownWordError);
}

TEST_CASE("a parse targeted at a basic type matches the expected reduction") {
  auto grammar = arithmetic_grammar();
  auto parsed =
      rigid::parse_sentence(grammar, {"one", "plus", "two"}, Ob("n"));
  REQUIRE(parsed.has_value());
  CHECK(parsed->cod() == Ty{n});

  // the expected diagram: three word boxes, then the two cups
  Box one("one", Ty(Ob("one")), Ty{n});
  Box plus("plus", Ty(Ob("plus")), Ty{right(n), n, left(n)});
  Box two("two", Ty(Ob("two")), Ty{n});
  Diagram words = Diagram::from_box(one)
                      .tensor(Diagram::from_box(plus))
                      .tensor(Diagram::from_box(two));
  Diagram reduction =
      Diagram::from_box(Box::cup(n, right(n)))
          .tensor(Diagram::id(Ty{n, left(n), n}))
          .then(Diagram::id(Ty{n})
                    .tensor(Diagram::from_box(Box::cup(left(n), n))));
  Diagram expected = words.then(reduction);
  CHECK(normal_form(*parsed) == normal_form(expected));
}

namespace {

// Brute-force reachability: can the atom list reduce to exactly [target] by
// repeatedly deleting an adjacent (a, right(a)) pair? Independent of the
// stack parser.
bool reduces_by_search(const std::vector<Ob>& atoms, const Ob& target) {
  std::set<std::vector<std::pair<std::string, int>>> seen;
  std::vector<std::vector<Ob>> frontier = {atoms};
  auto key = [](const std::vector<Ob>& word) {
    std::vector<std::pair<std::string, int>> k;
    for (const Ob& a : word) k.emplace_back(a.name(), a.z());
    return k;
  };
  seen.insert(key(atoms));
  while (!frontier.empty()) {
    std::vector<Ob> word = std::move(frontier.back());
    frontier.pop_back();
    if (word.size() == 1 && word[0] == target) return true;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i].name() == word[i + 1].name() &&
          word[i + 1].z() == word[i].z() + 1) {
        std::vector<Ob> next;
        next.insert(next.end(), word.begin(), word.begin() + i);
        next.insert(next.end(), word.begin() + i + 2, word.end());
        if (seen.insert(key(next)).second) frontier.push_back(next);
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("the parser agrees with a brute-force reduction search") {
  dktest::Rng rng(34);
  int parses_found = 0;
  for (int trial = 0; trial < 150; ++trial) {
    // a random dictionary over one basic type plus the sentence type
    std::vector<std::pair<std::string, Ty>> dict;
    std::set<std::string> vocab;
    for (int w = 0; w < 3; ++w) {
      std::string word = "w" + std::to_string(w);
      vocab.insert(word);
      std::vector<Ob> atoms;
      std::size_t len = 1 + rng.below(3);
      for (std::size_t k = 0; k < len; ++k) {
        atoms.emplace_back(rng.chance(0.8) ? "n" : "s", rng.range(-1, 1));
      }
      dict.emplace_back(word, Ty(std::move(atoms)));
    }
    rigid::PregroupGrammar grammar(vocab, {"n", "s"}, Ob("s"), dict);

    std::vector<std::string> words;
    std::size_t n_words = 1 + rng.below(3);
    for (std::size_t k = 0; k < n_words; ++k) {
      words.push_back("w" + std::to_string(rng.below(3)));
    }

    // oracle: existence over every dictionary choice (each word has one type)
    std::vector<Ob> atoms;
    for (const auto& word : words) {
      const auto types = grammar.types_of(word);
      for (const Ob& atom : types[0]) {
        atoms.push_back(atom);
      }
    }
    bool expected = reduces_by_search(atoms, Ob("n"));
    auto parsed = rigid::parse_sentence(grammar, words, Ob("n"));
    CHECK(parsed.has_value() == expected);
    if (parsed) {
      ++parses_found;
      CHECK(parsed->cod() == Ty{Ob("n")});
    }
  }
  CHECK(parses_found > 0);
}

TEST_CASE("ambiguous dictionaries report every parse") {
  // "bank" is both a noun and an operator
  rigid::PregroupGrammar grammar(
      {"bank", "one"}, {"n", "s"}, Ob("s"),
      {{"one", Ty{n}},
       {"bank", Ty{n}},
       {"bank", Ty{right(n), n}}});
  auto all = rigid::parse_all(grammar, {"one", "bank"}, Ob("n"));
  CHECK(all.size() == 1);  // only the operator reading reduces
  auto single = rigid::parse_all(grammar, {"bank"}, Ob("n"));
  CHECK(single.size() == 1);

  // dictionary order decides which parse comes first
  auto first = rigid::parse_sentence(grammar, {"bank"}, Ob("n"));
  REQUIRE(first.has_value());
  CHECK(first->boxes()[0].cod() == Ty{n});
}
