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

#include "dk/rigid.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace dk {

// Box factories for the rigid generators live here with the module.

Box Box::cup(const Ob& a, const Ob& b) {
  if (a.name() != b.name() || std::abs(a.z() - b.z()) != 1) {
    throw ValidationError("cup must pair an atom with its adjoint, got " +
                          a.token() + " and " + b.token());
  }
  return Box::raw("cup", Ty{a, b}, Ty(), nullptr, false, BoxKind::cup);
}

Box Box::cap(const Ob& a, const Ob& b) {
  if (a.name() != b.name() || std::abs(a.z() - b.z()) != 1) {
    throw ValidationError("cap must pair an atom with its adjoint, got " +
                          a.token() + " and " + b.token());
  }
  return Box::raw("cap", Ty(), Ty{a, b}, nullptr, false, BoxKind::cap);
}

}  // namespace dk

namespace dk::rigid {

Ob left(const Ob& x) { return Ob(x.name(), x.z() - 1); }
Ob right(const Ob& x) { return Ob(x.name(), x.z() + 1); }

Ty left(const Ty& t) {
  std::vector<Ob> obs;
  obs.reserve(t.size());
  for (std::size_t i = t.size(); i-- > 0;) obs.push_back(left(t[i]));
  return Ty(std::move(obs));
}

Ty right(const Ty& t) {
  std::vector<Ob> obs;
  obs.reserve(t.size());
  for (std::size_t i = t.size(); i-- > 0;) obs.push_back(right(t[i]));
  return Ty(std::move(obs));
}

Ob shifted(const Ob& x, int z) { return Ob(x.name(), x.z() + z); }

Ty shifted(const Ty& t, int z) {
  if (z == 0) return t;
  Ty out = t;
  int steps = z > 0 ? z : -z;
  for (int i = 0; i < steps; ++i) out = z > 0 ? right(out) : left(out);
  return out;
}

Diagram cups(const Ty& t, Wind wind) {
  auto adjoint = [&](const Ob& x) {
    return wind == Wind::right_adjoint ? right(x) : left(x);
  };
  Ty dom = t.tensor(wind == Wind::right_adjoint ? right(t) : left(t));
  std::vector<Box> boxes;
  std::vector<std::size_t> offsets;
  for (std::size_t i = t.size(); i-- > 0;) {
    boxes.push_back(Box::cup(t[i], adjoint(t[i])));
    offsets.push_back(i);
  }
  return Diagram(std::move(dom), std::move(boxes), std::move(offsets));
}

Diagram caps(const Ty& t, Wind wind) {
  auto adjoint = [&](const Ob& x) {
    return wind == Wind::left_adjoint ? left(x) : right(x);
  };
  std::vector<Box> boxes;
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < t.size(); ++i) {
    boxes.push_back(Box::cap(t[i], adjoint(t[i])));
    offsets.push_back(i);
  }
  return Diagram(Ty(), std::move(boxes), std::move(offsets));
}

// ---------------------------------------------------------------------------
// Snake removal

namespace {

struct WireEnd {
  std::size_t box = 0;       // index of the consuming box, or diagram size
  std::size_t position = 0;  // absolute wire position at that level
  std::vector<std::size_t> left_of_wire;   // boxes passed on the left
  std::vector<std::size_t> right_of_wire;  // boxes passed on the right
};

// Follows the wire sitting at absolute `position` just below box `from`,
// classifying every box passed until the wire is consumed or reaches the
// codomain.
WireEnd follow_wire(const Diagram& d, std::size_t from, std::size_t position) {
  WireEnd end;
  std::size_t pos = position;
  for (std::size_t k = from + 1; k < d.size(); ++k) {
    const Box& box = d.boxes()[k];
    std::size_t off = d.offsets()[k];
    std::size_t arity = box.dom().size();
    if (off <= pos && pos < off + arity) {
      end.box = k;
      end.position = pos;
      return end;
    }
    if (off + arity <= pos) {
      pos += box.cod().size();
      pos -= arity;
      end.left_of_wire.push_back(k);
    } else {
      end.right_of_wire.push_back(k);
    }
  }
  end.box = d.size();
  end.position = pos;
  return end;
}

struct Snake {
  std::size_t cap = 0;
  std::size_t cup = 0;
  bool left_snake = false;  // followed the cap's left leg into the cup's right port
  std::vector<std::size_t> left_of_wire;
  std::vector<std::size_t> right_of_wire;
};

std::optional<Snake> find_snake(const Diagram& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.boxes()[i].kind() != BoxKind::cap) continue;
    const Ty& pair = d.boxes()[i].cod();
    std::size_t off = d.offsets()[i];
    for (bool left_snake : {true, false}) {
      std::size_t leg = left_snake ? off : off + 1;
      WireEnd end = follow_wire(d, i, leg);
      if (end.box == d.size()) continue;
      const Box& candidate = d.boxes()[end.box];
      if (candidate.kind() != BoxKind::cup) continue;
      std::size_t port = end.position - d.offsets()[end.box];
      if (left_snake ? port != 1 : port != 0) continue;
      // the spliced wire must carry the same atom on both loose ends
      const Ob& loose_top = left_snake ? pair[1] : pair[0];
      const Ob& loose_bottom =
          left_snake ? candidate.dom()[0] : candidate.dom()[1];
      if (loose_top != loose_bottom) continue;
      Snake snake;
      snake.cap = i;
      snake.cup = end.box;
      snake.left_snake = left_snake;
      snake.left_of_wire = std::move(end.left_of_wire);
      snake.right_of_wire = std::move(end.right_of_wire);
      return snake;
    }
  }
  return std::nullopt;
}

// Moves the box at `from` up to index `to` (to < from) one adjacent
// interchange at a time.
Diagram move_up(Diagram d, std::size_t from, std::size_t to) {
  for (std::size_t k = from; k-- > to;) {
    d = d.interchange(k + 1, k);
  }
  return d;
}

Diagram remove_one_snake(Diagram d, Snake snake) {
  std::size_t cap = snake.cap;
  std::size_t cup = snake.cup;
  // Obstructions on the loose-wire side cross the cup; the others cross the
  // cap. Which side is loose depends on the snake's orientation.
  const auto& cross_cap =
      snake.left_snake ? snake.left_of_wire : snake.right_of_wire;
  const auto& cross_cup =
      snake.left_snake ? snake.right_of_wire : snake.left_of_wire;

  std::vector<std::size_t> to_cap(cross_cap.begin(), cross_cap.end());
  std::vector<std::size_t> to_cup(cross_cup.begin(), cross_cup.end());
  std::sort(to_cap.begin(), to_cap.end());
  std::sort(to_cup.begin(), to_cup.end());

  // topmost first, each lands directly above the cap
  for (std::size_t n = 0; n < to_cap.size(); ++n) {
    std::size_t b = to_cap[n];
    d = move_up(std::move(d), b, cap);
    ++cap;
    for (std::size_t m = n + 1; m < to_cap.size(); ++m) {
      if (to_cap[m] < b) ++to_cap[m];
    }
    for (auto& other : to_cup) {
      if (other < b) ++other;
    }
  }
  // bottom-most first, each steps once past the cup
  for (std::size_t n = to_cup.size(); n-- > 0;) {
    std::size_t b = to_cup[n];
    if (b + 1 != cup) {
      throw Error("internal: snake obstruction bookkeeping out of step");
    }
    d = d.interchange(b, b + 1);
    --cup;
  }

  bool adjacent_and_nested =
      cup == cap + 1 && d.boxes()[cap].kind() == BoxKind::cap &&
      d.boxes()[cup].kind() == BoxKind::cup &&
      (snake.left_snake ? d.offsets()[cup] + 1 == d.offsets()[cap]
                        : d.offsets()[cup] == d.offsets()[cap] + 1);
  if (!adjacent_and_nested) {
    throw Error("internal: cup and cap failed to meet for splicing");
  }

  std::vector<Box> boxes = d.boxes();
  std::vector<std::size_t> offsets = d.offsets();
  boxes.erase(boxes.begin() + static_cast<long>(cap),
              boxes.begin() + static_cast<long>(cup) + 1);
  offsets.erase(offsets.begin() + static_cast<long>(cap),
                offsets.begin() + static_cast<long>(cup) + 1);
  return Diagram(d.dom(), d.cod(), std::move(boxes), std::move(offsets));
}

}  // namespace

SnakeRemovalResult remove_snakes(const Diagram& d) {
  SnakeRemovalResult result{d, 0};
  while (auto snake = find_snake(result.diagram)) {
    result.diagram = remove_one_snake(std::move(result.diagram), *snake);
    ++result.snakes_removed;
  }
  return result;
}

Diagram snake_normal_form(const Diagram& d, bool left) {
  return normal_form(remove_snakes(d).diagram, left);
}

// ---------------------------------------------------------------------------
// Pregroup grammar

PregroupGrammar::PregroupGrammar(
    std::set<std::string> vocabulary, std::set<std::string> basic_types,
    Ob sentence_type, std::vector<std::pair<std::string, Ty>> dictionary)
    : vocabulary_(std::move(vocabulary)),
      basic_types_(std::move(basic_types)),
      sentence_type_(std::move(sentence_type)),
      dictionary_(std::move(dictionary)) {
  if (sentence_type_.z() != 0 || !basic_types_.count(sentence_type_.name())) {
    throw ValidationError("sentence type " + sentence_type_.token() +
                          " is not a basic type");
  }
  for (const auto& [word, ty] : dictionary_) {
    if (!vocabulary_.count(word)) {
      throw ValidationError("dictionary word \"" + word +
                            "\" is not in the vocabulary");
    }
    for (const Ob& atom : ty) {
      if (!basic_types_.count(atom.name())) {
        throw ValidationError("dictionary type for \"" + word +
                              "\" uses non-basic atom " + atom.token());
      }
    }
  }
}

std::vector<Ty> PregroupGrammar::types_of(const std::string& word) const {
  std::vector<Ty> out;
  for (const auto& [w, ty] : dictionary_) {
    if (w == word) out.push_back(ty);
  }
  return out;
}

bool operator==(const PregroupGrammar& a, const PregroupGrammar& b) {
  return a.vocabulary_ == b.vocabulary_ && a.basic_types_ == b.basic_types_ &&
         a.sentence_type_ == b.sentence_type_ && a.dictionary_ == b.dictionary_;
}

std::vector<std::string> split_words(const std::string& sentence) {
  std::vector<std::string> words;
  std::istringstream in(sentence);
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

namespace {

// Cups only ever cancel an atom followed by its right adjoint, so reductions
// are non-crossing matchings; a backtracking stack parser enumerates exactly
// those. The stack holds (atom, global position) pairs; `pops` records the
// matched pairs in the order they cancel.
struct ParseSearch {
  const std::vector<std::vector<Ty>>& choices;  // per word, dictionary order
  Ty target;
  bool all_parses;
  std::size_t limit;

  std::vector<std::pair<Ob, std::size_t>> stack;
  std::vector<std::size_t> chosen;                        // type index per word
  std::vector<std::pair<std::size_t, std::size_t>> pops;  // matched positions
  std::size_t next_position = 0;

  struct Solution {
    std::vector<std::size_t> chosen;
    std::vector<std::pair<std::size_t, std::size_t>> pops;
  };
  std::vector<Solution> solutions;
  std::unordered_set<std::string> failed;

  std::string state_key(std::size_t word) const {
    std::string key = std::to_string(word);
    for (const auto& [atom, pos] : stack) {
      key += '|';
      key += atom.token();
    }
    return key;
  }

  bool done() const { return !all_parses && !solutions.empty(); }

  // feeds the atoms of one type, branching on cancel-vs-push at each step
  bool feed(std::size_t word, const Ty& ty, std::size_t index) {
    if (index == ty.size()) return word_boundary(word + 1);
    const Ob& atom = ty[index];
    std::size_t position = next_position++;
    bool progressed = false;
    if (!stack.empty() && stack.back().first.name() == atom.name() &&
        atom.z() == stack.back().first.z() + 1) {
      auto popped = stack.back();
      stack.pop_back();
      pops.emplace_back(popped.second, position);
      progressed |= feed(word, ty, index + 1);
      pops.pop_back();
      stack.push_back(popped);
      if (done()) {
        --next_position;
        return progressed;
      }
    }
    stack.emplace_back(atom, position);
    progressed |= feed(word, ty, index + 1);
    stack.pop_back();
    --next_position;
    return progressed;
  }

  bool word_boundary(std::size_t word) {
    if (word == choices.size()) {
      Ty remaining;
      {
        std::vector<Ob> atoms;
        for (const auto& [atom, pos] : stack) atoms.push_back(atom);
        remaining = Ty(std::move(atoms));
      }
      if (remaining != target) return false;
      solutions.push_back({chosen, pops});
      return true;
    }
    std::string key = state_key(word);
    if (failed.count(key)) return false;
    bool progressed = false;
    for (std::size_t t = 0; t < choices[word].size(); ++t) {
      chosen.push_back(t);
      progressed |= feed(word, choices[word][t], 0);
      chosen.pop_back();
      if (done() || solutions.size() >= limit) return progressed;
    }
    if (!progressed && !done() && solutions.size() < limit) {
      failed.insert(key);
    }
    return progressed;
  }
};

Diagram build_parse_diagram(const std::vector<std::string>& words,
                            const std::vector<std::vector<Ty>>& choices,
                            const ParseSearch::Solution& solution) {
  // word boxes, tensored left to right
  Diagram d = Diagram::id(Ty());
  std::vector<Ob> flattened;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Ty& ty = choices[i][solution.chosen[i]];
    d = d.tensor(Diagram::from_box(Box(words[i], Ty(Ob(words[i])), ty)));
    for (const Ob& atom : ty) flattened.push_back(atom);
  }

  // cup layers in cancellation order; offsets count surviving atoms
  std::vector<bool> alive(flattened.size(), true);
  Diagram reduction = Diagram::id(Ty(flattened));
  for (const auto& [i, j] : solution.pops) {
    std::size_t offset = 0;
    for (std::size_t k = 0; k < i; ++k) {
      if (alive[k]) ++offset;
    }
    std::vector<Box> boxes = {Box::cup(flattened[i], flattened[j])};
    reduction = reduction.then(
        Diagram(reduction.cod(), std::move(boxes), {offset}));
    alive[i] = alive[j] = false;
  }
  return d.then(reduction);
}

std::vector<Diagram> run_parse(const PregroupGrammar& grammar,
                               const std::vector<std::string>& words,
                               std::optional<Ob> target, bool all_parses,
                               std::size_t limit) {
  std::vector<std::vector<Ty>> choices;
  for (const auto& word : words) {
    if (!grammar.vocabulary().count(word)) {
      throw UnknownWordError("word \"" + word +
                             "\" is not in the grammar's vocabulary");
    }
    choices.push_back(grammar.types_of(word));
  }
  Ob goal = target.value_or(grammar.sentence_type());
  ParseSearch search{choices, Ty(goal), all_parses, limit, {}, {}, {}, 0,
                     {},      {}};
  search.word_boundary(0);
  std::vector<Diagram> parses;
  for (const auto& solution : search.solutions) {
    Diagram d = build_parse_diagram(words, choices, solution);
    if (std::find(parses.begin(), parses.end(), d) == parses.end()) {
      parses.push_back(std::move(d));
    }
  }
  return parses;
}

}  // namespace

std::optional<Diagram> parse_sentence(const PregroupGrammar& grammar,
                                      const std::vector<std::string>& words,
                                      std::optional<Ob> target) {
  auto parses = run_parse(grammar, words, target, false, 1);
  if (parses.empty()) return std::nullopt;
  return parses.front();
}

std::vector<Diagram> parse_all(const PregroupGrammar& grammar,
                               const std::vector<std::string>& words,
                               std::optional<Ob> target, std::size_t limit) {
  return run_parse(grammar, words, target, true, limit);
}

}  // namespace dk::rigid
