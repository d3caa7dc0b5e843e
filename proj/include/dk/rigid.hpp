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

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dk/monoidal.hpp"

namespace dk::rigid {

/// Adjoints of atoms shift the winding; adjoints of words also reverse.
Ob left(const Ob& x);
Ob right(const Ob& x);
Ty left(const Ty& t);
Ty right(const Ty& t);
/// z-fold adjoint: negative z applies `left`, positive applies `right`.
Ob shifted(const Ob& x, int z);
Ty shifted(const Ty& t, int z);

/// Which adjoint the second leg of a cup/cap takes relative to the first.
enum class Wind { right_adjoint, left_adjoint };

/// Nested evaluation t @ right(t) -> (); the innermost pair is cupped first.
/// `wind` selects t @ left(t) instead.
Diagram cups(const Ty& t, Wind wind = Wind::right_adjoint);
/// Nested coevaluation () -> t @ left(t), outermost pair capped first.
Diagram caps(const Ty& t, Wind wind = Wind::left_adjoint);

struct SnakeRemovalResult {
  Diagram diagram;
  std::size_t snakes_removed = 0;
};

/// Removes every yankable cup/cap pair (scanning caps top to bottom and
/// restarting after each removal), leaving interchangers untouched.
SnakeRemovalResult remove_snakes(const Diagram& d);

/// Snake removal followed by interchanger normal form. Inherits the
/// boundary-connectivity requirement of the final step.
Diagram snake_normal_form(const Diagram& d, bool left = false);

/// Lexicon mapping words to adjoint-decorated types over a set of basic
/// atoms; grammaticality is cup-only reduction to the sentence type.
class PregroupGrammar {
 public:
  PregroupGrammar(std::set<std::string> vocabulary,
                  std::set<std::string> basic_types, Ob sentence_type,
                  std::vector<std::pair<std::string, Ty>> dictionary);

  const std::set<std::string>& vocabulary() const { return vocabulary_; }
  const std::set<std::string>& basic_types() const { return basic_types_; }
  const Ob& sentence_type() const { return sentence_type_; }
  const std::vector<std::pair<std::string, Ty>>& dictionary() const {
    return dictionary_;
  }
  /// All dictionary types for one word, in dictionary order.
  std::vector<Ty> types_of(const std::string& word) const;

  friend bool operator==(const PregroupGrammar&, const PregroupGrammar&);

 private:
  std::set<std::string> vocabulary_;
  std::set<std::string> basic_types_;
  Ob sentence_type_;
  std::vector<std::pair<std::string, Ty>> dictionary_;
};

/// Backtracking search for a cup-only reduction of the words' types to the
/// target (the sentence type by default). Returns the full diagram -- word
/// boxes then cups/identities -- or nullopt when no reduction exists.
/// Throws UnknownWordError for words outside the vocabulary.
std::optional<Diagram> parse_sentence(const PregroupGrammar& grammar,
                                      const std::vector<std::string>& words,
                                      std::optional<Ob> target = std::nullopt);

/// Every parse, over all dictionary type choices and reduction orders, in
/// dictionary order; duplicates removed.
std::vector<Diagram> parse_all(const PregroupGrammar& grammar,
                               const std::vector<std::string>& words,
                               std::optional<Ob> target = std::nullopt,
                               std::size_t limit = 64);

std::vector<std::string> split_words(const std::string& sentence);

}  // namespace dk::rigid
